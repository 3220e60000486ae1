#include "cdm/window.hpp"

#include <algorithm>
#include <string>

namespace cdm {

void validate_window(const WindowSpec& spec) {
    if (spec.rows < 2 || spec.cols < 2) {
        throw InvalidArgument("window must be at least 2x2, got " + std::to_string(spec.rows) +
                              "x" + std::to_string(spec.cols));
    }
}

bool window_in_frame(const WindowSpec& spec, int i, int j, int w, int h) {
    return i - spec.rows_above() >= 0 && i + spec.rows_below() < h &&
           j - spec.cols_left() >= 0 && j + spec.cols_right() < w;
}

std::vector<std::pair<int, int>> window_indices(const WindowSpec& spec, int i, int j, int w,
                                                int h) {
    validate_window(spec);
    if (i < 0 || i >= h || j < 0 || j >= w) {
        throw InvalidArgument("window anchor (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(w) + "x" + std::to_string(h) +
                              " frame");
    }
    if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
        throw OutsideInterior("window at (" + std::to_string(i) + "," + std::to_string(j) +
                              ") overhangs the frame");
    }

    std::vector<std::pair<int, int>> indices;
    indices.reserve(static_cast<std::size_t>(spec.rows) * spec.cols);
    for (int k = i - spec.rows_above(); k <= i + spec.rows_below(); ++k) {
        int kc = std::clamp(k, 0, h - 1);
        for (int l = j - spec.cols_left(); l <= j + spec.cols_right(); ++l) {
            indices.emplace_back(kc, std::clamp(l, 0, w - 1));
        }
    }
    return indices;
}

}  // namespace cdm
