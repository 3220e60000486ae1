#include "cdm/image.hpp"

#include <cmath>
#include <string>

namespace cdm {

ScalarField channel_plane(const Bitmap& bitmap, int c) {
    if (c < 1 || c > 3) {
        throw InvalidChannel("channel index must be 1 (red), 2 (green) or 3 (blue), got " +
                             std::to_string(c));
    }
    ScalarField field(bitmap.height, bitmap.width);
    for (int i = 0; i < bitmap.height; ++i) {
        for (int j = 0; j < bitmap.width; ++j) {
            field(i, j) = static_cast<double>(bitmap.at(i, j, c));
        }
    }
    return field;
}

ScalarField gray_plane(const GrayBitmap& gray) {
    ScalarField field(gray.height, gray.width);
    for (int i = 0; i < gray.height; ++i) {
        for (int j = 0; j < gray.width; ++j) {
            field(i, j) = static_cast<double>(gray.at(i, j));
        }
    }
    return field;
}

std::uint8_t quantize_u8(double value) {
    long rounded = std::lround(value);  // ties away from zero
    if (rounded < 0) return 0;
    if (rounded > 255) return 255;
    return static_cast<std::uint8_t>(rounded);
}

GrayBitmap quantize_gray(const ScalarField& field) {
    GrayBitmap out(static_cast<int>(field.cols()), static_cast<int>(field.rows()));
    for (int i = 0; i < out.height; ++i) {
        for (int j = 0; j < out.width; ++j) {
            out.at(i, j) = quantize_u8(field(i, j));
        }
    }
    return out;
}

Bitmap promote_gray(const GrayBitmap& gray) {
    Bitmap out(gray.width, gray.height);
    for (int i = 0; i < gray.height; ++i) {
        for (int j = 0; j < gray.width; ++j) {
            std::uint8_t v = gray.at(i, j);
            out.at(i, j, 1) = v;
            out.at(i, j, 2) = v;
            out.at(i, j, 3) = v;
        }
    }
    return out;
}

}  // namespace cdm
