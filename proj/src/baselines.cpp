#include "cdm/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace cdm {

namespace {

constexpr Kernel3 kSobelX{{{-1.0, -2.0, -1.0}, {0.0, 0.0, 0.0}, {1.0, 2.0, 1.0}}};
constexpr Kernel3 kSobelY{{{-1.0, 0.0, 1.0}, {-2.0, 0.0, 2.0}, {-1.0, 0.0, 1.0}}};
constexpr Kernel3 kLaplace{{{0.0, 1.0, 0.0}, {1.0, -4.0, 1.0}, {0.0, 1.0, 0.0}}};

ScalarField detector_response(const ScalarField& field, BaselineDetector detector) {
    switch (detector) {
        case BaselineDetector::Sobel:
            return sobel_magnitude(field);
        case BaselineDetector::Laplace:
            return laplace_response(field);
        case BaselineDetector::Gradient:
            return gradient_magnitude(field);
    }
    throw InvalidArgument("unknown baseline detector");
}

}  // namespace

ScalarField convolve3(const ScalarField& field, const Kernel3& kernel) {
    const int h = static_cast<int>(field.rows());
    const int w = static_cast<int>(field.cols());
    ScalarField out(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double acc = 0.0;
            for (int di = -1; di <= 1; ++di) {
                int k = std::clamp(i + di, 0, h - 1);
                for (int dj = -1; dj <= 1; ++dj) {
                    acc += kernel[di + 1][dj + 1] * field(k, std::clamp(j + dj, 0, w - 1));
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

ScalarField sobel_magnitude(const ScalarField& field) {
    ScalarField gx = convolve3(field, kSobelX);
    ScalarField gy = convolve3(field, kSobelY);
    return (gx.square() + gy.square()).sqrt();
}

ScalarField laplace_response(const ScalarField& field) {
    return convolve3(field, kLaplace).abs();
}

ScalarField gradient_magnitude(const ScalarField& field) {
    const int h = static_cast<int>(field.rows());
    const int w = static_cast<int>(field.cols());
    ScalarField out(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double gx =
                (field(std::min(i + 1, h - 1), j) - field(std::max(i - 1, 0), j)) / 2.0;
            double gy =
                (field(i, std::min(j + 1, w - 1)) - field(i, std::max(j - 1, 0))) / 2.0;
            out(i, j) = std::sqrt(gx * gx + gy * gy);
        }
    }
    return out;
}

Bitmap run_baseline(const Bitmap& image, BaselineDetector detector, const RenderParams& params) {
    validate_render_params(params);
    std::array<ScalarField, 3> magnitudes;
    for (int c = 1; c <= 3; ++c) {
        magnitudes[c - 1] = detector_response(channel_plane(image, c), detector);
    }
    return render_map(magnitudes, params);
}

GrayBitmap run_gray_baseline(const GrayBitmap& image, BaselineDetector detector,
                             const RenderParams& params) {
    validate_render_params(params);
    return render_gray_map(detector_response(gray_plane(image), detector), params);
}

}  // namespace cdm
