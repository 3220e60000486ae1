#pragma once

#include <array>

#include "cdm/dipole.hpp"
#include "cdm/image.hpp"

namespace cdm {

/// 3x3 kernel, indexed (row, col) around the center.
using Kernel3 = std::array<std::array<double, 3>, 3>;

enum class BaselineDetector { Sobel, Laplace, Gradient };

/// Full correlation of the field with a 3x3 kernel, replicate borders.
ScalarField convolve3(const ScalarField& field, const Kernel3& kernel);

/// sqrt(Gx^2 + Gy^2) with the standard Sobel pair; x follows the row axis,
/// so Gx = [[-1,-2,-1],[0,0,0],[1,2,1]] and Gy is its transpose.
ScalarField sobel_magnitude(const ScalarField& field);

/// |convolve3(field, [[0,1,0],[1,-4,1],[0,1,0]])|.
ScalarField laplace_response(const ScalarField& field);

/// Central differences along rows and columns (replicate borders),
/// magnitude sqrt(Gx^2 + Gy^2).
ScalarField gradient_magnitude(const ScalarField& field);

/// Per-channel detector response rendered through the same normalization as
/// the dipole maps, so the outputs are visually comparable.
Bitmap run_baseline(const Bitmap& image, BaselineDetector detector, const RenderParams& params);

/// Single-channel counterpart.
GrayBitmap run_gray_baseline(const GrayBitmap& image, BaselineDetector detector,
                             const RenderParams& params);

}  // namespace cdm
