#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cdm/errors.hpp"

namespace cdm {

/// One real-valued plane, indexed (row i, column j). Row-major to match
/// raster order; rows grow downward, columns rightward, origin top-left.
using ScalarField = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Interleaved 8-bit RGB raster. Channels are 1 = red, 2 = green, 3 = blue.
struct Bitmap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // row-major, 3 samples per pixel

    Bitmap() = default;
    Bitmap(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::uint8_t& at(int i, int j, int c) {
        return samples[(static_cast<std::size_t>(i) * width + j) * 3 + (c - 1)];
    }
    std::uint8_t at(int i, int j, int c) const {
        return samples[(static_cast<std::size_t>(i) * width + j) * 3 + (c - 1)];
    }

    bool valid() const {
        return width >= 1 && height >= 1 &&
               samples.size() == static_cast<std::size_t>(width) * height * 3;
    }
};

/// Single-channel 8-bit raster.
struct GrayBitmap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // row-major

    GrayBitmap() = default;
    GrayBitmap(int w, int h) : width(w), height(h), samples(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t& at(int i, int j) { return samples[static_cast<std::size_t>(i) * width + j]; }
    std::uint8_t at(int i, int j) const { return samples[static_cast<std::size_t>(i) * width + j]; }

    bool valid() const {
        return width >= 1 && height >= 1 &&
               samples.size() == static_cast<std::size_t>(width) * height;
    }
};

/// Copies channel c (1..3) into a real-valued plane. Throws InvalidChannel
/// for any other c.
ScalarField channel_plane(const Bitmap& bitmap, int c);

/// Real-valued plane of a gray raster.
ScalarField gray_plane(const GrayBitmap& gray);

/// Clamps to [0,255] and rounds to nearest, ties away from zero (127.5 -> 128).
std::uint8_t quantize_u8(double value);

/// Per-pixel quantize_u8 over a whole field.
GrayBitmap quantize_gray(const ScalarField& field);

/// Triplicates a gray raster into three equal RGB channels.
Bitmap promote_gray(const GrayBitmap& gray);

}  // namespace cdm
