#pragma once

#include <string>

#include "cdm/image.hpp"

namespace cdm {

enum class ImageFormat { Png, Ppm, Pgm };

/// Decodes a PNG, binary PPM (P6) or binary PGM (P5) file. The format is
/// detected from the file's magic bytes, not the extension. PGM and
/// grayscale PNG inputs are promoted to three equal channels. 16-bit PNG
/// is rejected; PNG alpha is dropped.
Bitmap load_image(const std::string& path);

/// Encodes to PNG or binary PPM (maxval 255). Round trip through either
/// format reproduces the bitmap sample for sample.
void save_image(const Bitmap& bitmap, const std::string& path, ImageFormat format);

/// Single-channel counterpart: PNG (8-bit gray) or binary PGM.
void save_gray_image(const GrayBitmap& gray, const std::string& path, ImageFormat format);

/// Maps a file extension (".png", ".ppm", ".pgm", case-insensitive) to a
/// format. Throws UnsupportedFormat for anything else.
ImageFormat format_from_extension(const std::string& path);

}  // namespace cdm
