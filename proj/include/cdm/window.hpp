#pragma once

#include <utility>
#include <vector>

#include "cdm/errors.hpp"

namespace cdm {

/// Out-of-frame window indices are clamped to the frame (Replicate), or the
/// window is only evaluated where it fits entirely (Interior; the overhang
/// ring of any produced field is zeroed).
enum class Border { Replicate, Interior };

/// How the per-pixel charge q entering the moment sum is centered.
/// CenterMean subtracts the evaluated window's own mean from every member,
/// which makes the total window charge exactly zero. OwnMean gives each
/// member the charge of its own neighborhood, q(k,l) = b(k,l) - M(k,l).
enum class ChargeMode { CenterMean, OwnMean };

/// Moment-sum divisor. PixelCount divides by rows*cols; FourDeltaProduct
/// divides by 4*floor(rows/2)*floor(cols/2), which coincides with the pixel
/// count for even windows and is smaller for odd ones (3x3 -> 4, not 9).
enum class Normalization { PixelCount, FourDeltaProduct };

/// Window geometry and charge conventions for the moment operators.
///
/// Coordinate convention: a pixel at (row i, column j) has Cartesian
/// coordinates x = i, y = j, so p_x is the down-the-rows moment and p_y the
/// across-the-columns moment. The anchor rule is center-biased-up: an odd
/// n-window spans [i-(n-1)/2, i+(n-1)/2], an even one [i-n/2+1, i+n/2]
/// (a 2x2 window at (i,j) covers {i,i+1} x {j,j+1}).
///
/// coordinate_offset is added to both pixel coordinates before the moment
/// sum; it exists to exercise origin invariance and defaults to 0.
struct WindowSpec {
    int rows = 2;
    int cols = 2;
    Border border = Border::Replicate;
    ChargeMode charge_mode = ChargeMode::CenterMean;
    Normalization normalization = Normalization::PixelCount;
    double coordinate_offset = 0.0;

    int rows_above() const { return rows % 2 ? (rows - 1) / 2 : rows / 2 - 1; }
    int rows_below() const { return rows / 2; }
    int cols_left() const { return cols % 2 ? (cols - 1) / 2 : cols / 2 - 1; }
    int cols_right() const { return cols / 2; }

    int pixel_count() const { return rows * cols; }

    double divisor() const {
        if (normalization == Normalization::PixelCount) {
            return static_cast<double>(rows) * cols;
        }
        return 4.0 * (rows / 2) * (cols / 2);
    }
};

/// Throws InvalidArgument unless rows and cols are both >= 2. A single-pixel
/// window has zero charge by construction.
void validate_window(const WindowSpec& spec);

/// True when the window anchored at (i,j) lies entirely inside a w x h frame.
bool window_in_frame(const WindowSpec& spec, int i, int j, int w, int h);

/// The window's member pixels in row-major order. Replicate clamps
/// out-of-frame members (duplicates allowed), so the list always has
/// rows*cols entries; Interior throws OutsideInterior when the window
/// overhangs the frame.
std::vector<std::pair<int, int>> window_indices(const WindowSpec& spec, int i, int j, int w,
                                                int h);

}  // namespace cdm
