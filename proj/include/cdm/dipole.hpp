#pragma once

#include <array>

#include "cdm/image.hpp"
#include "cdm/window.hpp"

namespace cdm {

/// Per-pixel dipole components. p_x is the row-direction moment, p_y the
/// column-direction moment; the magnitude sqrt(px^2 + py^2) is derived.
struct DipoleField {
    ScalarField px;
    ScalarField py;

    int width() const { return static_cast<int>(px.cols()); }
    int height() const { return static_cast<int>(px.rows()); }
};

/// Parameters of the magnitude-to-tone rendering
/// b = gain * 255 * (P / P_Max)^alpha + bias, quantized once at the end.
enum class PmaxPolicy { PerChannel, Global };

struct RenderParams {
    double alpha = 0.5;
    double gain = 1.0;
    double bias = 0.0;
    PmaxPolicy pmax_policy = PmaxPolicy::PerChannel;
};

void validate_render_params(const RenderParams& params);

/// Windowed average of the field, divisor per spec.normalization. Under
/// Interior the overhang ring is zero.
ScalarField local_mean(const ScalarField& field, const WindowSpec& spec);

/// q(i,j) = field(i,j) - local_mean(field)(i,j): each pixel's deviation from
/// its own neighborhood mean. This is the OwnMean charge map.
ScalarField charge_field(const ScalarField& field, const WindowSpec& spec);

/// Windowed first moments of the charge distribution, naive double loop.
/// CenterMean centers every window member on the evaluated window's mean;
/// OwnMean weights each member with its own neighborhood charge.
DipoleField dipole_field(const ScalarField& field, const WindowSpec& spec);

/// sqrt(px^2 + py^2) per pixel.
ScalarField magnitude_field(const DipoleField& d);

/// Largest magnitude of each channel under the given policy; a channel whose
/// maximum is zero renders all-zero.
Bitmap render_map(const std::array<ScalarField, 3>& magnitudes, const RenderParams& params);

/// Single-channel rendering with the same normalization.
GrayBitmap render_gray_map(const ScalarField& magnitude, const RenderParams& params);

/// Full per-channel pipeline: plane -> dipole -> magnitude for each of the
/// three channels, then rendering across them.
Bitmap run_color_dipole(const Bitmap& image, const WindowSpec& spec, const RenderParams& params);

/// Single-channel specialization of run_color_dipole.
GrayBitmap run_gray_dipole(const GrayBitmap& image, const WindowSpec& spec,
                           const RenderParams& params);

}  // namespace cdm
