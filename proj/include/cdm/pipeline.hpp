#pragma once

#include <array>

#include "cdm/dipole.hpp"
#include "cdm/sat.hpp"
#include "cdm/window.hpp"

namespace cdm {

enum class Engine { Naive, Fast };

struct ChannelMoments {
    DipoleField dipole;
    ScalarField magnitude;
};

ChannelMoments compute_moments(const ScalarField& field, const WindowSpec& spec, Engine engine);

std::array<ChannelMoments, 3> color_moments(const Bitmap& image, const WindowSpec& spec,
                                            Engine engine);
ChannelMoments gray_moments(const GrayBitmap& image, const WindowSpec& spec, Engine engine);

Bitmap render_moments(const std::array<ChannelMoments, 3>& moments, const RenderParams& params);
GrayBitmap render_gray_moments(const ChannelMoments& moments, const RenderParams& params);

}  // namespace cdm
