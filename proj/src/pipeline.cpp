#include "cdm/pipeline.hpp"

namespace cdm {

ChannelMoments compute_moments(const ScalarField& field, const WindowSpec& spec, Engine engine) {
    validate_window(spec);
    ChannelMoments out;
    out.dipole = engine == Engine::Fast ? fast_dipole_field(field, spec)
                                        : dipole_field(field, spec);
    out.magnitude = magnitude_field(out.dipole);
    return out;
}

std::array<ChannelMoments, 3> color_moments(const Bitmap& image, const WindowSpec& spec,
                                            Engine engine) {
    std::array<ChannelMoments, 3> out;
    for (int c = 1; c <= 3; ++c) {
        out[c - 1] = compute_moments(channel_plane(image, c), spec, engine);
    }
    return out;
}

ChannelMoments gray_moments(const GrayBitmap& image, const WindowSpec& spec, Engine engine) {
    return compute_moments(gray_plane(image), spec, engine);
}

Bitmap render_moments(const std::array<ChannelMoments, 3>& moments, const RenderParams& params) {
    return render_map({moments[0].magnitude, moments[1].magnitude, moments[2].magnitude}, params);
}

GrayBitmap render_gray_moments(const ChannelMoments& moments, const RenderParams& params) {
    return render_gray_map(moments.magnitude, params);
}

}  // namespace cdm
