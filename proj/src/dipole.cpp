#include "cdm/dipole.hpp"

#include <algorithm>
#include <cmath>

namespace cdm {

namespace {

int frame_width(const ScalarField& field) { return static_cast<int>(field.cols()); }
int frame_height(const ScalarField& field) { return static_cast<int>(field.rows()); }

}  // namespace

void validate_render_params(const RenderParams& params) {
    if (!(params.alpha > 0.0)) {
        throw InvalidArgument("render alpha must be positive");
    }
    if (!(params.gain > 0.0)) {
        throw InvalidArgument("render gain must be positive");
    }
}

ScalarField local_mean(const ScalarField& field, const WindowSpec& spec) {
    validate_window(spec);
    const int w = frame_width(field);
    const int h = frame_height(field);
    const double divisor = spec.divisor();

    ScalarField mean = ScalarField::Zero(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
                continue;
            }
            double sum = 0.0;
            for (int k = i - spec.rows_above(); k <= i + spec.rows_below(); ++k) {
                int kc = std::clamp(k, 0, h - 1);
                for (int l = j - spec.cols_left(); l <= j + spec.cols_right(); ++l) {
                    sum += field(kc, std::clamp(l, 0, w - 1));
                }
            }
            mean(i, j) = sum / divisor;
        }
    }
    return mean;
}

ScalarField charge_field(const ScalarField& field, const WindowSpec& spec) {
    ScalarField mean = local_mean(field, spec);
    if (spec.border == Border::Replicate) {
        return field - mean;
    }
    // Interior: the ring has no mean, so it carries no charge either.
    const int w = frame_width(field);
    const int h = frame_height(field);
    ScalarField charge = ScalarField::Zero(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            if (window_in_frame(spec, i, j, w, h)) {
                charge(i, j) = field(i, j) - mean(i, j);
            }
        }
    }
    return charge;
}

DipoleField dipole_field(const ScalarField& field, const WindowSpec& spec) {
    validate_window(spec);
    const int w = frame_width(field);
    const int h = frame_height(field);
    const double divisor = spec.divisor();
    const double offset = spec.coordinate_offset;

    // CenterMean needs the evaluated window's mean; OwnMean needs every
    // member's own charge. Both are the corresponding windowed pass.
    ScalarField mean;
    ScalarField charge;
    if (spec.charge_mode == ChargeMode::CenterMean) {
        mean = local_mean(field, spec);
    } else {
        charge = charge_field(field, spec);
    }

    DipoleField out;
    out.px = ScalarField::Zero(h, w);
    out.py = ScalarField::Zero(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
                continue;
            }
            double px = 0.0;
            double py = 0.0;
            for (int k = i - spec.rows_above(); k <= i + spec.rows_below(); ++k) {
                int kc = std::clamp(k, 0, h - 1);
                for (int l = j - spec.cols_left(); l <= j + spec.cols_right(); ++l) {
                    int lc = std::clamp(l, 0, w - 1);
                    double q = spec.charge_mode == ChargeMode::CenterMean
                                   ? field(kc, lc) - mean(i, j)
                                   : charge(kc, lc);
                    px += q * (kc + offset);
                    py += q * (lc + offset);
                }
            }
            out.px(i, j) = px / divisor;
            out.py(i, j) = py / divisor;
        }
    }
    return out;
}

ScalarField magnitude_field(const DipoleField& d) {
    return (d.px.square() + d.py.square()).sqrt();
}

namespace {

void render_channel(const ScalarField& magnitude, double pmax, const RenderParams& params,
                    Bitmap& out, int c) {
    const int h = static_cast<int>(magnitude.rows());
    const int w = static_cast<int>(magnitude.cols());
    if (!(pmax > 0.0)) {
        return;  // channel stays all-zero
    }
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double tone =
                params.gain * 255.0 * std::pow(magnitude(i, j) / pmax, params.alpha) + params.bias;
            out.at(i, j, c) = quantize_u8(tone);
        }
    }
}

}  // namespace

Bitmap render_map(const std::array<ScalarField, 3>& magnitudes, const RenderParams& params) {
    validate_render_params(params);
    const int h = static_cast<int>(magnitudes[0].rows());
    const int w = static_cast<int>(magnitudes[0].cols());

    std::array<double, 3> pmax{};
    for (int c = 0; c < 3; ++c) {
        pmax[c] = magnitudes[c].size() > 0 ? magnitudes[c].maxCoeff() : 0.0;
    }
    if (params.pmax_policy == PmaxPolicy::Global) {
        double global = std::max({pmax[0], pmax[1], pmax[2]});
        pmax = {global, global, global};
    }

    Bitmap out(w, h);
    for (int c = 0; c < 3; ++c) {
        render_channel(magnitudes[c], pmax[c], params, out, c + 1);
    }
    return out;
}

GrayBitmap render_gray_map(const ScalarField& magnitude, const RenderParams& params) {
    validate_render_params(params);
    const int h = static_cast<int>(magnitude.rows());
    const int w = static_cast<int>(magnitude.cols());
    double pmax = magnitude.size() > 0 ? magnitude.maxCoeff() : 0.0;

    GrayBitmap out(w, h);
    if (!(pmax > 0.0)) {
        return out;
    }
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            double tone =
                params.gain * 255.0 * std::pow(magnitude(i, j) / pmax, params.alpha) + params.bias;
            out.at(i, j) = quantize_u8(tone);
        }
    }
    return out;
}

Bitmap run_color_dipole(const Bitmap& image, const WindowSpec& spec, const RenderParams& params) {
    validate_render_params(params);
    std::array<ScalarField, 3> magnitudes;
    for (int c = 1; c <= 3; ++c) {
        magnitudes[c - 1] = magnitude_field(dipole_field(channel_plane(image, c), spec));
    }
    return render_map(magnitudes, params);
}

GrayBitmap run_gray_dipole(const GrayBitmap& image, const WindowSpec& spec,
                           const RenderParams& params) {
    validate_render_params(params);
    return render_gray_map(magnitude_field(dipole_field(gray_plane(image), spec)), params);
}

}  // namespace cdm
