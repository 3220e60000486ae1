#include "cdm/sat.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cdm {

SummedAreaTable build_sat(const ScalarField& field) {
    const int h = static_cast<int>(field.rows());
    const int w = static_cast<int>(field.cols());
    SummedAreaTable sat;
    sat.cumulative = ScalarField::Zero(h + 1, w + 1);
    for (int i = 1; i <= h; ++i) {
        double row_run = 0.0;
        for (int j = 1; j <= w; ++j) {
            row_run += field(i - 1, j - 1);
            sat.cumulative(i, j) = row_run + sat.cumulative(i - 1, j);
        }
    }
    return sat;
}

double box_sum(const SummedAreaTable& sat, int r0, int r1, int c0, int c1) {
    if (r0 < 0 || r0 > r1 || r1 > sat.height() || c0 < 0 || c0 > c1 || c1 > sat.width()) {
        throw InvalidRect("box_sum bounds [" + std::to_string(r0) + "," + std::to_string(r1) +
                          ")x[" + std::to_string(c0) + "," + std::to_string(c1) +
                          ") invalid for " + std::to_string(sat.width()) + "x" +
                          std::to_string(sat.height()));
    }
    return sat.cumulative(r1, c1) - sat.cumulative(r0, c1) - sat.cumulative(r1, c0) +
           sat.cumulative(r0, c0);
}

namespace {

// box_sum without the bounds check, for the per-pixel loops whose rectangles
// are in range by construction. Same expression, so identical rounding.
inline double raw_box(const SummedAreaTable& sat, int r0, int r1, int c0, int c1) {
    return sat.cumulative(r1, c1) - sat.cumulative(r0, c1) - sat.cumulative(r1, c0) +
           sat.cumulative(r0, c0);
}

// A field with the window's overhang materialized by index clamping, plus the
// source coordinate of every extended row/column. Interior mode needs no
// extension; the pads are zero and coordinates are the indices themselves.
struct ExtendedField {
    ScalarField values;
    Eigen::ArrayXd row_coord;  // clamped source row per extended row
    Eigen::ArrayXd col_coord;
    std::vector<double> row_coord_prefix;  // prefix sums of the coordinate vectors
    std::vector<double> col_coord_prefix;
    int pad_top = 0;
    int pad_left = 0;
};

ExtendedField extend_field(const ScalarField& field, const WindowSpec& spec) {
    const int h = static_cast<int>(field.rows());
    const int w = static_cast<int>(field.cols());

    ExtendedField ext;
    if (spec.border == Border::Replicate) {
        ext.pad_top = spec.rows_above();
        ext.pad_left = spec.cols_left();
        const int eh = h + spec.rows_above() + spec.rows_below();
        const int ew = w + spec.cols_left() + spec.cols_right();
        ext.values.resize(eh, ew);
        ext.row_coord.resize(eh);
        ext.col_coord.resize(ew);
        for (int a = 0; a < eh; ++a) {
            ext.row_coord[a] = std::clamp(a - ext.pad_top, 0, h - 1);
        }
        for (int b = 0; b < ew; ++b) {
            ext.col_coord[b] = std::clamp(b - ext.pad_left, 0, w - 1);
        }
        std::vector<int> col_idx(static_cast<std::size_t>(ew));
        for (int b = 0; b < ew; ++b) col_idx[b] = std::clamp(b - ext.pad_left, 0, w - 1);
        for (int a = 0; a < eh; ++a) {
            const int src_i = static_cast<int>(ext.row_coord[a]);
            for (int b = 0; b < ew; ++b) {
                ext.values(a, b) = field(src_i, col_idx[b]);
            }
        }
    } else {
        ext.values = field;
        ext.row_coord = Eigen::ArrayXd::LinSpaced(h, 0, h - 1);
        ext.col_coord = Eigen::ArrayXd::LinSpaced(w, 0, w - 1);
    }

    ext.row_coord_prefix.assign(static_cast<std::size_t>(ext.row_coord.size()) + 1, 0.0);
    for (int a = 0; a < ext.row_coord.size(); ++a) {
        ext.row_coord_prefix[a + 1] = ext.row_coord_prefix[a] + ext.row_coord[a];
    }
    ext.col_coord_prefix.assign(static_cast<std::size_t>(ext.col_coord.size()) + 1, 0.0);
    for (int b = 0; b < ext.col_coord.size(); ++b) {
        ext.col_coord_prefix[b + 1] = ext.col_coord_prefix[b] + ext.col_coord[b];
    }
    return ext;
}

// Per-pixel window sums via one table over the (possibly extended) field.
ScalarField window_sums(const ScalarField& field, const WindowSpec& spec,
                        const ExtendedField& ext, const SummedAreaTable& sat) {
    const int h = static_cast<int>(field.rows());
    const int w = static_cast<int>(field.cols());
    ScalarField sums = ScalarField::Zero(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
                continue;
            }
            int r0 = i - spec.rows_above() + ext.pad_top;
            int c0 = j - spec.cols_left() + ext.pad_left;
            sums(i, j) = raw_box(sat, r0, r0 + spec.rows, c0, c0 + spec.cols);
        }
    }
    return sums;
}

}  // namespace

ScalarField fast_local_mean(const ScalarField& field, const WindowSpec& spec) {
    validate_window(spec);
    ExtendedField ext = extend_field(field, spec);
    SummedAreaTable sat = build_sat(ext.values);
    return window_sums(field, spec, ext, sat) / spec.divisor();
}

DipoleField fast_dipole_field(const ScalarField& field, const WindowSpec& spec) {
    validate_window(spec);
    const int h = static_cast<int>(field.rows());
    const int w = static_cast<int>(field.cols());
    const double div = spec.divisor();
    const double offset = spec.coordinate_offset;
    const double count = spec.pixel_count();

    DipoleField out;
    out.px = ScalarField::Zero(h, w);
    out.py = ScalarField::Zero(h, w);

    if (spec.charge_mode == ChargeMode::CenterMean) {
        ExtendedField ext = extend_field(field, spec);
        SummedAreaTable s = build_sat(ext.values);
        SummedAreaTable sk = build_sat(ext.values.colwise() * ext.row_coord);
        SummedAreaTable sl = build_sat(ext.values.rowwise() * ext.col_coord.transpose());

        for (int i = 0; i < h; ++i) {
            for (int j = 0; j < w; ++j) {
                if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
                    continue;
                }
                int r0 = i - spec.rows_above() + ext.pad_top;
                int r1 = r0 + spec.rows;
                int c0 = j - spec.cols_left() + ext.pad_left;
                int c1 = c0 + spec.cols;

                double sum_b = raw_box(s, r0, r1, c0, c1);
                double sum_bk = raw_box(sk, r0, r1, c0, c1);
                double sum_bl = raw_box(sl, r0, r1, c0, c1);
                double sum_k = (ext.row_coord_prefix[r1] - ext.row_coord_prefix[r0]) * spec.cols;
                double sum_l = (ext.col_coord_prefix[c1] - ext.col_coord_prefix[c0]) * spec.rows;
                // offset term: (1/div) * Sum (b - M) * C = C * (div*Sb - Sb*count) / div^2
                double charge_total = div * sum_b - sum_b * count;

                out.px(i, j) = (div * sum_bk - sum_b * sum_k + offset * charge_total) / (div * div);
                out.py(i, j) = (div * sum_bl - sum_b * sum_l + offset * charge_total) / (div * div);
            }
        }
        return out;
    }

    // OwnMean: moments of the precomputed charge field. Scaling the charges
    // by the divisor keeps every table entry an integer for image-valued
    // input (div*q = div*b - window sum), so the boxes stay exact.
    ExtendedField ext = extend_field(field, spec);
    SummedAreaTable sat_b = build_sat(ext.values);
    ScalarField own_sums = window_sums(field, spec, ext, sat_b);
    ScalarField scaled_charge = ScalarField::Zero(h, w);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
                continue;  // no neighborhood, no charge
            }
            scaled_charge(i, j) = div * field(i, j) - own_sums(i, j);
        }
    }

    ExtendedField extq = extend_field(scaled_charge, spec);
    SummedAreaTable q0 = build_sat(extq.values);
    SummedAreaTable qk = build_sat(extq.values.colwise() * extq.row_coord);
    SummedAreaTable ql = build_sat(extq.values.rowwise() * extq.col_coord.transpose());

    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) {
            if (spec.border == Border::Interior && !window_in_frame(spec, i, j, w, h)) {
                continue;
            }
            int r0 = i - spec.rows_above() + extq.pad_top;
            int r1 = r0 + spec.rows;
            int c0 = j - spec.cols_left() + extq.pad_left;
            int c1 = c0 + spec.cols;

            double moment_k = raw_box(qk, r0, r1, c0, c1);
            double moment_l = raw_box(ql, r0, r1, c0, c1);
            double charge_total = raw_box(q0, r0, r1, c0, c1);

            out.px(i, j) = (moment_k + offset * charge_total) / (div * div);
            out.py(i, j) = (moment_l + offset * charge_total) / (div * div);
        }
    }
    return out;
}

}  // namespace cdm
