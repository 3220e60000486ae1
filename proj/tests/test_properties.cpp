#include <doctest.h>

#include <cmath>

#include "cdm/dipole.hpp"
#include "cdm/sat.hpp"
#include "cdm/window.hpp"
#include "fixtures.hpp"

using namespace cdm;

namespace {

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    return (a - b).abs().maxCoeff();
}

WindowSpec square(int n) {
    WindowSpec spec;
    spec.rows = n;
    spec.cols = n;
    return spec;
}

}  // namespace

TEST_CASE("window charges sum to zero against the window's own mean") {
    ScalarField f = cdmtest::random_u8_field(14, 11, 80u);
    for (int n : {2, 3}) {
        WindowSpec spec = square(n);
        ScalarField mean = local_mean(f, spec);
        for (int i = 0; i < f.rows(); ++i) {
            for (int j = 0; j < f.cols(); ++j) {
                double sum = 0.0;
                for (auto [k, l] : window_indices(spec, i, j, int(f.cols()), int(f.rows()))) {
                    sum += f(k, l) - mean(i, j);
                }
                CHECK(std::abs(sum) < 1e-9);
            }
        }
    }
}

TEST_CASE("moments ignore a constant coordinate offset under the shared window mean") {
    ScalarField f = cdmtest::random_u8_field(16, 13, 81u);
    for (int n : {2, 3}) {
        WindowSpec base = square(n);
        WindowSpec shifted = base;
        shifted.coordinate_offset = 1e4;

        DipoleField d0 = dipole_field(f, base);
        DipoleField d1 = dipole_field(f, shifted);
        CHECK(max_abs_diff(d0.px, d1.px) < 1e-9);
        CHECK(max_abs_diff(d0.py, d1.py) < 1e-9);

        DipoleField s0 = fast_dipole_field(f, base);
        DipoleField s1 = fast_dipole_field(f, shifted);
        CHECK(max_abs_diff(s0.px, s1.px) < 1e-9);
        CHECK(max_abs_diff(s0.py, s1.py) < 1e-9);
    }
}

TEST_CASE("a coordinate offset does shift per-neighborhood charges") {
    // the companion to origin invariance: with charges taken from each
    // member's own neighborhood the total window charge is nonzero, so the
    // offset leaks into the moments
    ScalarField f = cdmtest::random_u8_field(12, 12, 82u);
    WindowSpec base = square(3);
    base.charge_mode = ChargeMode::OwnMean;
    WindowSpec shifted = base;
    shifted.coordinate_offset = 1e4;
    DipoleField d0 = dipole_field(f, base);
    DipoleField d1 = dipole_field(f, shifted);
    CHECK(max_abs_diff(d0.px, d1.px) > 1e-3);
}

TEST_CASE("moments at interior pixels depend only on the window contents") {
    ScalarField big = cdmtest::random_u8_field(24, 30, 83u);
    const int h = 16, w = 20;
    ScalarField crop_a = big.block(0, 0, h, w);
    ScalarField crop_b = big.block(2, 3, h, w);

    SUBCASE("2x2 windows translate bitwise") {
        WindowSpec spec = square(2);
        for (bool use_fast : {false, true}) {
            DipoleField whole = use_fast ? fast_dipole_field(big, spec) : dipole_field(big, spec);
            DipoleField da = use_fast ? fast_dipole_field(crop_a, spec) : dipole_field(crop_a, spec);
            DipoleField db = use_fast ? fast_dipole_field(crop_b, spec) : dipole_field(crop_b, spec);
            for (int i = 0; i < h; ++i) {
                for (int j = 0; j < w; ++j) {
                    if (!window_in_frame(spec, i, j, w, h)) continue;
                    CHECK(da.px(i, j) == whole.px(i, j));
                    CHECK(da.py(i, j) == whole.py(i, j));
                    CHECK(db.px(i, j) == whole.px(i + 2, j + 3));
                    CHECK(db.py(i, j) == whole.py(i + 2, j + 3));
                }
            }
        }
    }

    SUBCASE("odd windows translate to within 1e-9") {
        for (int n : {3, 5}) {
            WindowSpec spec = square(n);
            DipoleField whole = dipole_field(big, spec);
            DipoleField db = dipole_field(crop_b, spec);
            for (int i = 0; i < h; ++i) {
                for (int j = 0; j < w; ++j) {
                    if (!window_in_frame(spec, i, j, w, h)) continue;
                    CHECK(std::abs(db.px(i, j) - whole.px(i + 2, j + 3)) < 1e-9);
                    CHECK(std::abs(db.py(i, j) - whole.py(i + 2, j + 3)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("adding a constant to the field leaves the moments unchanged") {
    ScalarField f = cdmtest::random_u8_field(13, 17, 84u);
    ScalarField g = f + 40.0;
    for (ChargeMode mode : {ChargeMode::CenterMean, ChargeMode::OwnMean}) {
        for (int n : {2, 3}) {
            WindowSpec spec = square(n);
            spec.charge_mode = mode;
            DipoleField df = dipole_field(f, spec);
            DipoleField dg = dipole_field(g, spec);
            CHECK(max_abs_diff(df.px, dg.px) < 1e-9);
            CHECK(max_abs_diff(df.py, dg.py) < 1e-9);
        }
    }
}

TEST_CASE("scaling the field scales the moments and fixes the rendered tones") {
    ScalarField f = cdmtest::random_u8_field(12, 15, 85u);
    for (double s : {2.5, 0.25}) {
        WindowSpec spec = square(3);
        DipoleField base = dipole_field(f, spec);
        DipoleField scaled = dipole_field(ScalarField(s * f), spec);
        for (int i = 0; i < f.rows(); ++i) {
            for (int j = 0; j < f.cols(); ++j) {
                double want = s * base.px(i, j);
                CHECK(std::abs(scaled.px(i, j) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
                want = s * base.py(i, j);
                CHECK(std::abs(scaled.py(i, j) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
            }
        }

        // tone = gain * 255 * (P / P_Max)^alpha + bias is scale-free in P
        ScalarField p1 = magnitude_field(base);
        ScalarField p2 = magnitude_field(scaled);
        double m1 = p1.maxCoeff();
        double m2 = p2.maxCoeff();
        REQUIRE(m1 > 0.0);
        for (int i = 0; i < f.rows(); ++i) {
            for (int j = 0; j < f.cols(); ++j) {
                double t1 = 255.0 * std::sqrt(p1(i, j) / m1);
                double t2 = 255.0 * std::sqrt(p2(i, j) / m2);
                CHECK(std::abs(t1 - t2) < 1e-9);
            }
        }
    }
}

TEST_CASE("mirroring the image mirrors p_x and mirrors-and-negates p_y") {
    ScalarField f = cdmtest::random_u8_field(15, 18, 86u);
    const int W = int(f.cols());
    ScalarField g = f.rowwise().reverse();

    SUBCASE("odd window, every pixel") {
        WindowSpec spec = square(3);
        DipoleField df = dipole_field(f, spec);
        DipoleField dg = dipole_field(g, spec);
        ScalarField pf = magnitude_field(df);
        ScalarField pg = magnitude_field(dg);
        for (int i = 0; i < f.rows(); ++i) {
            for (int j = 0; j < W; ++j) {
                CHECK(std::abs(dg.px(i, j) - df.px(i, W - 1 - j)) < 1e-9);
                CHECK(std::abs(dg.py(i, j) + df.py(i, W - 1 - j)) < 1e-9);
                CHECK(std::abs(pg(i, j) - pf(i, W - 1 - j)) < 1e-9);
            }
        }
    }

    SUBCASE("even window, shifted by its anchor asymmetry") {
        // a 2x2 window covers {j, j+1}, so the mirrored window sits one
        // column to the left of the literal reflection
        WindowSpec spec = square(2);
        DipoleField df = dipole_field(f, spec);
        DipoleField dg = dipole_field(g, spec);
        for (int i = 0; i < f.rows(); ++i) {
            for (int j = 0; j + 1 < W; ++j) {
                CHECK(std::abs(dg.px(i, j) - df.px(i, W - 2 - j)) < 1e-9);
                CHECK(std::abs(dg.py(i, j) + df.py(i, W - 2 - j)) < 1e-9);
            }
        }
    }
}

TEST_CASE("an alternating checkerboard has zero moments at full windows") {
    ScalarField f = cdmtest::checkerboard(9, 12, 30.0, 200.0);
    const int h = 9, w = 12;
    WindowSpec spec = square(2);

    SUBCASE("shared-mean charges, both engines, any border") {
        for (Border border : {Border::Replicate, Border::Interior}) {
            spec.border = border;
            for (bool use_fast : {false, true}) {
                DipoleField d = use_fast ? fast_dipole_field(f, spec) : dipole_field(f, spec);
                for (int i = 0; i + 1 < h; ++i) {
                    for (int j = 0; j + 1 < w; ++j) {
                        CHECK(d.px(i, j) == 0.0);
                        CHECK(d.py(i, j) == 0.0);
                    }
                }
            }
        }
    }

    SUBCASE("per-neighborhood charges away from the frame boundary") {
        // members on the last row/column take their charge from a clamped
        // neighborhood, so nullity is only guaranteed where every member's
        // own window fits
        spec.charge_mode = ChargeMode::OwnMean;
        for (bool use_fast : {false, true}) {
            DipoleField d = use_fast ? fast_dipole_field(f, spec) : dipole_field(f, spec);
            for (int i = 0; i + 2 < h; ++i) {
                for (int j = 0; j + 2 < w; ++j) {
                    CHECK(d.px(i, j) == 0.0);
                    CHECK(d.py(i, j) == 0.0);
                }
            }
        }
    }
}
