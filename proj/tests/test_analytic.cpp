#include <doctest.h>

#include <cmath>
#include <random>

#include "splab/analytic.hpp"
#include "splab/errors.hpp"
#include "splab/search.hpp"
#include "splab/spectral.hpp"

using namespace splab;

TEST_SUITE_BEGIN("analytic");

namespace {

ModelParams extensive(int n) { return resolve_params(ParamSpec{}, n); }

ParamSpec delta1_spec() {
    ParamSpec s;
    s.delta_v = ParamEntry{1.0, true};
    return s;
}

} // namespace

TEST_CASE("decoupled branch energies at the endpoints") {
    const ModelParams p = extensive(40);
    CHECK(decoupled_e0_per_spin(p, 0.0) == 0.0);
    CHECK(decoupled_e1_per_spin(p, 0.0) == doctest::Approx(0.25));  // delta_v / n
    // at the crossing field sqrt(33)/8 both close at -1/8 exactly
    const double bc = std::sqrt(33.0) / 8.0;
    CHECK(decoupled_e0_per_spin(p, bc) == doctest::Approx(-0.125).epsilon(1e-12));
    CHECK(decoupled_e1_per_spin(p, bc) == doctest::Approx(-0.125).epsilon(1e-12));
    // large-field asymptote E ~ -b
    CHECK(decoupled_e0_per_spin(p, 1e3) == doctest::Approx(-1e3 + 2.0).epsilon(1e-5));
}

TEST_CASE("branch energies decrease and are concave in b") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 10 + int(u(rng) * 60);
        ModelParams p;
        p.n = n;
        p.v_max = (0.5 + u(rng)) * n;
        p.delta_v = (0.05 + 0.8 * u(rng)) * p.v_max;
        p.delta_w = (u(rng) - 0.5) * 0.8 * n / 2.0;
        validate_params(p);
        const double h = 1e-4;
        for (double b = 0.1; b < 2.0; b += 0.3) {
            for (auto f : {decoupled_e0_per_spin, decoupled_e1_per_spin}) {
                const double d1 = (f(p, b + h) - f(p, b - h)) / (2.0 * h);
                const double d2 = (f(p, b + h) - 2.0 * f(p, b) + f(p, b - h)) / (h * h);
                CHECK(d1 < 0.0);
                CHECK(d2 < 1e-6);
            }
        }
    }
}

TEST_CASE("the wider basin softens faster in the field") {
    // h2 < h1 here, so E1 must fall faster than E0
    const ModelParams p = extensive(40);
    const double h = 1e-5;
    for (double b : {0.2, 0.5, 0.8}) {
        const double d0 = (decoupled_e0_per_spin(p, b + h) - decoupled_e0_per_spin(p, b - h)) / (2 * h);
        const double d1 = (decoupled_e1_per_spin(p, b + h) - decoupled_e1_per_spin(p, b - h)) / (2 * h);
        CHECK(d1 < d0);
        CHECK(d0 < 0.0);
    }
}

TEST_CASE("analytic crossing reproduces sqrt(33)/8 for the extensive family") {
    const CrossingEstimate ce = analytic_crossing(extensive(40), 1e-12);
    CHECK(std::abs(ce.b_cross - std::sqrt(33.0) / 8.0) < 1e-10);
    CHECK(ce.residual < 1e-11);
    CHECK(ce.method == CrossingMethod::decoupled_root);
}

TEST_CASE("analytic crossing matches a fine-grid scan when branches nearly degenerate") {
    ModelParams p;
    p.n = 30;
    p.v_max = 30.0;
    p.delta_v = 0.999 * p.v_max;
    p.delta_w = -7.5;
    validate_params(p);
    const CrossingEstimate ce = analytic_crossing(p, 1e-12);
    // brute scan of the sign change as an oracle
    double lo = 0.0, hi = -1.0;
    const double f0 = decoupled_e0_per_spin(p, 0.0) - decoupled_e1_per_spin(p, 0.0);
    for (int i = 1; i <= 200000; ++i) {
        const double b = 20.0 * i / 200000.0;
        const double f = decoupled_e0_per_spin(p, b) - decoupled_e1_per_spin(p, b);
        if ((f < 0.0) != (f0 < 0.0)) {
            hi = b;
            break;
        }
        lo = b;
    }
    REQUIRE(hi > 0.0);
    CHECK(ce.b_cross >= lo - 1e-4);
    CHECK(ce.b_cross <= hi + 1e-4);
}

TEST_CASE("numeric minimum-gap location agrees with the analytic crossing") {
    const ModelParams p = extensive(40);
    const CrossingEstimate ce = analytic_crossing(p, 1e-12);
    GapSearchOptions opt;
    opt.b_lo = 0.6;
    opt.b_hi = 0.8;
    opt.tol = 1e-12;
    const double b_num = min_gap(p, 1.0, 1.0, opt).front().b_min;
    CHECK(std::abs(ce.b_cross - b_num) / b_num < 1e-6);
}

TEST_CASE("decoupled estimate is highly accurate below the crossing") {
    const ModelParams p = extensive(50);
    const SpectralResult r = analyze(p, DriverSpec{1.0, 0.7, 1.0});
    const double approx = 50.0 * decoupled_e0_per_spin(p, 0.7);
    CHECK(std::abs((approx - r.e0) / r.e0) < 0.02);
}

TEST_CASE("small-field crossing formula") {
    const ModelParams p = resolve_params(delta1_spec(), 40);
    const CrossingEstimate sf = small_field_crossing(p);
    const double h1 = 2.0;
    const double h2 = 39.0 / 60.0;
    CHECK(sf.b_cross ==
          doctest::Approx(std::sqrt(2.0 / (40.0 * (1.0 / h2 - 1.0 / h1)))).epsilon(1e-12));

    // b * sqrt(n) approaches sqrt(2) for this family
    const ModelParams big = resolve_params(delta1_spec(), 1000000);
    CHECK(small_field_crossing(big).b_cross * 1000.0 ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
}

TEST_CASE("small-field agrees with the full decoupled root at moderate sizes") {
    for (int n : {40, 60}) {
        const ModelParams p = resolve_params(delta1_spec(), n);
        const double sf = small_field_crossing(p).b_cross;
        const double ac = analytic_crossing(p, 1e-12).b_cross;
        CHECK(std::abs(sf - ac) / ac < 0.05);
    }
}

TEST_CASE("small-field degenerate and inapplicable limits") {
    ModelParams p{40, 40.0, 0.0, -10.0, 0.0};  // delta_v -> 0 limit, built directly
    CHECK(small_field_crossing(p).b_cross == 0.0);

    ModelParams wide{40, 40.0, 0.5, 6.0, 0.0};  // h2 > h1: wider basin at w = n
    validate_params(wide);
    CHECK_THROWS_AS(small_field_crossing(wide), not_found_error);
}

TEST_CASE("k = 2 transition fields") {
    const ModelParams p = extensive(40);
    const K2Transitions t = k2_transitions(p);
    CHECK(t.b_wide == 1.0);  // v_max / (2 (n + 2 delta_w)) at the studied parameters
    CHECK(t.b_narrow == doctest::Approx(0.25));

    ParamSpec d1 = delta1_spec();
    const K2Transitions t1 = k2_transitions(resolve_params(d1, 80));
    CHECK(t1.b_wide == 1.0);
    CHECK(t1.b_narrow == doctest::Approx(79.0 / 240.0));

    ModelParams sym{40, 40.0, 0.0, 0.0, 0.0};  // symmetric basins, direct fields
    const K2Transitions ts = k2_transitions(sym);
    CHECK(ts.b_wide == doctest::Approx(ts.b_narrow));
    CHECK(ts.b_wide == doctest::Approx(0.5));
}

TEST_SUITE_END();
