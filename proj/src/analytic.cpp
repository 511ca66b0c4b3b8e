#include "splab/analytic.hpp"

#include <cmath>
#include <string>

#include "splab/errors.hpp"
#include "splab/search.hpp"

namespace splab {

namespace {

double branch_field_wide(const ModelParams& p) {
    return p.v_max / (p.n + 2.0 * p.delta_w);
}

double branch_field_narrow(const ModelParams& p) {
    return (p.v_max - p.delta_v) / (p.n - 2.0 * p.delta_w);
}

} // namespace

double decoupled_e0_per_spin(const ModelParams& p, double b) {
    const double h1 = branch_field_wide(p);
    return h1 - std::sqrt(h1 * h1 + b * b);
}

double decoupled_e1_per_spin(const ModelParams& p, double b) {
    const double h2 = branch_field_narrow(p);
    return p.delta_v / p.n + h2 - std::sqrt(h2 * h2 + b * b);
}

CrossingEstimate analytic_crossing(const ModelParams& p, double tol) {
    if (!(tol > 0.0))
        throw domain_error("analytic_crossing: tol must be positive");
    const auto diff = [&](double b) {
        return decoupled_e0_per_spin(p, b) - decoupled_e1_per_spin(p, b);
    };
    const double b_hi = 10.0 * std::max(branch_field_wide(p), branch_field_narrow(p));

    // E0(0) - E1(0) = -delta_v/n < 0; scan for the sign change
    const int scan = 512;
    double lo = 0.0, hi = -1.0;
    double f_lo = diff(0.0);
    for (int i = 1; i <= scan; ++i) {
        const double b = b_hi * i / scan;
        const double f = diff(b);
        if ((f_lo < 0.0) != (f < 0.0) || f == 0.0) {
            hi = b;
            break;
        }
        lo = b;
        f_lo = f;
    }

    CrossingEstimate est;
    est.method = CrossingMethod::decoupled_root;
    if (hi > 0.0) {
        for (int it = 0; it < 200 && hi - lo > tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((diff(mid) < 0.0) == (f_lo < 0.0)) {
                lo = mid;
                f_lo = diff(lo);
            } else {
                hi = mid;
            }
        }
        est.b_cross = 0.5 * (lo + hi);
        est.residual = std::abs(diff(est.b_cross));
        return est;
    }

    // no sign change: fall back to minimizing |E0 - E1|
    const auto absdiff = [&](double b) { return std::abs(diff(b)); };
    int best = 1;
    double best_val = absdiff(b_hi / scan);
    for (int i = 2; i < scan; ++i) {
        const double v = absdiff(b_hi * i / scan);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = b_hi * (best - 1) / scan;
    const double m = b_hi * best / scan;
    const double c = b_hi * (best + 1) / scan;
    if (!(absdiff(m) < absdiff(a) && absdiff(m) < absdiff(c)))
        throw not_found_error("analytic_crossing: no E0 = E1 crossing on [0, " +
                              std::to_string(b_hi) + "]");
    const GoldenResult g = golden_section_min(absdiff, a, m, c, tol);
    if (!(g.f_min <= 1e-8 * std::max(1.0, branch_field_wide(p))))
        throw not_found_error("analytic_crossing: no E0 = E1 crossing on [0, " +
                              std::to_string(b_hi) + "] (min |E0-E1| = " +
                              std::to_string(g.f_min) + ")");
    est.b_cross = g.x_min;
    est.residual = g.f_min;
    return est;
}

CrossingEstimate small_field_crossing(const ModelParams& p) {
    const double h1 = branch_field_wide(p);
    const double h2 = branch_field_narrow(p);
    if (!(h2 < h1))
        throw not_found_error("small_field_crossing: requires h2 < h1 "
                              "(the wide basin must soften faster)");
    CrossingEstimate est;
    est.method = CrossingMethod::small_field;
    est.b_cross = std::sqrt(2.0 * p.delta_v / (p.n * (1.0 / h2 - 1.0 / h1)));
    est.residual = std::abs(decoupled_e0_per_spin(p, est.b_cross) -
                            decoupled_e1_per_spin(p, est.b_cross));
    return est;
}

K2Transitions k2_transitions(const ModelParams& p) {
    K2Transitions t;
    t.b_wide = p.v_max / (2.0 * (p.n + 2.0 * p.delta_w));
    t.b_narrow = (p.v_max - p.delta_v) / (2.0 * (p.n - 2.0 * p.delta_w));
    return t;
}

} // namespace splab
