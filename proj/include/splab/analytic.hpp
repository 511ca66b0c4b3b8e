#pragma once

#include "splab/model.hpp"

namespace splab {

enum class CrossingMethod { decoupled_root, small_field, numeric };

struct CrossingEstimate {
    double b_cross = 0.0;
    CrossingMethod method = CrossingMethod::decoupled_root;
    double residual = 0.0;  // |E0 - E1| at the reported b
};

// Decoupled-spin ground energies per spin.  Replacing each linear branch of
// the potential by independent spins in a field gives closed forms
//   E0 = h1 - sqrt(h1^2 + b^2),                h1 = v_max / (n + 2 delta_w)
//   E1 = delta_v/n + h2 - sqrt(h2^2 + b^2),    h2 = (v_max - delta_v) / (n - 2 delta_w)
// for the basin at w = 0 and the basin at w = n respectively.
double decoupled_e0_per_spin(const ModelParams& p, double b);
double decoupled_e1_per_spin(const ModelParams& p, double b);

// Root of E0(b) = E1(b): the level crossing that pins the minimum-gap
// location.  Bisection on the sign change; golden-section on |E0 - E1| as a
// fallback when no sign change is found on [0, 10 max(h1, h2)].
CrossingEstimate analytic_crossing(const ModelParams& p, double tol = 1e-12);

// Second-order (small b) expansion of the same crossing:
// b = sqrt(2 delta_v / (n (1/h2 - 1/h1))).  Scales as 1/sqrt(n) when delta_v
// does not grow with n.
CrossingEstimate small_field_crossing(const ModelParams& p);

// k = 2 classical-spin transition fields from the curvature cancellation of
// Z = n - (X^2+Y^2)/(2n) against -b X^2/n on each branch.
struct K2Transitions {
    double b_wide = 0.0;     // v_max / (2 (n + 2 delta_w))
    double b_narrow = 0.0;   // (v_max - delta_v) / (2 (n - 2 delta_w))
};

K2Transitions k2_transitions(const ModelParams& p);

} // namespace splab
