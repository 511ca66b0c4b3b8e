#pragma once

#include <vector>

namespace splab {

// Piecewise linear double-well potential over Hamming weight w:
//   V(w) = v_max * w / (n/2 + delta_w)                          for w <= n/2 + delta_w
//   V(w) = delta_v + (v_max - delta_v) (n - w) / (n/2 - delta_w) otherwise,
// plus fluct_f on odd weights.  The global minimum sits at w = 0 and a local
// one at w = n; delta_w < 0 narrows the basin around the global minimum.
struct ModelParams {
    int n = 0;
    double v_max = 0.0;
    double delta_v = 0.0;
    double delta_w = 0.0;
    double fluct_f = 0.0;
};

// One potential parameter, either a fraction of n or an absolute value.
struct ParamEntry {
    double value = 0.0;
    bool absolute = false;
};

// Size-free description of a parameter family; resolving at a given n scales
// the fractional entries by n.  Defaults are the wide/narrow double well
// v_max = n, delta_v = n/4, delta_w = -n/4.
struct ParamSpec {
    ParamEntry v_max{1.0, false};
    ParamEntry delta_v{0.25, false};
    ParamEntry delta_w{-0.25, false};
    ParamEntry fluct_f{0.0, true};
};

// Throws config_error naming the violated constraint.
void validate_params(const ModelParams& p);

ModelParams resolve_params(const ParamSpec& spec, int n);

// Potential value at integer weight w in [0, n].
double potential_at(const ModelParams& p, int w);

// All n+1 values, entry w = potential_at(p, w).
std::vector<double> potential_vector(const ModelParams& p);

// H(p) = -p log2 p - (1-p) log2(1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);

// Runtime exponent of greedy descent wrapped in amplitude amplification:
// C = (1 - H((n/2 - delta_w)/n)) / 2.  Time scales as 2^(C n).
double greedy_grover_exponent(const ModelParams& p);

} // namespace splab
