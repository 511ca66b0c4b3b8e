#include "splab/model.hpp"

#include <cmath>
#include <string>

#include "splab/errors.hpp"

namespace splab {

void validate_params(const ModelParams& p) {
    if (p.n < 1)
        throw config_error("model params: n must be a positive integer, got " +
                           std::to_string(p.n));
    if (!(p.v_max > 0.0))
        throw config_error("model params: v_max > 0 violated");
    if (!(p.delta_v > 0.0))
        throw config_error("model params: delta_v > 0 violated");
    if (!(p.delta_v < p.v_max))
        throw config_error("model params: delta_v < v_max violated "
                           "(global minimum must sit at w = 0)");
    const double kink = 0.5 * p.n + p.delta_w;
    if (!(kink > 0.0 && kink < p.n))
        throw config_error("model params: n/2 + delta_w must lie strictly inside "
                           "(0, n); got " + std::to_string(kink));
    if (!(p.fluct_f >= 0.0))
        throw config_error("model params: fluct_f >= 0 violated");
}

static double resolve_entry(const ParamEntry& e, int n) {
    return e.absolute ? e.value : e.value * n;
}

ModelParams resolve_params(const ParamSpec& spec, int n) {
    if (n < 2)
        throw config_error("resolve_params: n must be >= 2, got " + std::to_string(n));
    ModelParams p;
    p.n = n;
    p.v_max = resolve_entry(spec.v_max, n);
    p.delta_v = resolve_entry(spec.delta_v, n);
    p.delta_w = resolve_entry(spec.delta_w, n);
    p.fluct_f = resolve_entry(spec.fluct_f, n);
    validate_params(p);
    return p;
}

double potential_at(const ModelParams& p, int w) {
    if (w < 0 || w > p.n)
        throw domain_error("potential_at: weight " + std::to_string(w) +
                           " outside [0, " + std::to_string(p.n) + "]");
    const double kink = 0.5 * p.n + p.delta_w;
    double v;
    if (w <= kink)  // ties belong to the ascending branch
        v = p.v_max * w / kink;
    else
        v = p.delta_v + (p.v_max - p.delta_v) * (p.n - w) / (0.5 * p.n - p.delta_w);
    if (w % 2 != 0) v += p.fluct_f;
    return v;
}

std::vector<double> potential_vector(const ModelParams& p) {
    std::vector<double> v(static_cast<size_t>(p.n) + 1);
    for (int w = 0; w <= p.n; ++w) v[static_cast<size_t>(w)] = potential_at(p, w);
    return v;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0)
        throw domain_error("binary_entropy: argument outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double greedy_grover_exponent(const ModelParams& p) {
    const double frac = (0.5 * p.n - p.delta_w) / p.n;
    if (!(frac > 0.0 && frac <= 1.0))
        throw domain_error("greedy_grover_exponent: (n/2 - delta_w)/n outside (0, 1]");
    return 0.5 * (1.0 - binary_entropy(frac));
}

} // namespace splab
