#include "splab/operators.hpp"

#include <cmath>
#include <string>

#include "splab/errors.hpp"
#include "splab/spectral.hpp"

namespace splab {

void validate_driver(const DriverSpec& d) {
    if (!(d.k > 0.0))
        throw config_error("driver: k > 0 violated");
    if (!(d.b >= 0.0))
        throw config_error("driver: b >= 0 violated");
    if (!(d.s >= 0.0 && d.s <= 1.0))
        throw config_error("driver: s must lie in [0, 1]");
}

Matrix x_matrix(int n) {
    if (n < 1)
        throw domain_error("x_matrix: n must be >= 1");
    Matrix x = Matrix::Zero(n + 1, n + 1);
    for (int w = 0; w < n; ++w) {
        const double t = std::sqrt(double(w + 1) * double(n - w));
        x(w, w + 1) = t;
        x(w + 1, w) = t;
    }
    return x;
}

Vector psi_plus(int n) {
    if (n < 1)
        throw domain_error("psi_plus: n must be >= 1");
    Vector v(n + 1);
    const double lg_n = std::lgamma(n + 1.0);
    for (int w = 0; w <= n; ++w) {
        const double log_amp =
            0.5 * (lg_n - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0)) -
            0.5 * n * std::log(2.0);
        v(w) = std::exp(log_amp);
    }
    v /= v.norm();
    return v;
}

Matrix driver_matrix(int n, const DriverSpec& d) {
    validate_driver(d);
    const EigenSystem xs = eigensolve(x_matrix(n));

    const bool integer_k = std::abs(d.k - std::round(d.k)) <= 1e-9;
    const long long kk = integer_k ? std::llround(d.k) : 0;
    const double scale = d.s * d.b / std::pow(double(n), d.k - 1.0);

    Vector mapped(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double lam = xs.values(i);
        double powed;
        if (integer_k) {
            powed = std::pow(std::abs(lam), double(kk));
            if (lam < 0.0 && (kk % 2 != 0)) powed = -powed;
        } else {
            powed = std::pow(std::abs(lam), d.k);
        }
        mapped(i) = scale * powed;
    }
    Matrix m = xs.vectors * mapped.asDiagonal() * xs.vectors.transpose();
    // the eigen round trip leaves ~1e-16 asymmetry; make symmetry exact
    return 0.5 * (m + m.transpose()).eval();
}

Matrix hamiltonian(const ModelParams& p, const DriverSpec& d) {
    validate_params(p);
    Matrix h = -driver_matrix(p.n, d);
    const std::vector<double> v = potential_vector(p);
    if (h.rows() != static_cast<long>(v.size()))
        throw numerical_error("hamiltonian: dimension mismatch between driver and potential");
    for (int w = 0; w <= p.n; ++w) h(w, w) += v[static_cast<size_t>(w)];
    return h;
}

} // namespace splab
