#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace oracle {

using splab::Matrix;
using splab::Vector;

namespace {

Matrix full_matrix(const splab::ModelParams& p, double field, double potential_scale) {
    const int n = p.n;
    if (n > 14) throw std::invalid_argument("brute force oracle: n too large");
    const int dim = 1 << n;
    Matrix h = Matrix::Zero(dim, dim);
    for (int x = 0; x < dim; ++x) {
        h(x, x) = potential_scale *
                  splab::potential_at(p, __builtin_popcount(static_cast<unsigned>(x)));
        for (int i = 0; i < n; ++i) h(x, x ^ (1 << i)) -= field;
    }
    return h;
}

} // namespace

FullSpace brute_force_k1(const splab::ModelParams& p, double b, double s) {
    const int n = p.n;
    const int dim = 1 << n;
    Eigen::SelfAdjointEigenSolver<Matrix> es(full_matrix(p, s * b, 1.0));
    const Vector& lam = es.eigenvalues();
    const Matrix& vec = es.eigenvectors();

    std::vector<double> binom(static_cast<size_t>(n) + 1);
    for (int w = 0; w <= n; ++w)
        binom[static_cast<size_t>(w)] = std::exp(
            std::lgamma(n + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0));

    // weight of an eigenvector inside the permutation-symmetric sector
    const auto sym_weight = [&](int j) {
        std::vector<double> acc(static_cast<size_t>(n) + 1, 0.0);
        for (int x = 0; x < dim; ++x)
            acc[static_cast<size_t>(__builtin_popcount(static_cast<unsigned>(x)))] += vec(x, j);
        double total = 0.0;
        for (int w = 0; w <= n; ++w)
            total += acc[static_cast<size_t>(w)] * acc[static_cast<size_t>(w)] /
                     binom[static_cast<size_t>(w)];
        return total;
    };

    FullSpace out;
    out.e0 = lam(0);
    out.overlap = std::abs(vec.col(0).sum()) / std::sqrt(double(dim));

    const double norm = std::max(std::abs(lam(0)), std::abs(lam(dim - 1)));
    const double group_tol = 1e-9 * std::max(1.0, norm);
    int j = 1;
    out.e1_sym = lam(dim - 1);
    while (j < dim) {
        int j2 = j;
        double weight = 0.0;
        while (j2 < dim && lam(j2) - lam(j) <= group_tol) {
            weight += sym_weight(j2);
            ++j2;
        }
        if (weight >= 0.5) {
            out.e1_sym = lam(j);
            break;
        }
        j = j2;
    }
    return out;
}

double brute_force_adiabatic_e0(const splab::ModelParams& p, double s) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(full_matrix(p, 1.0 - s, s));
    return es.eigenvalues()(0);
}

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> g(static_cast<size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < points; ++i)
        g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return g;
}

} // namespace oracle
