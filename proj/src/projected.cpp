#include "splab/projected.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splab/errors.hpp"
#include "splab/parallel.hpp"

namespace splab {

int TwoWeightBasis::index_of(int w1, int w2) const {
    if (w1 < 0 || w1 > w_b || w2 < 0 || w2 > n - w_b) return -1;
    return index_[static_cast<size_t>(w1) * (n - w_b + 1) + w2];
}

TwoWeightBasis build_basis(int n, int w_b, int d) {
    if (n < 1)
        throw domain_error("build_basis: n must be >= 1");
    if (w_b < 0 || w_b > n)
        throw domain_error("build_basis: w_b must lie in [0, n]");
    if (d < 0 || d > n)
        throw domain_error("build_basis: d must lie in [0, n]");

    TwoWeightBasis basis;
    basis.n = n;
    basis.w_b = w_b;
    basis.d = d;
    basis.index_.assign(static_cast<size_t>(w_b + 1) * (n - w_b + 1), -1);
    for (int w1 = 0; w1 <= w_b; ++w1) {
        for (int w2 = 0; w2 <= n - w_b; ++w2) {
            if ((w_b - w1) + w2 > d) continue;
            basis.index_[static_cast<size_t>(w1) * (n - w_b + 1) + w2] =
                static_cast<int>(basis.states.size());
            basis.states.emplace_back(w1, w2);
        }
    }
    return basis;
}

Matrix projected_x_matrix(const TwoWeightBasis& basis) {
    const int dim = basis.size();
    Matrix x = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto [w1, w2] = basis.states[static_cast<size_t>(i)];
        // raising within the first bit group
        if (int j = basis.index_of(w1 + 1, w2); j >= 0) {
            const double t = std::sqrt(double(w1 + 1) * double(basis.w_b - w1));
            x(i, j) = t;
            x(j, i) = t;
        }
        // raising within the second bit group
        if (int j = basis.index_of(w1, w2 + 1); j >= 0) {
            const double t = std::sqrt(double(w2 + 1) * double(basis.n - basis.w_b - w2));
            x(i, j) = t;
            x(j, i) = t;
        }
    }
    return x;
}

Matrix projected_hamiltonian(const ModelParams& p, const TwoWeightBasis& basis,
                             double s) {
    if (basis.n != p.n)
        throw domain_error("projected_hamiltonian: basis size " +
                           std::to_string(basis.n) + " does not match params n = " +
                           std::to_string(p.n));
    if (!(s >= 0.0 && s <= 1.0))
        throw domain_error("projected_hamiltonian: s must lie in [0, 1]");
    Matrix h = -(1.0 - s) * projected_x_matrix(basis);
    for (int i = 0; i < basis.size(); ++i) {
        const auto [w1, w2] = basis.states[static_cast<size_t>(i)];
        h(i, i) += s * potential_at(p, w1 + w2);
    }
    return h;
}

Matrix projected_shortpath_hamiltonian(const ModelParams& p,
                                       const TwoWeightBasis& basis,
                                       const DriverSpec& d) {
    if (basis.n != p.n)
        throw domain_error("projected_shortpath_hamiltonian: basis/params mismatch");
    validate_driver(d);
    const EigenSystem xs = eigensolve(projected_x_matrix(basis));
    const bool integer_k = std::abs(d.k - std::round(d.k)) <= 1e-9;
    const long long kk = integer_k ? std::llround(d.k) : 0;
    const double scale = d.s * d.b / std::pow(double(p.n), d.k - 1.0);
    Vector mapped(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
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
    Matrix driver = xs.vectors * mapped.asDiagonal() * xs.vectors.transpose();
    Matrix h = -0.5 * (driver + driver.transpose());
    for (int i = 0; i < basis.size(); ++i) {
        const auto [w1, w2] = basis.states[static_cast<size_t>(i)];
        h(i, i) += potential_at(p, w1 + w2);
    }
    return h;
}

ProjectedProfile projected_path_profile(const ModelParams& p,
                                        const TwoWeightBasis& basis,
                                        const std::vector<double>& s_grid,
                                        int threads) {
    if (s_grid.empty())
        throw config_error("projected_path_profile: empty s grid");
    for (double s : s_grid)
        if (!(s >= 0.0 && s <= 1.0))
            throw config_error("projected_path_profile: s outside [0, 1]");

    ProjectedProfile prof;
    prof.points.resize(s_grid.size());
    parallel_for_index(static_cast<int>(s_grid.size()), threads, [&](int i) {
        const double s = s_grid[static_cast<size_t>(i)];
        const Matrix h = projected_hamiltonian(p, basis, s);
        const EigenSystem es = eigensolve(h);
        const double gap = basis.size() > 1 ? es.values(1) - es.values(0) : 0.0;
        prof.points[static_cast<size_t>(i)] = GapPoint{s, gap};
    });
    prof.min_gap = prof.points.front().gap;
    prof.argmin_s = prof.points.front().s;
    for (const GapPoint& pt : prof.points) {
        if (pt.gap < prof.min_gap) {
            prof.min_gap = pt.gap;
            prof.argmin_s = pt.s;
        }
    }

    // At s = 1 the projected Hamiltonian is diagonal, so the ground state is
    // the ball state of least potential; ties resolve to the first in order.
    int best = 0;
    double best_v = 0.0;
    for (int i = 0; i < basis.size(); ++i) {
        const auto [w1, w2] = basis.states[static_cast<size_t>(i)];
        const double v = potential_at(p, w1 + w2);
        if (i == 0 || v < best_v) {
            best = i;
            best_v = v;
        }
    }
    prof.ball_min_potential = best_v;
    prof.ground_weight_s1 = basis.states[static_cast<size_t>(best)].first +
                            basis.states[static_cast<size_t>(best)].second;

    double global_min = potential_at(p, 0);
    for (int w = 1; w <= p.n; ++w) global_min = std::min(global_min, potential_at(p, w));
    prof.success = (best_v == global_min);
    return prof;
}

} // namespace splab
