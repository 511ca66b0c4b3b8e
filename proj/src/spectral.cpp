#include "splab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splab/errors.hpp"
#include "splab/parallel.hpp"

namespace splab {

EigenSystem eigensolve(const Matrix& m, double resid_tol) {
    if (m.rows() != m.cols())
        throw domain_error("eigensolve: matrix must be square");
    if (!m.allFinite())
        throw numerical_error("eigensolve: matrix has non-finite entries");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigensolve: no convergence (dim = " +
                              std::to_string(m.rows()) + ")");

    EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
    const long dim = m.rows();
    const double norm = std::max(std::abs(es.values(0)), std::abs(es.values(dim - 1)));
    const double bound = resid_tol * std::max(norm, 1.0);
    for (long j = 0; j < std::min<long>(2, dim); ++j) {
        const double resid = (m * es.vectors.col(j) - es.values(j) * es.vectors.col(j)).norm();
        if (!(resid <= bound))
            throw numerical_error("eigensolve: residual " + std::to_string(resid) +
                                  " above tolerance for pair " + std::to_string(j) +
                                  " (dim = " + std::to_string(dim) +
                                  ", |M| = " + std::to_string(norm) + ")");
    }
    return es;
}

SpectralResult analyze(const ModelParams& p, const DriverSpec& d) {
    const Matrix h = hamiltonian(p, d);
    const EigenSystem es = eigensolve(h);
    const long dim = h.rows();

    SpectralResult r;
    r.e0 = es.values(0);
    r.e1 = dim > 1 ? es.values(1) : es.values(0);
    r.gap = r.e1 - r.e0;
    r.ground = es.vectors.col(0);
    const Vector plus = psi_plus(p.n);
    double ov = r.ground.dot(plus);
    if (ov < 0.0) {
        r.ground = -r.ground;
        ov = -ov;
    }
    r.overlap = ov;
    r.norm_bound = std::max(std::abs(es.values(0)), std::abs(es.values(dim - 1)));
    r.below_resolution = r.gap < kResolutionFloorFactor * r.norm_bound;
    return r;
}

static void check_s_grid(const std::vector<double>& s_grid) {
    if (s_grid.empty())
        throw config_error("path_gap_profile: empty s grid");
    for (double s : s_grid)
        if (!(s >= 0.0 && s <= 1.0))
            throw config_error("path_gap_profile: s outside [0, 1]");
}

static PathProfile assemble_profile(std::vector<GapPoint> points) {
    PathProfile prof;
    prof.points = std::move(points);
    prof.min_gap = prof.points.front().gap;
    prof.argmin_s = prof.points.front().s;
    for (const auto& pt : prof.points) {
        if (pt.gap < prof.min_gap) {
            prof.min_gap = pt.gap;
            prof.argmin_s = pt.s;
        }
    }
    return prof;
}

PathProfile path_gap_profile(const ModelParams& p, double k, double b,
                             const std::vector<double>& s_grid, int threads) {
    check_s_grid(s_grid);
    std::vector<GapPoint> points(s_grid.size());
    parallel_for_index(static_cast<int>(s_grid.size()), threads, [&](int i) {
        const double s = s_grid[static_cast<size_t>(i)];
        const SpectralResult r = analyze(p, DriverSpec{k, b, s});
        points[static_cast<size_t>(i)] = GapPoint{s, r.gap};
    });
    return assemble_profile(std::move(points));
}

PathProfile path_gap_profile_serial(const ModelParams& p, double k, double b,
                                    const std::vector<double>& s_grid) {
    check_s_grid(s_grid);
    std::vector<GapPoint> points;
    points.reserve(s_grid.size());
    for (double s : s_grid) {
        const SpectralResult r = analyze(p, DriverSpec{k, b, s});
        points.push_back(GapPoint{s, r.gap});
    }
    return assemble_profile(std::move(points));
}

} // namespace splab
