#pragma once

#include <vector>

#include "splab/model.hpp"
#include "splab/operators.hpp"
#include "splab/types.hpp"

namespace splab {

// Gaps this far below the spectral norm are reported but flagged: the
// splitting is at the mercy of double-precision roundoff down there.
inline constexpr double kResolutionFloorFactor = 1e-12;

struct EigenSystem {
    Vector values;   // ascending
    Matrix vectors;  // orthonormal columns, same order
};

// Dense symmetric eigensolve.  The two lowest pairs are residual-checked
// against resid_tol * ||m||; failure throws numerical_error.
EigenSystem eigensolve(const Matrix& m, double resid_tol = 1e-10);

struct SpectralResult {
    double e0 = 0.0;
    double e1 = 0.0;
    double gap = 0.0;
    Vector ground;          // sign fixed so that <ground, psi_plus> >= 0
    double overlap = 0.0;   // |<ground, psi_plus>|
    double norm_bound = 0.0;      // max |eigenvalue|
    bool below_resolution = false;
};

// Eigensolve hamiltonian(p, d) and extract (e0, e1, gap, ground, overlap).
SpectralResult analyze(const ModelParams& p, const DriverSpec& d);

struct GapPoint {
    double s = 0.0;
    double gap = 0.0;
};

struct PathProfile {
    std::vector<GapPoint> points;  // in input order
    double min_gap = 0.0;
    double argmin_s = 0.0;
};

// Gap of H_s along an s-grid at fixed k, b.  The parallel version fans the
// grid points out over OpenMP threads; results are identical to the serial
// reference for any thread count.
PathProfile path_gap_profile(const ModelParams& p, double k, double b,
                             const std::vector<double>& s_grid, int threads = 0);
PathProfile path_gap_profile_serial(const ModelParams& p, double k, double b,
                                    const std::vector<double>& s_grid);

} // namespace splab
