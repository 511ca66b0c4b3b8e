#pragma once

#include <functional>
#include <vector>

#include "splab/model.hpp"
#include "splab/spectral.hpp"

namespace splab {

struct SweepRow {
    double b = 0.0;
    double e0 = 0.0;
    double e1 = 0.0;
    double gap = 0.0;
    double overlap = 0.0;
};

// One analyze() per grid point, rows in grid order.
std::vector<SweepRow> sweep_b(const ModelParams& p, double k, double s,
                              const std::vector<double>& b_grid, int threads = 0);
std::vector<SweepRow> sweep_b_serial(const ModelParams& p, double k, double s,
                                     const std::vector<double>& b_grid);

struct GoldenResult {
    double x_min = 0.0;
    double f_min = 0.0;
    bool converged = false;  // false when the 200-iteration cap was hit
    int iterations = 0;
};

// Golden-section minimization inside a bracket a < m < c with
// f(m) < f(a), f(m) < f(c).  Stops when the bracket width drops below tol.
GoldenResult golden_section_min(const std::function<double(double)>& f,
                                double a, double m, double c, double tol);

struct MinGapResult {
    double b_min = 0.0;
    double gap_min = 0.0;
    double bracket_lo = 0.0;  // coarse-grid bracket around the refined minimum
    double bracket_hi = 0.0;
    bool below_resolution = false;
    bool at_boundary = false;  // no interior bracket; value taken at a range edge
    bool converged = true;
};

struct GapSearchOptions {
    double b_lo = 0.0;
    double b_hi = 1.5;
    int coarse_points = 64;
    double tol = 1e-10;
    int threads = 0;
};

// Coarse scan of gap(b) followed by golden-section refinement of every local
// minimum within 2x of the best one (the gap is not globally unimodal for
// k = 2).  Results are ordered smallest gap first.
std::vector<MinGapResult> min_gap(const ModelParams& p, double k, double s,
                                  const GapSearchOptions& opt);

struct BcrRow {
    int n = 0;
    MinGapResult first_closing;  // leftmost interior minimum (b_cr estimate)
    MinGapResult global;
};

struct BcrEstimate {
    std::vector<BcrRow> per_n;
    double b_work = 0.0;  // b_min at the largest n, backed off by the margin
    double margin = 0.0;
    bool drifting_location = false;  // b_min(n) has no n-independent limit
};

BcrEstimate bcr_estimate(const ParamSpec& spec, double k, double s,
                         const std::vector<int>& n_list,
                         const GapSearchOptions& opt, double margin_frac = 0.025);

} // namespace splab
