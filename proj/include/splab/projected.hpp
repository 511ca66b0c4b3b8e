#pragma once

#include <utility>
#include <vector>

#include "splab/model.hpp"
#include "splab/operators.hpp"
#include "splab/spectral.hpp"
#include "splab/types.hpp"

namespace splab {

// Basis for the problem restricted to Hamming distance <= d from a reference
// string of weight w_b (taken as 1 on the first w_b bits).  States symmetric
// under permutations inside each bit group are labelled (w1, w2) with
// 0 <= w1 <= w_b, 0 <= w2 <= n - w_b, and distance (w_b - w1) + w2 <= d.
// Only w_b enters the construction, so any reference string of the same
// weight produces the same spectrum.
struct TwoWeightBasis {
    int n = 0;
    int w_b = 0;
    int d = 0;
    std::vector<std::pair<int, int>> states;  // lexicographic in (w1, w2)

    int size() const { return static_cast<int>(states.size()); }
    // -1 when (w1, w2) is outside the ball or out of range.
    int index_of(int w1, int w2) const;

  private:
    std::vector<int> index_;
    friend TwoWeightBasis build_basis(int n, int w_b, int d);
};

TwoWeightBasis build_basis(int n, int w_b, int d);

// X restricted to the ball: couplings that would leave the ball are dropped,
// which is exactly P X P on the range of the projector.
Matrix projected_x_matrix(const TwoWeightBasis& basis);

// P (s H_Z - (1-s) X) P on the ball: the interpolation family of the locally
// projected adiabatic algorithm.
Matrix projected_hamiltonian(const ModelParams& p, const TwoWeightBasis& basis,
                             double s);

// Short-path family on the ball: diag(V) - s*b*n*(X_p/n)^k with X_p the
// projected X; k != 1 goes through the eigensystem of X_p.
Matrix projected_shortpath_hamiltonian(const ModelParams& p,
                                       const TwoWeightBasis& basis,
                                       const DriverSpec& d);

struct ProjectedProfile {
    std::vector<GapPoint> points;
    double min_gap = 0.0;
    double argmin_s = 0.0;
    bool success = false;       // ball minimum of V attains the global minimum
    int ground_weight_s1 = 0;   // total weight of the s = 1 ground state
    double ball_min_potential = 0.0;
};

ProjectedProfile projected_path_profile(const ModelParams& p,
                                        const TwoWeightBasis& basis,
                                        const std::vector<double>& s_grid,
                                        int threads = 0);

} // namespace splab
