#pragma once

#include "splab/model.hpp"
#include "splab/types.hpp"

namespace splab {

// Transverse-field term of H_s = H_Z - s*b*n*(X/n)^k.  Non-integer k is
// interpreted through |X|^k (same eigenvectors, eigenvalues |lambda|^k).
struct DriverSpec {
    double k = 1.0;
    double b = 0.0;
    double s = 1.0;
};

void validate_driver(const DriverSpec& d);

// Total spin operator X = sum_i X_i restricted to the permutation-symmetric
// (Dicke) subspace: tridiagonal, <w+1|X|w> = sqrt((w+1)(n-w)).
Matrix x_matrix(int n);

// Uniform superposition (ground state of -X); Dicke amplitude at weight w is
// sqrt(C(n,w)) / 2^(n/2), evaluated through log-factorials.
Vector psi_plus(int n);

// s*b*n*(X/n)^k as a dense symmetric matrix, built from the eigensystem of X.
// k within 1e-9 of an integer uses the signed power, otherwise |lambda|^k.
Matrix driver_matrix(int n, const DriverSpec& d);

// diag(potential) - driver.
Matrix hamiltonian(const ModelParams& p, const DriverSpec& d);

} // namespace splab
