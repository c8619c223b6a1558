#pragma once

#include <utility>

#include "hodgelink/complex.hpp"
#include "hodgelink/lifting.hpp"
#include "hodgelink/types.hpp"

namespace hodgelink {

/// Numerical verification bundle for the spectral claims about the lifted
/// walk. All spectra are sorted ascending.
struct SpectrumReport {
    Eigen::VectorXd full;     // Spec(P), 2n1 values
    Eigen::VectorXd even;     // Spec(P_I + P_II)
    Eigen::VectorXd odd;      // Spec(P_I - P_II)
    double multiset_gap = 0;  // max gap between sorted full and even+odd
    bool even_contains_one = false;
    Eigen::VectorXd stationary;      // pi = d / 2m
    double stationary_residual = 0;  // ||P pi - pi||_max
    double projection_residual = 0;  // ||V^T pi||_max
};

/// Max-norm residual of (I - L1_norm) V^T = 2 V^T P over the whole matrix.
double verify_lifting_identity(const SimplicialComplex& x);

/// Dense eigensolves on the symmetric similar matrices W^{-1/2} A W^{-1/2};
/// refuses complexes with n1 > max_dense.
SpectrumReport spectrum_decomposition(const LiftedLineGraph& g, int max_dense = 4096);

/// Residual ||P [x;x] - lambda [x;x]||_max for an even eigenpair. Throws
/// NotAnEigenpair when (x, lambda) fails the even system at 1e-10.
double lift_even_eigenvector(const LiftedLineGraph& g, const Eigen::VectorXd& x, double lambda);

struct StationaryCheck {
    Eigen::VectorXd pi;
    double stationary_residual = 0;
    double projection_residual = 0;
};

/// pi = d / 2m with d the adjacency row sums; verifies P pi = pi and
/// V^T pi = 0.
StationaryCheck stationary_projection(const LiftedLineGraph& g);

/// Exact rank over the rationals by fraction-free (Bareiss) elimination in
/// 128-bit integers. Throws NumericError if an intermediate minor overflows.
int integer_rank(const MatI& m);

/// First Betti number n1 - rank(B1) - rank(B2), exact.
int betti_1(const SimplicialComplex& x);

/// Kernel dimension of the Hodge 1-Laplacian, counted from the spectrum of
/// the symmetrized normalized operator.
int kernel_dimension_l1(const SimplicialComplex& x, double tol = 1e-7);

} // namespace hodgelink
