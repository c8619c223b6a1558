#pragma once

#include "hodgelink/complex.hpp"
#include "hodgelink/types.hpp"

namespace hodgelink {

// Boundary operators and Laplacians are kept in exact integer arithmetic;
// division by the degree diagonal happens only at the last step in doubles,
// so the integer identities (B1*B2 = 0, row sums) stay exactly checkable.

/// Signed node-link incidence, n0 x n1. Column of link [i,j] (i<j) carries
/// -1 at row i and +1 at row j.
SpMatI boundary_1(const SimplicialComplex& x);

/// Signed link-triangle incidence, n1 x n2. Column of triangle [i,j,k]
/// (i<j<k) carries +1 at links {i,j} and {j,k} and -1 at {i,k}.
SpMatI boundary_2(const SimplicialComplex& x);

/// Hodge 1-Laplacian B1^T B1 + B2 B2^T, symmetric n1 x n1.
SpMatI hodge_l1(const SimplicialComplex& x);

/// Diagonal deg(i) + deg(j) + 3 deg(i,j) per link, strictly positive on a
/// connected skeleton. Throws ZeroDegree otherwise.
VecI total_degree_diagonal(const SimplicialComplex& x);

/// Right-normalized Hodge 1-Laplacian L1 * Dtot^{-1} (not symmetric in general).
SpMatD normalized_l1(const SimplicialComplex& x);

/// Applies ((I - normalized_l1)/2)^t to a flow vector: the lift-propagate-
/// project diffusion. t = 0 returns the input unchanged.
Eigen::VectorXd project_propagate(const SimplicialComplex& x, const Eigen::VectorXd& flow,
                                  int steps);

} // namespace hodgelink
