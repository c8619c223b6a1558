#pragma once

#include <cstdint>

#include "hodgelink/complex.hpp"
#include "hodgelink/types.hpp"

namespace hodgelink {

/// Weighted graph on the 2*n1 oriented-link states. State k < n1 is the
/// reference orientation of link k, state k + n1 its reversal. The adjacency
/// splits into lower adjacency (shared node, head-to-tail aligned), upper
/// adjacency (shared filled triangle, anti-aligned boundary signs) and a
/// self-loop diagonal equal to the link's total degree. Immutable after lift().
struct LiftedLineGraph {
    int n1 = 0;
    SpMatI lower;   // 2n1 x 2n1, symmetric
    SpMatI upper;   // 2n1 x 2n1, symmetric
    VecI self_loop; // length 2n1, per-state deg(i)+deg(j)+3deg(i,j)

    int states() const { return 2 * n1; }
    int reverse(int state) const { return (state + n1) % (2 * n1); }

    /// Full adjacency lower + upper + diag(self_loop).
    SpMatI adjacency() const;
    /// Row sums of the adjacency; equals 2*Dtot stacked twice.
    VecI strength() const;
    /// Reference-reference block view A_I of the adjacency (n1 x n1).
    MatI block_i() const;
    /// Reference-reverse block view A_II of the adjacency (n1 x n1).
    MatI block_ii() const;
};

/// Build the lifted line graph from the positive/negative parts of the lifted
/// boundary operators B1 [I -I] and [B2; -B2].
LiftedLineGraph lift(const SimplicialComplex& x);

/// Column-stochastic transition matrix A * diag(A 1)^{-1}. Columns sum to 1
/// and the diagonal is exactly 1/2 (lazy walk). Distributions evolve as
/// p_{t+1} = P p_t. Throws ZeroRowSum on an isolated state.
SpMatD transition_matrix(const LiftedLineGraph& g);

/// Supernode graph S(G): both orientations of each link collapsed, adjacency
/// A_I + A_II (n1 x n1, symmetric, diagonal carries the folded self-loops).
SpMatI supernode_graph(const LiftedLineGraph& g);

/// Monte-Carlo estimate of P^steps * delta_start via the three-case sampler:
/// stay with probability 1/2, otherwise a lower or an upper move weighted by
/// the respective adjacency row. Returns the empirical distribution over the
/// 2*n1 states.
Eigen::VectorXd simulate_walk(const LiftedLineGraph& g, int start, int steps,
                              std::int64_t samples, std::uint64_t seed);

} // namespace hodgelink
