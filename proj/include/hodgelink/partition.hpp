#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodgelink/lifting.hpp"
#include "hodgelink/types.hpp"

namespace hodgelink {

/// A community assignment over graph nodes (oriented links or links),
/// with the optimization metadata needed to reproduce it.
struct Partition {
    std::vector<int> assignment; // contiguous community ids 0..C-1
    double score = 0;            // objective value of the reported partition
    int t = 1;                   // random-walk time step of the objective
    std::uint64_t seed = 0;
    std::string method;
    int condition_star = -1; // 1 holds, 0 violated, -1 not applicable
    std::vector<int> level_sizes;     // nodes per coarse-graining level
    std::vector<double> level_scores; // objective after each level

    int n_communities() const;
};

/// Newman modularity per the standard definition; self-loops contribute to
/// both the adjacency diagonal and the degrees.
double modularity(const SpMatD& adj, const std::vector<int>& assignment);
double modularity(const Eigen::MatrixXd& adj, const std::vector<int>& assignment);

/// Markov-stability effective adjacency (T^t)_{ij} k_j with T = A D^{-1}.
/// t = 1 returns the input unchanged, bit for bit. Dense computation, gated
/// at max_dense rows. Requires a connected adjacency.
Eigen::MatrixXd stability_matrix(const Eigen::MatrixXd& adj, int t, int max_dense = 4096);

/// Louvain local moving + aggregation with a fixed processing order.
/// Deterministic: strictly-better moves only, ties keep the current
/// community, equal best targets resolve to the lowest community id.
/// When move_trace is given, the objective is recorded after every accepted
/// first-level move (strictly increasing by construction).
Partition louvain(const SpMatD& adj, const std::vector<int>& order,
                  std::vector<double>* move_trace = nullptr);
Partition louvain(const Eigen::MatrixXd& adj, const std::vector<int>& order,
                  std::vector<double>* move_trace = nullptr);

struct ConditionStar {
    bool holds = false;
    std::vector<int> violating_states;
};

/// Checks k_i <= sqrt(2m) on the lifted graph, exactly in integer arithmetic.
ConditionStar check_condition_star(const LiftedLineGraph& g);

/// Processing order for the lifted graph: all reference orientations first,
/// then all reversals in the same order. With shuffle, permutes within each
/// half only, preserving the pairing hypothesis.
std::vector<int> pairing_order(int n1, std::uint64_t seed, bool shuffle);

/// Louvain on the lifted adjacency (or its stability matrix for t > 1) with
/// the pairing order. When the degree condition holds the two orientations of
/// every link land in the same community.
Partition partition_lifted(const LiftedLineGraph& g, int t, std::uint64_t seed,
                           bool shuffle = false, int max_dense = 4096);

/// Collapse an oriented-link partition to links. Disagreeing orientation
/// pairs merge into the lower community id; the count is reported through
/// mismatches and a warning is emitted.
Partition project_to_links(const Partition& lifted, int n1, int* mismatches = nullptr);

/// Louvain directly on the supernode graph A_I + A_II. Under the degree
/// condition this matches project_to_links(partition_lifted(...)) at equal
/// seeds and orders.
Partition partition_supernode(const LiftedLineGraph& g, int t, std::uint64_t seed,
                              bool shuffle = false, int max_dense = 4096);

/// Greedy post-hoc constraint: repeatedly merge the community pair whose
/// merge loses the least objective until at most `target` communities remain.
/// A partition already at or below the target is returned unchanged.
Partition merge_to_count(const SpMatD& adj, const Partition& p, int target);
Partition merge_to_count(const Eigen::MatrixXd& adj, const Partition& p, int target);

} // namespace hodgelink
