#pragma once

#include <vector>

#include "hodgelink/complex.hpp"
#include "hodgelink/partition.hpp"
#include "hodgelink/types.hpp"

namespace hodgelink {

// Graph-only baselines. They consume the skeleton alone; triangles are
// deliberately ignored. The entry formulas are reconstructions of the cited
// line-graph and dendrogram methods and are fixed as this repository's
// contract; see README.

enum class LineGraphKind { C, D, E1 };

/// Weighted line graphs over the n1 links:
///   C: unweighted, 1 between links sharing a node, no diagonal.
///   D: 1/(k_i - 1) per shared node i of degree >= 2, no diagonal.
///   E1: 1/k_i per shared node, diagonal 1/k_u + 1/k_v unless with_self is off.
SpMatD line_graph(const SimplicialComplex& x, LineGraphKind kind, bool with_self = true);

/// Jaccard similarity of the inclusive neighborhoods of the non-shared
/// endpoints; 0 for links without a common node.
double link_similarity(const SimplicialComplex& x, int link_a, int link_b);

/// Partition density: (2/M) sum_c m_c (m_c - n_c + 1) / ((n_c - 2)(n_c - 1)),
/// where communities inducing at most 2 nodes contribute 0.
double partition_density(const SimplicialComplex& x, const std::vector<int>& assignment);

struct DendrogramMerge {
    int a = 0; // representative links of the merged clusters
    int b = 0;
    double similarity = 0;
};

struct Dendrogram {
    std::vector<DendrogramMerge> merges; // non-increasing similarity
};

/// Single-linkage agglomeration over link similarities, cut at the level of
/// maximum partition density (earliest level wins ties). With
/// target_communities > 0 the cut is taken where that many clusters remain
/// instead. Similarity ties merge in lexicographic link order.
Partition dendrogram_cut(const SimplicialComplex& x, Dendrogram* dendrogram = nullptr,
                         int target_communities = 0);

} // namespace hodgelink
