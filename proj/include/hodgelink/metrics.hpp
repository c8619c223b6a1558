#pragma once

#include <string>
#include <vector>

#include "hodgelink/complex.hpp"
#include "hodgelink/metrics_types.hpp"
#include "hodgelink/partition.hpp"

namespace hodgelink {

/// Community ids of the links incident to each node (sorted, deduplicated);
/// index = dense node id. No nontriviality filter here.
std::vector<std::vector<int>> node_memberships(const SimplicialComplex& x,
                                               const std::vector<int>& assignment);

/// Flags communities whose links induce three or more distinct nodes.
std::vector<char> nontrivial_communities(const SimplicialComplex& x,
                                         const std::vector<int>& assignment);

/// Ratio of the mean label agreement over node pairs sharing a nontrivial
/// community to the mean over all pairs. Sets *defined to false when there
/// are no within pairs (or no label variation mass at all).
double enrichment(const SimplicialComplex& x, const std::vector<int>& assignment,
                  const NodeMetadata& meta, bool* defined = nullptr, int* dropped = nullptr);

/// Mutual information, in bits, between the per-node count of nontrivial
/// memberships and the overlap metadata. Integer-valued metadata is used
/// unbinned, otherwise quantile-binned into min(8, distinct values) bins.
/// Degenerate marginals give 0 bits.
double overlap_quality(const SimplicialComplex& x, const std::vector<int>& assignment,
                       const NodeMetadata& meta, int* dropped = nullptr);

/// Fraction of nodes in at least one nontrivial community.
double community_coverage(const SimplicialComplex& x, const std::vector<int>& assignment);

/// Mean number of nontrivial memberships per node.
double overlap_coverage(const SimplicialComplex& x, const std::vector<int>& assignment);

/// All four metrics for one partition.
MetricsReport evaluate_partition(const SimplicialComplex& x, const Partition& p,
                                 const NodeMetadata& meta, const std::string& network,
                                 const std::string& method);

struct CompositeRow {
    std::string method;
    double enrichment = 0;
    double overlap_quality = 0;
    double community_coverage = 0;
    double overlap_coverage = 0;
    double composite = 0;
    bool had_undefined = false; // an undefined metric entered as 0
};

/// Per-metric max renormalization across methods (one report per method) and
/// the composite sum of the four normalized values.
std::vector<CompositeRow> composite(const std::vector<MetricsReport>& per_method);

} // namespace hodgelink
