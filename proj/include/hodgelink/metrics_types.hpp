#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hodgelink {

/// Per-node metadata keyed by original node id. A node may be missing from
/// either map; it is then dropped from the affected metric only.
struct NodeMetadata {
    std::map<std::int64_t, std::string> similarity_attr; // categorical label
    std::map<std::int64_t, double> overlap_attr;         // membership-count proxy
};

/// The four evaluation metrics for one method on one network.
struct MetricsReport {
    std::string network;
    std::string method;
    int t = 1;
    double score = 0; // the method's own objective for its reported partition
    double enrichment = 0;
    bool enrichment_defined = true;
    double overlap_quality = 0; // bits
    double community_coverage = 0;
    double overlap_coverage = 0;
    int dropped_similarity = 0; // nodes without similarity metadata
    int dropped_overlap = 0;    // nodes without overlap metadata
};

} // namespace hodgelink
