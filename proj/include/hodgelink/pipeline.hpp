#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodgelink/complex.hpp"
#include "hodgelink/lifting.hpp"
#include "hodgelink/metrics.hpp"
#include "hodgelink/partition.hpp"

namespace hodgelink {

/// Declarative run description; parsed from key=value text with flag
/// overrides winning.
struct RunConfig {
    std::string input;    // simplex-list path, or synth:two_triangles /
                          // synth:planted:<blocks>,<size>,<overlap>,<rate>
    std::string metadata; // optional metadata CSV
    std::vector<std::string> methods;    // subset of hat_A, C, D, E1, S
    std::vector<int> t_grid = {1, 2, 3, 5, 8};
    std::uint64_t seed = 42;
    ClosurePolicy closure = ClosurePolicy::complete;
    bool project_cliques = false;
    int sample_count = 0; // 0: run on the whole network
    int sample_min = 0;
    int sample_max = 0;
    int constrain_k = 0; // 0: unconstrained
    int max_dense = 4096;
    bool shuffle = true;
    bool e1_self = true;
    int jobs = 1;
    std::string out_dir;
};

RunConfig config_from_map(const std::map<std::string, std::string>& kv);

struct StageTiming {
    std::string network;
    std::string stage;
    double seconds = 0;
};

struct PipelineResult {
    int networks = 0;
    std::vector<MetricsReport> reports; // one row per (network, method, t)
    std::vector<double> q_hat;          // modularity of each row's link partition on S(G)
    std::vector<CompositeRow> composite_rows;
    std::vector<StageTiming> timings;
};

/// One partitioning run of a single method at one time step. hat_A runs on
/// the supernode graph (the pairing-safe route); hat_A_lifted runs on the
/// lifted graph and projects. Baselines consume the skeleton only.
Partition run_method(const SimplicialComplex& x, const LiftedLineGraph& g,
                     const std::string& method, int t, std::uint64_t seed, bool shuffle,
                     int constrain_k, int max_dense, bool e1_self);

/// End-to-end batch: ingest (or synthesize, or snowball-sample), partition
/// with every configured method over the t grid, score the four metrics,
/// renormalize the composite, and persist everything under cfg.out_dir.
PipelineResult run_pipeline(const RunConfig& cfg);

} // namespace hodgelink
