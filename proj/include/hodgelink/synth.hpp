#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodgelink/complex.hpp"
#include "hodgelink/metrics_types.hpp"

namespace hodgelink {

/// The two-triangle synthetic: 5 nodes 1..5, links 12,13,23,34,35,45, with
/// only the left triangle {1,2,3} filled. Node 3 is shared.
SimplicialComplex two_triangles();

struct PlantedOverlap {
    SimplicialComplex complex;
    NodeMetadata metadata; // block label as similarity, true membership count as overlap
};

/// Chain of clique blocks sharing `overlap_nodes` consecutive nodes; triangles
/// inside each block are filled independently at triangle_rate.
PlantedOverlap planted_overlap(int blocks, int block_size, int overlap_nodes,
                               double triangle_rate, std::uint64_t seed);

/// Erdos-Renyi skeleton with each closed triangle filled at rate `fill`,
/// redrawn until the skeleton is connected and non-bipartite.
SimplicialComplex random_walk_complex(int nodes, double p, double fill, std::uint64_t seed);

/// Deterministic bounded-degree ladder: links (i,i+1), (i,i+2) and filled
/// triangles (i,i+1,i+2). n1 = 2n-3, n2 = n-2.
SimplicialComplex triangle_strip(int nodes);

struct SampledNetwork {
    std::string id;
    SimplicialComplex complex; // induced; keeps a triangle iff all 3 nodes sampled
};

/// Snowball samples from random seed nodes until a node-count target drawn
/// uniformly from [min_nodes, max_nodes], retried until the induced complex
/// is connected and has at least one triangle. Deterministic per seed.
/// Throws SamplingExhausted when the retry budget runs out.
std::vector<SampledNetwork> sample_subnetworks(const SimplicialComplex& x, int count,
                                               int min_nodes, int max_nodes,
                                               std::uint64_t seed);

} // namespace hodgelink
