#include "hodgelink/synth.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "hodgelink/rng.hpp"

namespace hodgelink {

SimplicialComplex two_triangles() {
    return build_complex({{1, 2, 3}, {3, 4}, {3, 5}, {4, 5}}, ClosurePolicy::complete);
}

PlantedOverlap planted_overlap(int blocks, int block_size, int overlap_nodes,
                               double triangle_rate, std::uint64_t seed) {
    if (blocks < 2)
        throw ConfigError("planted_overlap needs at least 2 blocks");
    if (overlap_nodes < 1 || overlap_nodes >= block_size)
        throw ConfigError("overlap_nodes must be in [1, block_size)");

    std::mt19937_64 gen(seed);
    std::vector<std::vector<std::int64_t>> simplices;
    const int stride = block_size - overlap_nodes;
    for (int b = 0; b < blocks; ++b) {
        const std::int64_t start = static_cast<std::int64_t>(b) * stride;
        for (int i = 0; i < block_size; ++i)
            for (int j = i + 1; j < block_size; ++j) {
                simplices.push_back({start + i, start + j});
                for (int k = j + 1; k < block_size; ++k)
                    if (rng::uniform01(gen) < triangle_rate)
                        simplices.push_back({start + i, start + j, start + k});
            }
    }

    PlantedOverlap out;
    out.complex = build_complex(simplices, ClosurePolicy::complete);
    const std::int64_t total = static_cast<std::int64_t>(blocks - 1) * stride + block_size;
    for (std::int64_t v = 0; v < total; ++v) {
        int member_count = 0;
        int first_block = -1;
        for (int b = 0; b < blocks; ++b) {
            std::int64_t start = static_cast<std::int64_t>(b) * stride;
            if (v >= start && v < start + block_size) {
                ++member_count;
                if (first_block < 0)
                    first_block = b;
            }
        }
        out.metadata.similarity_attr[v] = "block" + std::to_string(first_block);
        out.metadata.overlap_attr[v] = static_cast<double>(member_count);
    }
    return out;
}

SimplicialComplex random_walk_complex(int nodes, double p, double fill, std::uint64_t seed) {
    if (nodes < 3)
        throw ConfigError("random complex needs at least 3 nodes");
    std::mt19937_64 gen(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<bool>> adj(nodes, std::vector<bool>(nodes, false));
        std::vector<std::vector<std::int64_t>> simplices;
        for (int i = 0; i < nodes; ++i)
            for (int j = i + 1; j < nodes; ++j)
                if (rng::uniform01(gen) < p) {
                    adj[i][j] = adj[j][i] = true;
                    simplices.push_back({i, j});
                }
        for (int i = 0; i < nodes; ++i)
            for (int j = i + 1; j < nodes; ++j) {
                if (!adj[i][j])
                    continue;
                for (int k = j + 1; k < nodes; ++k)
                    if (adj[i][k] && adj[j][k] && rng::uniform01(gen) < fill)
                        simplices.push_back({i, j, k});
            }
        if (simplices.empty())
            continue;
        SimplicialComplex x = build_complex(simplices, ClosurePolicy::complete);
        if (x.n0() == nodes && validate_walk_assumptions(x) == WalkCheck::ok)
            return x;
    }
    throw DataError("failed to draw a connected non-bipartite complex in 1000 attempts");
}

SimplicialComplex triangle_strip(int nodes) {
    if (nodes < 3)
        throw ConfigError("triangle strip needs at least 3 nodes");
    std::vector<std::vector<std::int64_t>> simplices;
    simplices.reserve(nodes);
    for (int i = 0; i + 2 < nodes; ++i)
        simplices.push_back({i, i + 1, i + 2});
    return build_complex(simplices, ClosurePolicy::complete);
}

std::vector<SampledNetwork> sample_subnetworks(const SimplicialComplex& x, int count,
                                               int min_nodes, int max_nodes,
                                               std::uint64_t seed) {
    if (count < 1 || min_nodes < 3 || max_nodes < min_nodes)
        throw ConfigError("bad sampling parameters");
    std::mt19937_64 gen(seed);
    std::vector<SampledNetwork> out;
    out.reserve(count);
    const int budget = 200 * count;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > budget)
            throw SamplingExhausted("snowball sampling used up its retry budget (" +
                                    std::to_string(budget) + " attempts)");
        if (max_nodes > x.n0())
            throw SamplingExhausted("requested sizes exceed the dataset");
        const int target = rng::uniform_int(gen, min_nodes, max_nodes);

        // Snowball: BFS ball around a random seed node, neighbors in random order.
        std::vector<bool> taken(x.n0(), false);
        std::vector<NodeId> ball;
        std::queue<NodeId> frontier;
        NodeId root = static_cast<NodeId>(rng::uniform_index(gen, x.n0()));
        taken[root] = true;
        ball.push_back(root);
        frontier.push(root);
        while (!frontier.empty() && static_cast<int>(ball.size()) < target) {
            NodeId u = frontier.front();
            frontier.pop();
            std::vector<NodeId> nbrs;
            for (int k : x.incident_links(u)) {
                const Link& l = x.links()[k];
                NodeId v = (l.lo == u) ? l.hi : l.lo;
                if (!taken[v])
                    nbrs.push_back(v);
            }
            rng::shuffle(nbrs, gen);
            for (NodeId v : nbrs) {
                if (static_cast<int>(ball.size()) >= target)
                    break;
                taken[v] = true;
                ball.push_back(v);
                frontier.push(v);
            }
        }
        if (static_cast<int>(ball.size()) < min_nodes)
            continue;

        // Induced sub-complex in original ids; a triangle survives iff all
        // three nodes were sampled.
        std::vector<std::vector<std::int64_t>> simplices;
        for (const Link& l : x.links())
            if (taken[l.lo] && taken[l.hi])
                simplices.push_back({x.original_id(l.lo), x.original_id(l.hi)});
        for (const Triangle& t : x.triangles())
            if (taken[t.a] && taken[t.b] && taken[t.c])
                simplices.push_back(
                    {x.original_id(t.a), x.original_id(t.b), x.original_id(t.c)});
        if (simplices.empty())
            continue;
        SimplicialComplex sub = build_complex(simplices, ClosurePolicy::complete);
        if (sub.n2() < 1 || validate_walk_assumptions(sub) != WalkCheck::ok)
            continue;
        SampledNetwork net;
        net.id = "net_" + std::to_string(out.size());
        net.complex = std::move(sub);
        out.push_back(std::move(net));
    }
    return out;
}

} // namespace hodgelink
