#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "hodgelink/errors.hpp"

namespace hodgelink {

using NodeId = std::int32_t;

/// Undirected link stored in reference orientation (ascending node labels).
struct Link {
    NodeId lo = 0;
    NodeId hi = 0;
    auto operator<=>(const Link&) const = default;
};

/// Filled triangle stored in reference orientation a < b < c.
struct Triangle {
    NodeId a = 0;
    NodeId b = 0;
    NodeId c = 0;
    auto operator<=>(const Triangle&) const = default;
};

enum class ClosurePolicy { complete, reject };

enum class WalkCheck { ok, disconnected, bipartite };

/// Simplicial complex up to dimension 2. Node ids are dense 0..n0-1 after
/// ingestion remapping; links and triangles are kept sorted lexicographically
/// and this order fixes the basis of every derived matrix. Immutable once
/// built, safe to share across threads.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::int64_t> original_ids,
                      std::vector<Link> links,
                      std::vector<Triangle> triangles);

    int n0() const { return static_cast<int>(original_ids_.size()); }
    int n1() const { return static_cast<int>(links_.size()); }
    int n2() const { return static_cast<int>(triangles_.size()); }

    const std::vector<Link>& links() const { return links_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    /// Column index of a link; throws UnknownLink if absent.
    int link_index(Link l) const;
    /// Column index of a link, or -1 if absent. Order of endpoints is free.
    int find_link(NodeId u, NodeId v) const;

    /// Number of links containing the node (co-face count).
    int node_degree(NodeId i) const { return node_degree_[i]; }
    /// Number of filled triangles containing the link (co-face count).
    int link_degree(int link) const { return link_degree_[link]; }

    /// Co-face counts (deg(i), deg(j), deg(i,j)) for link {i,j}.
    std::array<int, 3> degrees(Link l) const;

    /// Links incident to a node, as link column indices.
    const std::vector<int>& incident_links(NodeId i) const { return incident_links_[i]; }

    std::int64_t original_id(NodeId i) const { return original_ids_[i]; }
    const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
    /// Dense id of an original node id, or -1 when unknown.
    NodeId dense_id(std::int64_t original) const;

    bool operator==(const SimplicialComplex& other) const {
        return original_ids_ == other.original_ids_ && links_ == other.links_ &&
               triangles_ == other.triangles_;
    }

private:
    std::vector<std::int64_t> original_ids_; // sorted ascending
    std::vector<Link> links_;                // sorted lexicographically
    std::vector<Triangle> triangles_;        // sorted lexicographically
    std::vector<int> node_degree_;
    std::vector<int> link_degree_;
    std::vector<std::vector<int>> incident_links_;
};

/// Build a complex from raw simplices (1-3 distinct node ids each, arbitrary
/// non-negative labels). With `complete` missing faces are inserted, with
/// `reject` they raise ClosureViolation. Simplices larger than 3 nodes raise
/// SimplexTooLarge unless project_cliques is set, in which case all their
/// 2- and 3-subsets are inserted instead.
SimplicialComplex build_complex(const std::vector<std::vector<std::int64_t>>& simplices,
                                ClosurePolicy policy,
                                bool project_cliques = false);

/// Classify the graph skeleton for random-walk validity via BFS 2-coloring.
WalkCheck validate_walk_assumptions(const SimplicialComplex& x);

} // namespace hodgelink
