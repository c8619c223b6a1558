#include "hodgelink/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace hodgelink {

SimplicialComplex::SimplicialComplex(std::vector<std::int64_t> original_ids,
                                     std::vector<Link> links,
                                     std::vector<Triangle> triangles)
    : original_ids_(std::move(original_ids)),
      links_(std::move(links)),
      triangles_(std::move(triangles)) {
    const int n0 = static_cast<int>(original_ids_.size());
    node_degree_.assign(n0, 0);
    incident_links_.assign(n0, {});
    for (int k = 0; k < static_cast<int>(links_.size()); ++k) {
        const Link& l = links_[k];
        ++node_degree_[l.lo];
        ++node_degree_[l.hi];
        incident_links_[l.lo].push_back(k);
        incident_links_[l.hi].push_back(k);
    }
    link_degree_.assign(links_.size(), 0);
    for (const Triangle& t : triangles_) {
        ++link_degree_[link_index({t.a, t.b})];
        ++link_degree_[link_index({t.a, t.c})];
        ++link_degree_[link_index({t.b, t.c})];
    }
}

int SimplicialComplex::link_index(Link l) const {
    int k = find_link(l.lo, l.hi);
    if (k < 0)
        throw UnknownLink("link {" + std::to_string(l.lo) + "," + std::to_string(l.hi) +
                          "} is not in the complex");
    return k;
}

int SimplicialComplex::find_link(NodeId u, NodeId v) const {
    Link l{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(links_.begin(), links_.end(), l);
    if (it == links_.end() || *it != l)
        return -1;
    return static_cast<int>(it - links_.begin());
}

std::array<int, 3> SimplicialComplex::degrees(Link l) const {
    int k = link_index(l);
    return {node_degree_[l.lo], node_degree_[l.hi], link_degree_[k]};
}

NodeId SimplicialComplex::dense_id(std::int64_t original) const {
    auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), original);
    if (it == original_ids_.end() || *it != original)
        return -1;
    return static_cast<NodeId>(it - original_ids_.begin());
}

namespace {

std::vector<std::int64_t> distinct_sorted(const std::vector<std::int64_t>& s) {
    std::vector<std::int64_t> out(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

SimplicialComplex build_complex(const std::vector<std::vector<std::int64_t>>& simplices,
                                ClosurePolicy policy,
                                bool project_cliques) {
    if (simplices.empty())
        throw EmptyInput("no simplices given");

    // Normalize the input: dedupe ids within a simplex, expand or refuse
    // simplices of more than 3 nodes.
    std::vector<std::vector<std::int64_t>> normalized;
    normalized.reserve(simplices.size());
    for (const auto& raw : simplices) {
        std::vector<std::int64_t> s = distinct_sorted(raw);
        if (s.empty())
            continue;
        if (s.size() <= 3) {
            normalized.push_back(std::move(s));
            continue;
        }
        if (!project_cliques)
            throw SimplexTooLarge("simplex of " + std::to_string(s.size()) +
                                  " nodes; pass project_cliques to clique-project");
        const std::size_t n = s.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                normalized.push_back({s[i], s[j]});
                for (std::size_t k = j + 1; k < n; ++k)
                    normalized.push_back({s[i], s[j], s[k]});
            }
    }
    if (normalized.empty())
        throw EmptyInput("no non-empty simplices given");

    std::set<std::int64_t> node_set;
    std::set<std::pair<std::int64_t, std::int64_t>> link_set;
    std::set<std::array<std::int64_t, 3>> tri_set;
    for (const auto& s : normalized) {
        node_set.insert(s.begin(), s.end());
        if (s.size() == 2)
            link_set.insert({s[0], s[1]});
        else if (s.size() == 3)
            tri_set.insert({s[0], s[1], s[2]});
    }

    // Downward closure.
    for (const auto& t : tri_set) {
        const std::pair<std::int64_t, std::int64_t> faces[3] = {
            {t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (const auto& f : faces) {
            if (link_set.count(f))
                continue;
            if (policy == ClosurePolicy::reject)
                throw ClosureViolation("triangle face {" + std::to_string(f.first) + "," +
                                       std::to_string(f.second) +
                                       "} missing from the input");
            link_set.insert(f);
        }
    }

    std::vector<std::int64_t> original_ids(node_set.begin(), node_set.end());
    auto dense = [&](std::int64_t id) {
        return static_cast<NodeId>(
            std::lower_bound(original_ids.begin(), original_ids.end(), id) -
            original_ids.begin());
    };

    std::vector<Link> links;
    links.reserve(link_set.size());
    for (const auto& [u, v] : link_set)
        links.push_back({dense(u), dense(v)});
    std::sort(links.begin(), links.end());

    std::vector<Triangle> triangles;
    triangles.reserve(tri_set.size());
    for (const auto& t : tri_set)
        triangles.push_back({dense(t[0]), dense(t[1]), dense(t[2])});
    std::sort(triangles.begin(), triangles.end());

    return SimplicialComplex(std::move(original_ids), std::move(links), std::move(triangles));
}

WalkCheck validate_walk_assumptions(const SimplicialComplex& x) {
    const int n = x.n0();
    if (n == 0)
        return WalkCheck::disconnected;
    std::vector<int> color(n, -1);
    std::queue<NodeId> frontier;
    color[0] = 0;
    frontier.push(0);
    int visited = 1;
    bool odd_cycle = false;
    while (!frontier.empty()) {
        NodeId u = frontier.front();
        frontier.pop();
        for (int k : x.incident_links(u)) {
            const Link& l = x.links()[k];
            NodeId v = (l.lo == u) ? l.hi : l.lo;
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                ++visited;
                frontier.push(v);
            } else if (color[v] == color[u]) {
                odd_cycle = true;
            }
        }
    }
    if (visited < n)
        return WalkCheck::disconnected;
    if (!odd_cycle)
        return WalkCheck::bipartite;
    return WalkCheck::ok;
}

} // namespace hodgelink
