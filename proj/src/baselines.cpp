#include "hodgelink/baselines.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hodgelink {

SpMatD line_graph(const SimplicialComplex& x, LineGraphKind kind, bool with_self) {
    std::vector<Eigen::Triplet<double>> trips;
    for (NodeId i = 0; i < x.n0(); ++i) {
        const auto& inc = x.incident_links(i);
        const int k = x.node_degree(i);
        double w = 0;
        switch (kind) {
        case LineGraphKind::C:
            w = 1.0;
            break;
        case LineGraphKind::D:
            w = (k >= 2) ? 1.0 / (k - 1) : 0.0; // leaves contribute no pairs anyway
            break;
        case LineGraphKind::E1:
            w = 1.0 / k;
            break;
        }
        for (std::size_t p = 0; p < inc.size(); ++p)
            for (std::size_t q = p + 1; q < inc.size(); ++q) {
                trips.emplace_back(inc[p], inc[q], w);
                trips.emplace_back(inc[q], inc[p], w);
            }
    }
    if (kind == LineGraphKind::E1 && with_self)
        for (int l = 0; l < x.n1(); ++l) {
            const Link& link = x.links()[l];
            trips.emplace_back(l, l,
                               1.0 / x.node_degree(link.lo) + 1.0 / x.node_degree(link.hi));
        }
    SpMatD out(x.n1(), x.n1());
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

namespace {

/// Inclusive neighborhood: neighbors of i plus i itself, sorted.
std::vector<NodeId> closed_neighborhood(const SimplicialComplex& x, NodeId i) {
    std::vector<NodeId> out;
    out.reserve(x.incident_links(i).size() + 1);
    out.push_back(i);
    for (int k : x.incident_links(i)) {
        const Link& l = x.links()[k];
        out.push_back(l.lo == i ? l.hi : l.lo);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

double link_similarity(const SimplicialComplex& x, int link_a, int link_b) {
    if (link_a == link_b)
        throw DimensionMismatch("link similarity needs two distinct links");
    const Link& a = x.links()[link_a];
    const Link& b = x.links()[link_b];
    NodeId i = -1, j = -1; // non-shared endpoints
    if (a.lo == b.lo) {
        i = a.hi;
        j = b.hi;
    } else if (a.lo == b.hi) {
        i = a.hi;
        j = b.lo;
    } else if (a.hi == b.lo) {
        i = a.lo;
        j = b.hi;
    } else if (a.hi == b.hi) {
        i = a.lo;
        j = b.lo;
    } else {
        return 0.0;
    }
    std::vector<NodeId> ni = closed_neighborhood(x, i);
    std::vector<NodeId> nj = closed_neighborhood(x, j);
    std::vector<NodeId> both;
    std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(), std::back_inserter(both));
    const double inter = static_cast<double>(both.size());
    const double uni = static_cast<double>(ni.size() + nj.size()) - inter;
    return inter / uni;
}

double partition_density(const SimplicialComplex& x, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != x.n1())
        throw DimensionMismatch("assignment must cover all links");
    if (x.n1() == 0)
        return 0.0;
    int n_comm = 0;
    for (int c : assignment)
        n_comm = std::max(n_comm, c + 1);
    std::vector<int> m_c(n_comm, 0);
    std::vector<std::set<NodeId>> nodes_c(n_comm);
    for (int l = 0; l < x.n1(); ++l) {
        const int c = assignment[l];
        ++m_c[c];
        nodes_c[c].insert(x.links()[l].lo);
        nodes_c[c].insert(x.links()[l].hi);
    }
    double total = 0;
    for (int c = 0; c < n_comm; ++c) {
        const double m = m_c[c];
        const double n = static_cast<double>(nodes_c[c].size());
        if (n <= 2)
            continue;
        total += m * (m - (n - 1)) / ((n - 2) * (n - 1));
    }
    return 2.0 * total / x.n1();
}

Partition dendrogram_cut(const SimplicialComplex& x, Dendrogram* dendrogram,
                         int target_communities) {
    const int n1 = x.n1();
    struct Candidate {
        double sim;
        int a, b;
    };
    std::vector<Candidate> cands;
    // Only pairs sharing a node can have positive similarity; remaining
    // cluster joins happen at similarity 0 in lexicographic order.
    for (NodeId i = 0; i < x.n0(); ++i) {
        const auto& inc = x.incident_links(i);
        for (std::size_t p = 0; p < inc.size(); ++p)
            for (std::size_t q = p + 1; q < inc.size(); ++q) {
                int a = std::min(inc[p], inc[q]);
                int b = std::max(inc[p], inc[q]);
                cands.push_back({link_similarity(x, a, b), a, b});
            }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
        if (l.sim != r.sim)
            return l.sim > r.sim;
        if (l.a != r.a)
            return l.a < r.a;
        return l.b < r.b;
    });
    for (int a = 0; a < n1; ++a)
        for (int b = a + 1; b < n1; ++b)
            if (x.links()[a].lo != x.links()[b].lo && x.links()[a].lo != x.links()[b].hi &&
                x.links()[a].hi != x.links()[b].lo && x.links()[a].hi != x.links()[b].hi)
                cands.push_back({0.0, a, b});

    std::vector<int> parent(n1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto snapshot = [&]() {
        std::vector<int> assign(n1);
        std::map<int, int> remap;
        for (int l = 0; l < n1; ++l) {
            int root = find(l);
            auto it = remap.emplace(root, static_cast<int>(remap.size())).first;
            assign[l] = it->second;
        }
        return assign;
    };

    std::vector<int> best_assign = snapshot(); // all singletons, density 0
    double best_density = partition_density(x, best_assign);
    int clusters = n1;
    if (target_communities > 0 && clusters <= target_communities) {
        Partition p;
        p.assignment = best_assign;
        p.score = best_density;
        p.method = "S";
        return p;
    }

    std::size_t idx = 0;
    while (idx < cands.size() && clusters > 1) {
        const double level = cands[idx].sim;
        while (idx < cands.size() && cands[idx].sim == level) {
            int ra = find(cands[idx].a);
            int rb = find(cands[idx].b);
            if (ra != rb) {
                // Union by lower representative keeps merges reproducible.
                parent[std::max(ra, rb)] = std::min(ra, rb);
                --clusters;
                if (dendrogram)
                    dendrogram->merges.push_back({cands[idx].a, cands[idx].b, level});
                if (target_communities > 0 && clusters == target_communities) {
                    Partition p;
                    p.assignment = snapshot();
                    p.score = partition_density(x, p.assignment);
                    p.method = "S";
                    return p;
                }
            }
            ++idx;
        }
        std::vector<int> assign = snapshot();
        double density = partition_density(x, assign);
        if (density > best_density) { // ties keep the earlier level
            best_density = density;
            best_assign = std::move(assign);
        }
    }

    Partition p;
    p.assignment = std::move(best_assign);
    p.score = best_density;
    p.method = "S";
    return p;
}

} // namespace hodgelink
