#include "hodgelink/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace hodgelink {

std::vector<std::vector<int>> node_memberships(const SimplicialComplex& x,
                                               const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != x.n1())
        throw DimensionMismatch("assignment must cover all links");
    std::vector<std::vector<int>> out(x.n0());
    for (NodeId i = 0; i < x.n0(); ++i) {
        auto& m = out[i];
        for (int k : x.incident_links(i))
            m.push_back(assignment[k]);
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    return out;
}

std::vector<char> nontrivial_communities(const SimplicialComplex& x,
                                         const std::vector<int>& assignment) {
    int n_comm = 0;
    for (int c : assignment)
        n_comm = std::max(n_comm, c + 1);
    std::vector<std::set<NodeId>> nodes(n_comm);
    for (int k = 0; k < x.n1(); ++k) {
        nodes[assignment[k]].insert(x.links()[k].lo);
        nodes[assignment[k]].insert(x.links()[k].hi);
    }
    std::vector<char> out(n_comm, 0);
    for (int c = 0; c < n_comm; ++c)
        out[c] = nodes[c].size() >= 3 ? 1 : 0;
    return out;
}

namespace {

/// Memberships restricted to nontrivial communities.
std::vector<std::vector<int>> nontrivial_memberships(const SimplicialComplex& x,
                                                     const std::vector<int>& assignment) {
    std::vector<char> keep = nontrivial_communities(x, assignment);
    std::vector<std::vector<int>> m = node_memberships(x, assignment);
    for (auto& sets : m)
        std::erase_if(sets, [&](int c) { return !keep[c]; });
    return m;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

} // namespace

double enrichment(const SimplicialComplex& x, const std::vector<int>& assignment,
                  const NodeMetadata& meta, bool* defined, int* dropped) {
    std::vector<std::vector<int>> members = nontrivial_memberships(x, assignment);
    std::vector<NodeId> nodes;
    std::vector<const std::string*> labels;
    int missing = 0;
    for (NodeId i = 0; i < x.n0(); ++i) {
        auto it = meta.similarity_attr.find(x.original_id(i));
        if (it == meta.similarity_attr.end()) {
            ++missing;
            continue;
        }
        nodes.push_back(i);
        labels.push_back(&it->second);
    }
    if (dropped)
        *dropped = missing;

    double within_sum = 0, within_count = 0;
    double all_sum = 0, all_count = 0;
    for (std::size_t p = 0; p < nodes.size(); ++p)
        for (std::size_t q = p + 1; q < nodes.size(); ++q) {
            const double s = (*labels[p] == *labels[q]) ? 1.0 : 0.0;
            all_sum += s;
            all_count += 1;
            if (intersects(members[nodes[p]], members[nodes[q]])) {
                within_sum += s;
                within_count += 1;
            }
        }
    const bool ok = within_count > 0 && all_sum > 0;
    if (defined)
        *defined = ok;
    if (!ok)
        return 0.0;
    return (within_sum / within_count) / (all_sum / all_count);
}

double overlap_quality(const SimplicialComplex& x, const std::vector<int>& assignment,
                       const NodeMetadata& meta, int* dropped) {
    std::vector<std::vector<int>> members = nontrivial_memberships(x, assignment);
    std::vector<int> m_var;
    std::vector<double> y_raw;
    int missing = 0;
    for (NodeId i = 0; i < x.n0(); ++i) {
        auto it = meta.overlap_attr.find(x.original_id(i));
        if (it == meta.overlap_attr.end()) {
            ++missing;
            continue;
        }
        m_var.push_back(static_cast<int>(members[i].size()));
        y_raw.push_back(it->second);
    }
    if (dropped)
        *dropped = missing;
    if (m_var.empty())
        return 0.0;

    // Integer-valued metadata is used unbinned; otherwise quantile bins.
    bool integral = true;
    for (double v : y_raw)
        if (v != std::floor(v)) {
            integral = false;
            break;
        }
    std::vector<int> y_var(y_raw.size());
    if (integral) {
        for (std::size_t i = 0; i < y_raw.size(); ++i)
            y_var[i] = static_cast<int>(y_raw[i]);
    } else {
        std::vector<double> sorted = y_raw;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        const int bins = std::min<std::size_t>(8, sorted.size());
        std::vector<double> all = y_raw;
        std::sort(all.begin(), all.end());
        std::vector<double> edges;
        for (int b = 1; b < bins; ++b)
            edges.push_back(all[all.size() * b / bins]);
        for (std::size_t i = 0; i < y_raw.size(); ++i)
            y_var[i] = static_cast<int>(
                std::lower_bound(edges.begin(), edges.end(), y_raw[i]) - edges.begin());
    }

    const double total = static_cast<double>(m_var.size());
    std::map<int, int> m_counts, y_counts;
    std::map<std::pair<int, int>, int> joint;
    for (std::size_t i = 0; i < m_var.size(); ++i) {
        ++m_counts[m_var[i]];
        ++y_counts[y_var[i]];
        ++joint[{m_var[i], y_var[i]}];
    }
    if (m_counts.size() <= 1 || y_counts.size() <= 1)
        return 0.0; // degenerate marginal carries no information
    double mi = 0;
    for (const auto& [key, c] : joint) {
        const double pxy = c / total;
        const double px = m_counts[key.first] / total;
        const double py = y_counts[key.second] / total;
        mi += pxy * std::log2(pxy / (px * py));
    }
    return std::max(0.0, mi);
}

double community_coverage(const SimplicialComplex& x, const std::vector<int>& assignment) {
    if (x.n0() == 0)
        return 0.0;
    std::vector<std::vector<int>> members = nontrivial_memberships(x, assignment);
    int covered = 0;
    for (const auto& m : members)
        if (!m.empty())
            ++covered;
    return static_cast<double>(covered) / x.n0();
}

double overlap_coverage(const SimplicialComplex& x, const std::vector<int>& assignment) {
    if (x.n0() == 0)
        return 0.0;
    std::vector<std::vector<int>> members = nontrivial_memberships(x, assignment);
    double total = 0;
    for (const auto& m : members)
        total += static_cast<double>(m.size());
    return total / x.n0();
}

MetricsReport evaluate_partition(const SimplicialComplex& x, const Partition& p,
                                 const NodeMetadata& meta, const std::string& network,
                                 const std::string& method) {
    MetricsReport rep;
    rep.network = network;
    rep.method = method;
    rep.t = p.t;
    rep.score = p.score;
    rep.enrichment = enrichment(x, p.assignment, meta, &rep.enrichment_defined,
                                &rep.dropped_similarity);
    rep.overlap_quality = overlap_quality(x, p.assignment, meta, &rep.dropped_overlap);
    rep.community_coverage = community_coverage(x, p.assignment);
    rep.overlap_coverage = overlap_coverage(x, p.assignment);
    return rep;
}

std::vector<CompositeRow> composite(const std::vector<MetricsReport>& per_method) {
    if (per_method.size() < 2)
        throw ConfigError("composite needs at least two methods");
    auto norm = [](double v, double max) { return max > 0 ? v / max : 0.0; };
    double max_e = 0, max_q = 0, max_cc = 0, max_oc = 0;
    for (const auto& r : per_method) {
        max_e = std::max(max_e, r.enrichment_defined ? r.enrichment : 0.0);
        max_q = std::max(max_q, r.overlap_quality);
        max_cc = std::max(max_cc, r.community_coverage);
        max_oc = std::max(max_oc, r.overlap_coverage);
    }
    std::vector<CompositeRow> rows;
    rows.reserve(per_method.size());
    for (const auto& r : per_method) {
        CompositeRow row;
        row.method = r.method;
        row.enrichment = norm(r.enrichment_defined ? r.enrichment : 0.0, max_e);
        row.overlap_quality = norm(r.overlap_quality, max_q);
        row.community_coverage = norm(r.community_coverage, max_cc);
        row.overlap_coverage = norm(r.overlap_coverage, max_oc);
        row.composite = row.enrichment + row.overlap_quality + row.community_coverage +
                        row.overlap_coverage;
        row.had_undefined = !r.enrichment_defined;
        rows.push_back(row);
    }
    return rows;
}

} // namespace hodgelink
