#include "hodgelink/partition.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "hodgelink/rng.hpp"

namespace hodgelink {

namespace {

/// Adjacency unpacked for local moving: off-diagonal neighbor lists plus the
/// self-loop diagonal.
struct AdjacencyList {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> nbrs;
    std::vector<double> self;
    std::vector<double> strength; // k_i including the self-loop
    double two_m = 0;

    void finalize() {
        strength.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            strength[i] = self[i];
            for (const auto& [j, w] : nbrs[i])
                strength[i] += w;
        }
        two_m = std::accumulate(strength.begin(), strength.end(), 0.0);
    }
};

AdjacencyList from_sparse(const SpMatD& adj) {
    if (adj.rows() != adj.cols())
        throw DimensionMismatch("adjacency must be square");
    AdjacencyList g;
    g.n = static_cast<int>(adj.rows());
    g.nbrs.assign(g.n, {});
    g.self.assign(g.n, 0.0);
    for (int col = 0; col < adj.outerSize(); ++col)
        for (SpMatD::InnerIterator it(adj, col); it; ++it) {
            if (it.row() == col)
                g.self[col] = it.value();
            else if (it.value() != 0.0)
                g.nbrs[col].emplace_back(static_cast<int>(it.row()), it.value());
        }
    g.finalize();
    return g;
}

AdjacencyList from_dense(const Eigen::MatrixXd& adj) {
    if (adj.rows() != adj.cols())
        throw DimensionMismatch("adjacency must be square");
    AdjacencyList g;
    g.n = static_cast<int>(adj.rows());
    g.nbrs.assign(g.n, {});
    g.self.assign(g.n, 0.0);
    for (int j = 0; j < g.n; ++j) {
        g.self[j] = adj(j, j);
        for (int i = 0; i < g.n; ++i)
            if (i != j && adj(i, j) != 0.0)
                g.nbrs[j].emplace_back(i, adj(i, j));
    }
    g.finalize();
    return g;
}

double modularity_impl(const AdjacencyList& g, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != g.n)
        throw DimensionMismatch("assignment covers " + std::to_string(assignment.size()) +
                                " nodes, adjacency has " + std::to_string(g.n));
    if (g.two_m <= 0)
        return 0.0;
    int n_comm = 0;
    for (int c : assignment)
        n_comm = std::max(n_comm, c + 1);
    std::vector<double> internal(n_comm, 0.0), total(n_comm, 0.0);
    for (int i = 0; i < g.n; ++i) {
        const int c = assignment[i];
        total[c] += g.strength[i];
        internal[c] += g.self[i];
        for (const auto& [j, w] : g.nbrs[i])
            if (assignment[j] == c)
                internal[c] += w; // both orders of a pair are visited once each
    }
    double q = 0;
    for (int c = 0; c < n_comm; ++c)
        q += internal[c] / g.two_m - (total[c] / g.two_m) * (total[c] / g.two_m);
    return q;
}

std::vector<int> renumber_by_first_appearance(const std::vector<int>& raw) {
    std::vector<int> remap(raw.size(), -1);
    std::vector<int> out(raw.size());
    int next = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (remap[raw[i]] == -1)
            remap[raw[i]] = next++;
        out[i] = remap[raw[i]];
    }
    return out;
}

/// One Louvain level: local moving over a fixed order until a full sweep
/// makes no move. Returns the number of accepted moves. Community labels are
/// renumbered afterwards by first occurrence in the processing order.
int local_move(const AdjacencyList& g, const std::vector<int>& order, std::vector<int>& comm,
               const AdjacencyList* trace_graph, const std::vector<std::vector<int>>* down_map,
               std::vector<int>* trace_assignment, std::vector<double>* move_trace) {
    // Initial community ids follow the processing order, so that the id-based
    // tie rule is invariant under relabeling nodes along that order. This is
    // what makes the lifted and supernode routes take identical decisions.
    for (std::size_t r = 0; r < order.size(); ++r)
        comm[order[r]] = static_cast<int>(r);
    std::vector<double> sigma_tot(g.n, 0.0);
    for (int i = 0; i < g.n; ++i)
        sigma_tot[comm[i]] += g.strength[i];

    std::vector<double> w_to(g.n, 0.0);
    std::vector<int> touched;
    const double m = g.two_m / 2.0;
    int total_moves = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : order) {
            const int c0 = comm[v];
            touched.clear();
            w_to[c0] = 0.0;
            touched.push_back(c0);
            for (const auto& [j, w] : g.nbrs[v]) {
                const int c = comm[j];
                if (w_to[c] == 0.0 && c != c0 &&
                    std::find(touched.begin(), touched.end(), c) == touched.end())
                    touched.push_back(c);
                w_to[c] += w;
            }
            std::sort(touched.begin(), touched.end());

            sigma_tot[c0] -= g.strength[v];
            // gain(c) ~ w_{v,c}/m - k_v sigma_tot(c) / (2 m^2); scaled by m.
            const double scale = g.strength[v] / (2.0 * m);
            double best_gain = w_to[c0] - scale * sigma_tot[c0];
            int best_c = c0;
            for (int c : touched) {
                if (c == c0)
                    continue;
                const double gain = w_to[c] - scale * sigma_tot[c];
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            sigma_tot[best_c] += g.strength[v];
            for (int c : touched)
                w_to[c] = 0.0;
            if (best_c != c0) {
                comm[v] = best_c;
                moved = true;
                ++total_moves;
                if (move_trace && trace_graph) {
                    // Record the objective on the level-0 graph.
                    for (int agg = 0; agg < g.n; ++agg)
                        for (int orig : (*down_map)[agg])
                            (*trace_assignment)[orig] = comm[agg];
                    move_trace->push_back(
                        modularity_impl(*trace_graph, renumber_by_first_appearance(
                                                          *trace_assignment)));
                }
            }
        }
    }
    return total_moves;
}

Partition louvain_impl(const AdjacencyList& g0, const std::vector<int>& order,
                       std::vector<double>* move_trace) {
    if (static_cast<int>(order.size()) != g0.n)
        throw DimensionMismatch("order must be a permutation of all nodes");
    {
        std::vector<bool> seen(g0.n, false);
        for (int v : order) {
            if (v < 0 || v >= g0.n || seen[v])
                throw DimensionMismatch("order is not a permutation");
            seen[v] = true;
        }
    }

    Partition p;
    // down_map[agg] lists the level-0 nodes inside aggregated node agg.
    std::vector<std::vector<int>> down_map(g0.n);
    for (int i = 0; i < g0.n; ++i)
        down_map[i] = {i};
    std::vector<int> assignment(g0.n);
    std::iota(assignment.begin(), assignment.end(), 0);

    AdjacencyList g = g0;
    std::vector<int> level_order = order;
    std::vector<int> trace_scratch(g0.n);

    while (true) {
        p.level_sizes.push_back(g.n);
        std::vector<int> comm(g.n);
        std::iota(comm.begin(), comm.end(), 0);
        int moves = local_move(g, level_order, comm, move_trace ? &g0 : nullptr, &down_map,
                               &trace_scratch, move_trace);

        // Relabel communities by first occurrence in the processing order so
        // that the next level's identity order follows this level's order.
        std::vector<int> comm_rank(g.n, -1);
        int n_comm = 0;
        for (int v : level_order)
            if (comm_rank[comm[v]] == -1)
                comm_rank[comm[v]] = n_comm++;
        for (int v = 0; v < g.n; ++v)
            comm[v] = comm_rank[comm[v]];

        for (int i = 0; i < g0.n; ++i)
            assignment[i] = comm[assignment[i]];
        p.level_scores.push_back(modularity_impl(g0, renumber_by_first_appearance(assignment)));

        if (moves == 0 || n_comm == g.n)
            break;

        // Aggregate.
        AdjacencyList next;
        next.n = n_comm;
        next.nbrs.assign(n_comm, {});
        next.self.assign(n_comm, 0.0);
        std::vector<std::map<int, double>> agg(n_comm);
        for (int i = 0; i < g.n; ++i) {
            const int ci = comm[i];
            next.self[ci] += g.self[i];
            for (const auto& [j, w] : g.nbrs[i]) {
                const int cj = comm[j];
                if (ci == cj)
                    next.self[ci] += w; // ordered pairs both land on the diagonal
                else
                    agg[ci][cj] += w;
            }
        }
        for (int c = 0; c < n_comm; ++c)
            for (const auto& [d, w] : agg[c])
                next.nbrs[c].emplace_back(d, w);
        next.finalize();

        std::vector<std::vector<int>> next_down(n_comm);
        for (int i = 0; i < g.n; ++i) {
            auto& dst = next_down[comm[i]];
            dst.insert(dst.end(), down_map[i].begin(), down_map[i].end());
        }
        down_map = std::move(next_down);
        g = std::move(next);
        level_order.resize(g.n);
        std::iota(level_order.begin(), level_order.end(), 0);
    }

    p.assignment = renumber_by_first_appearance(assignment);
    p.score = modularity_impl(g0, p.assignment);
    return p;
}

Partition merge_impl(const AdjacencyList& g, const Partition& p, int target) {
    if (target < 1)
        throw ConfigError("community target must be positive");
    Partition out = p;
    out.assignment = renumber_by_first_appearance(out.assignment);
    int n_comm = out.n_communities();
    const double m2 = g.two_m;
    while (n_comm > target) {
        std::vector<double> sigma_tot(n_comm, 0.0);
        std::vector<std::map<int, double>> between(n_comm);
        for (int i = 0; i < g.n; ++i) {
            const int ci = out.assignment[i];
            sigma_tot[ci] += g.strength[i];
            for (const auto& [j, w] : g.nbrs[i]) {
                const int cj = out.assignment[j];
                if (ci < cj)
                    between[ci][cj] += w; // one direction only
            }
        }
        double best_dq = -std::numeric_limits<double>::infinity();
        int best_a = 0, best_b = 1;
        for (int a = 0; a < n_comm; ++a)
            for (int b = a + 1; b < n_comm; ++b) {
                auto it = between[a].find(b);
                const double w_ab = (it == between[a].end()) ? 0.0 : it->second;
                const double dq = 2.0 * (w_ab - sigma_tot[a] * sigma_tot[b] / m2) / m2;
                if (dq > best_dq) {
                    best_dq = dq;
                    best_a = a;
                    best_b = b;
                }
            }
        for (int& c : out.assignment)
            if (c == best_b)
                c = best_a;
        out.assignment = renumber_by_first_appearance(out.assignment);
        --n_comm;
    }
    out.score = modularity_impl(g, out.assignment);
    return out;
}

} // namespace

int Partition::n_communities() const {
    int n = 0;
    for (int c : assignment)
        n = std::max(n, c + 1);
    return n;
}

double modularity(const SpMatD& adj, const std::vector<int>& assignment) {
    return modularity_impl(from_sparse(adj), assignment);
}

double modularity(const Eigen::MatrixXd& adj, const std::vector<int>& assignment) {
    return modularity_impl(from_dense(adj), assignment);
}

Eigen::MatrixXd stability_matrix(const Eigen::MatrixXd& adj, int t, int max_dense) {
    if (t < 1)
        throw ConfigError("stability needs t >= 1");
    if (adj.rows() != adj.cols())
        throw DimensionMismatch("adjacency must be square");
    const int n = static_cast<int>(adj.rows());
    if (n > max_dense)
        throw SizeLimitExceeded("stability matrix gated at " + std::to_string(max_dense) +
                                " rows; pass a larger limit to override");
    // Connectivity check on the off-diagonal pattern.
    {
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int visited = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (v != u && adj(u, v) != 0.0 && !seen[v]) {
                    seen[v] = true;
                    ++visited;
                    q.push(v);
                }
        }
        if (visited < n)
            throw NotConnected("stability requires a connected adjacency");
    }
    if (t == 1)
        return adj;
    Eigen::VectorXd k = adj.rowwise().sum();
    Eigen::MatrixXd x = adj;
    for (int step = 1; step < t; ++step)
        x = adj * (x.array().colwise() / k.array()).matrix();
    x = 0.5 * (x + x.transpose()).eval();
    return x;
}

Partition louvain(const SpMatD& adj, const std::vector<int>& order,
                  std::vector<double>* move_trace) {
    return louvain_impl(from_sparse(adj), order, move_trace);
}

Partition louvain(const Eigen::MatrixXd& adj, const std::vector<int>& order,
                  std::vector<double>* move_trace) {
    return louvain_impl(from_dense(adj), order, move_trace);
}

ConditionStar check_condition_star(const LiftedLineGraph& g) {
    ConditionStar cs;
    VecI k = g.strength();
    std::int64_t two_m = k.sum();
    for (int s = 0; s < g.states(); ++s)
        if (k[s] * k[s] > two_m)
            cs.violating_states.push_back(s);
    cs.holds = cs.violating_states.empty();
    return cs;
}

std::vector<int> pairing_order(int n1, std::uint64_t seed, bool shuffle) {
    std::vector<int> half(n1);
    std::iota(half.begin(), half.end(), 0);
    if (shuffle) {
        std::mt19937_64 gen(seed);
        rng::shuffle(half, gen);
    }
    std::vector<int> order;
    order.reserve(2 * n1);
    for (int v : half)
        order.push_back(v);
    for (int v : half)
        order.push_back(v + n1);
    return order;
}

Partition partition_lifted(const LiftedLineGraph& g, int t, std::uint64_t seed, bool shuffle,
                           int max_dense) {
    ConditionStar cs = check_condition_star(g);
    if (!cs.holds)
        std::cerr << "[hodgelink] warning: degree condition violated at "
                  << cs.violating_states.size()
                  << " lifted states; orientation pairing is not guaranteed\n";
    std::vector<int> order = pairing_order(g.n1, seed, shuffle);
    Partition p;
    if (t == 1) {
        SpMatD adj = g.adjacency().cast<double>();
        p = louvain(adj, order);
    } else {
        Eigen::MatrixXd adj = MatI(g.adjacency()).cast<double>();
        p = louvain(stability_matrix(adj, t, max_dense), order);
    }
    p.t = t;
    p.seed = seed;
    p.method = "hat_A_lifted";
    p.condition_star = cs.holds ? 1 : 0;
    return p;
}

Partition project_to_links(const Partition& lifted, int n1, int* mismatches) {
    if (static_cast<int>(lifted.assignment.size()) != 2 * n1)
        throw DimensionMismatch("lifted partition does not cover 2*n1 states");
    Partition out = lifted;
    out.assignment.resize(n1);
    int bad = 0;
    for (int k = 0; k < n1; ++k) {
        const int ce = lifted.assignment[k];
        const int cr = lifted.assignment[k + n1];
        if (ce != cr)
            ++bad;
        out.assignment[k] = std::min(ce, cr);
    }
    if (bad > 0)
        std::cerr << "[hodgelink] warning: " << bad
                  << " links had disagreeing orientation communities; merged to the lower id\n";
    if (mismatches)
        *mismatches = bad;
    out.assignment = renumber_by_first_appearance(out.assignment);
    out.method = "hat_A";
    return out;
}

Partition partition_supernode(const LiftedLineGraph& g, int t, std::uint64_t seed, bool shuffle,
                              int max_dense) {
    ConditionStar cs = check_condition_star(g);
    std::vector<int> order(g.n1);
    std::iota(order.begin(), order.end(), 0);
    if (shuffle) {
        std::mt19937_64 gen(seed);
        rng::shuffle(order, gen);
    }
    Partition p;
    if (t == 1) {
        SpMatD adj = supernode_graph(g).cast<double>();
        p = louvain(adj, order);
    } else {
        Eigen::MatrixXd adj = MatI(supernode_graph(g)).cast<double>();
        p = louvain(stability_matrix(adj, t, max_dense), order);
    }
    p.t = t;
    p.seed = seed;
    p.method = "hat_A";
    p.condition_star = cs.holds ? 1 : 0;
    return p;
}

Partition merge_to_count(const SpMatD& adj, const Partition& p, int target) {
    return merge_impl(from_sparse(adj), p, target);
}

Partition merge_to_count(const Eigen::MatrixXd& adj, const Partition& p, int target) {
    return merge_impl(from_dense(adj), p, target);
}

} // namespace hodgelink
