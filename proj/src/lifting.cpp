#include "hodgelink/lifting.hpp"

#include <string>
#include <vector>

#include "hodgelink/hodge.hpp"
#include "hodgelink/rng.hpp"

namespace hodgelink {

namespace {

SpMatI positive_part(const SpMatI& m) {
    SpMatI out(m.rows(), m.cols());
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(m.nonZeros());
    for (int col = 0; col < m.outerSize(); ++col)
        for (SpMatI::InnerIterator it(m, col); it; ++it)
            if (it.value() > 0)
                trips.emplace_back(it.row(), col, it.value());
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

SpMatI negative_part(const SpMatI& m) {
    SpMatI out(m.rows(), m.cols());
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(m.nonZeros());
    for (int col = 0; col < m.outerSize(); ++col)
        for (SpMatI::InnerIterator it(m, col); it; ++it)
            if (it.value() < 0)
                trips.emplace_back(it.row(), col, -it.value());
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

/// [M, -M] (horizontal stack).
SpMatI stack_negated_right(const SpMatI& m) {
    SpMatI out(m.rows(), 2 * m.cols());
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(2 * m.nonZeros());
    for (int col = 0; col < m.outerSize(); ++col)
        for (SpMatI::InnerIterator it(m, col); it; ++it) {
            trips.emplace_back(it.row(), col, it.value());
            trips.emplace_back(it.row(), col + m.cols(), -it.value());
        }
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

/// [M; -M] (vertical stack).
SpMatI stack_negated_below(const SpMatI& m) {
    SpMatI out(2 * m.rows(), m.cols());
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(2 * m.nonZeros());
    for (int col = 0; col < m.outerSize(); ++col)
        for (SpMatI::InnerIterator it(m, col); it; ++it) {
            trips.emplace_back(it.row(), col, it.value());
            trips.emplace_back(it.row() + m.rows(), col, -it.value());
        }
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

} // namespace

SpMatI LiftedLineGraph::adjacency() const {
    SpMatI a = lower + upper;
    SpMatI diag(states(), states());
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(states());
    for (int s = 0; s < states(); ++s)
        trips.emplace_back(s, s, self_loop[s]);
    diag.setFromTriplets(trips.begin(), trips.end());
    a = a + diag;
    a.prune(static_cast<std::int64_t>(0));
    a.makeCompressed();
    return a;
}

VecI LiftedLineGraph::strength() const {
    VecI d = VecI::Zero(states());
    SpMatI a = adjacency();
    for (int col = 0; col < a.outerSize(); ++col)
        for (SpMatI::InnerIterator it(a, col); it; ++it)
            d[it.row()] += it.value();
    return d;
}

MatI LiftedLineGraph::block_i() const {
    MatI a = MatI(adjacency());
    return a.topLeftCorner(n1, n1);
}

MatI LiftedLineGraph::block_ii() const {
    MatI a = MatI(adjacency());
    return a.topRightCorner(n1, n1);
}

LiftedLineGraph lift(const SimplicialComplex& x) {
    SpMatI b1_hat = stack_negated_right(boundary_1(x)); // B1 V^T
    SpMatI b2_hat = stack_negated_below(boundary_2(x)); // V B2

    SpMatI b1_pos = positive_part(b1_hat);
    SpMatI b1_neg = negative_part(b1_hat);
    SpMatI b2_pos = positive_part(b2_hat);
    SpMatI b2_neg = negative_part(b2_hat);

    LiftedLineGraph g;
    g.n1 = x.n1();
    g.lower = SpMatI(b1_neg.transpose()) * b1_pos + SpMatI(b1_pos.transpose()) * b1_neg;
    g.lower.prune(static_cast<std::int64_t>(0));
    g.lower.makeCompressed();
    if (x.n2() > 0) {
        g.upper = b2_pos * SpMatI(b2_neg.transpose()) + b2_neg * SpMatI(b2_pos.transpose());
        g.upper.prune(static_cast<std::int64_t>(0));
    } else {
        g.upper = SpMatI(2 * x.n1(), 2 * x.n1());
    }
    g.upper.makeCompressed();

    VecI dtot = total_degree_diagonal(x);
    g.self_loop.resize(2 * x.n1());
    g.self_loop << dtot, dtot;
    return g;
}

SpMatD transition_matrix(const LiftedLineGraph& g) {
    SpMatI a = g.adjacency();
    VecI d = g.strength();
    for (int s = 0; s < g.states(); ++s)
        if (d[s] <= 0)
            throw ZeroRowSum("state " + std::to_string(s) + " has zero strength");
    SpMatD p(g.states(), g.states());
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(a.nonZeros());
    for (int col = 0; col < a.outerSize(); ++col)
        for (SpMatI::InnerIterator it(a, col); it; ++it)
            trips.emplace_back(it.row(), col,
                               static_cast<double>(it.value()) / static_cast<double>(d[col]));
    p.setFromTriplets(trips.begin(), trips.end());
    return p;
}

SpMatI supernode_graph(const LiftedLineGraph& g) {
    const int n1 = g.n1;
    SpMatI a = g.adjacency();
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(a.nonZeros() / 2);
    // Fold the top half of rows: A_I from columns < n1, A_II from the rest.
    for (int col = 0; col < a.outerSize(); ++col)
        for (SpMatI::InnerIterator it(a, col); it; ++it) {
            if (it.row() >= n1)
                continue;
            trips.emplace_back(it.row(), col % n1, it.value());
        }
    SpMatI s(n1, n1);
    s.setFromTriplets(trips.begin(), trips.end());
    s.makeCompressed();
    return s;
}

Eigen::VectorXd simulate_walk(const LiftedLineGraph& g, int start, int steps,
                              std::int64_t samples, std::uint64_t seed) {
    if (start < 0 || start >= g.states())
        throw DimensionMismatch("start state out of range");
    if (steps < 0 || samples < 1)
        throw DimensionMismatch("steps must be >= 0 and samples >= 1");

    // Per-state cumulative tables over non-self moves. The self move has
    // probability exactly 1/2; the rest is split between the lower and
    // upper rows proportionally to their weights.
    const int n = g.states();
    std::vector<std::vector<int>> targets(n);
    std::vector<std::vector<double>> cdf(n);
    SpMatI moves = g.lower + g.upper; // symmetric, so columns double as rows
    for (int s = 0; s < n; ++s) {
        double total = 0;
        for (SpMatI::InnerIterator it(moves, s); it; ++it) {
            if (it.value() <= 0)
                continue;
            total += static_cast<double>(it.value());
            targets[s].push_back(static_cast<int>(it.row()));
            cdf[s].push_back(total);
        }
        for (double& c : cdf[s])
            c /= total;
    }

    std::mt19937_64 gen(seed);
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(n);
    for (std::int64_t i = 0; i < samples; ++i) {
        int state = start;
        for (int t = 0; t < steps; ++t) {
            double u = rng::uniform01(gen);
            if (u < 0.5)
                continue; // lazy self-loop
            if (cdf[state].empty())
                continue;
            double v = rng::uniform01(gen);
            state = targets[state][rng::sample_cdf(cdf[state], v)];
        }
        counts[state] += 1.0;
    }
    return counts / static_cast<double>(samples);
}

} // namespace hodgelink
