#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hodgelink/hodge.hpp"
#include "hodgelink/lifting.hpp"
#include "hodgelink/synth.hpp"

using namespace hodgelink;

namespace {

SimplicialComplex filled_k3() { return build_complex({{1, 2, 3}}, ClosurePolicy::complete); }

/// Combinatorial construction of the lifted adjacency, independent of the
/// matrix-product route in the library: lower adjacency from head-to-tail
/// coincidences, upper adjacency from anti-aligned boundary signs.
MatI direct_lifted_adjacency(const SimplicialComplex& x) {
    const int n1 = x.n1();
    MatI a = MatI::Zero(2 * n1, 2 * n1);
    auto tail = [&](int s) { return s < n1 ? x.links()[s].lo : x.links()[s - n1].hi; };
    auto head = [&](int s) { return s < n1 ? x.links()[s].hi : x.links()[s - n1].lo; };
    for (int s = 0; s < 2 * n1; ++s)
        for (int r = 0; r < 2 * n1; ++r) {
            if (s == r)
                continue;
            if (tail(s) == head(r))
                a(s, r) += 1;
            if (head(s) == tail(r))
                a(s, r) += 1;
        }
    for (const Triangle& t : x.triangles()) {
        int links[3] = {x.link_index({t.a, t.b}), x.link_index({t.a, t.c}),
                        x.link_index({t.b, t.c})};
        int signs[3] = {+1, -1, +1};
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int op = 0; op < 2; ++op)
                    for (int oq = 0; oq < 2; ++oq) {
                        int sp = links[p] + op * n1;
                        int sq = links[q] + oq * n1;
                        if (sp == sq)
                            continue;
                        int sigp = signs[p] * (op == 0 ? 1 : -1);
                        int sigq = signs[q] * (oq == 0 ? 1 : -1);
                        if (sigp != sigq)
                            a(sp, sq) += 1;
                    }
    }
    VecI dtot = total_degree_diagonal(x);
    for (int s = 0; s < 2 * n1; ++s)
        a(s, s) += dtot[s % n1];
    return a;
}

} // namespace

TEST_CASE("filled K3 lifted graph") {
    LiftedLineGraph g = lift(filled_k3());
    CHECK(g.states() == 6);
    MatI a = MatI(g.adjacency());
    for (int s = 0; s < 6; ++s) {
        CHECK(g.self_loop[s] == 7);
        CHECK(a(s, g.reverse(s)) == 3); // 2 lower + 1 upper
        std::int64_t row = 0;
        for (int r = 0; r < 6; ++r)
            row += a(s, r);
        CHECK(row == 14);
    }
}

TEST_CASE("single edge lifted graph") {
    LiftedLineGraph g = lift(build_complex({{1, 2}}, ClosurePolicy::complete));
    MatI lower = MatI(g.lower);
    CHECK(lower(0, 1) == 2);
    CHECK(lower(1, 0) == 2);
    CHECK(lower(0, 0) == 0);
    CHECK(MatI(g.upper).cwiseAbs().maxCoeff() == 0);
    CHECK(g.self_loop[0] == 2);
    CHECK(g.self_loop[1] == 2);
}

TEST_CASE("egoview of the {2,3} state in the five-node fixture") {
    SimplicialComplex x = build_complex({{1, 2, 3}, {2, 4}, {3, 5}}, ClosurePolicy::complete);
    LiftedLineGraph g = lift(x);
    const int s23 = x.find_link(x.dense_id(2), x.dense_id(3));
    REQUIRE(s23 >= 0);
    MatI lower = MatI(g.lower);
    MatI upper = MatI(g.upper);
    // Upper adjacency reaches exactly one reference-oriented state: {1,3}.
    std::vector<int> upper_ref;
    for (int r = 0; r < x.n1(); ++r)
        if (upper(s23, r) > 0)
            upper_ref.push_back(r);
    REQUIRE(upper_ref.size() == 1);
    CHECK(upper_ref[0] == x.find_link(x.dense_id(1), x.dense_id(3)));
    // Lower adjacency reaches four neighbor links (over both orientations).
    std::set<int> lower_links;
    for (int r = 0; r < 2 * x.n1(); ++r)
        if (lower(s23, r) > 0 && (r % x.n1()) != s23)
            lower_links.insert(r % x.n1());
    CHECK(lower_links.size() == 4);
}

TEST_CASE("matrix-product route matches the combinatorial construction") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        SimplicialComplex x = random_walk_complex(12, 0.3, 0.6, seed);
        LiftedLineGraph g = lift(x);
        CHECK(MatI(g.adjacency()) == direct_lifted_adjacency(x));
    }
}

TEST_CASE("block symmetry and row sums on random complexes") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimplicialComplex x = random_walk_complex(13, 0.3, 0.5, seed);
        LiftedLineGraph g = lift(x);
        MatI a = MatI(g.adjacency());
        const int n = g.states();
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r)
                CHECK(a(s, r) == a(g.reverse(s), g.reverse(r)));
        VecI dtot = total_degree_diagonal(x);
        VecI strength = g.strength();
        for (int s = 0; s < n; ++s)
            CHECK(strength[s] == 2 * dtot[s % g.n1]);
    }
}

TEST_CASE("transition matrix") {
    SUBCASE("columns are stochastic and the diagonal is 1/2") {
        SimplicialComplex x = random_walk_complex(12, 0.3, 0.5, 3);
        SpMatD p = transition_matrix(lift(x));
        Eigen::MatrixXd dense = Eigen::MatrixXd(p);
        for (int col = 0; col < dense.cols(); ++col) {
            CHECK(dense.col(col).sum() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(dense(col, col) == 0.5);
        }
    }
    SUBCASE("filled K3 cross-orientation entry is 3/14") {
        SpMatD p = transition_matrix(lift(filled_k3()));
        CHECK(Eigen::MatrixXd(p)(3, 0) == doctest::Approx(3.0 / 14.0).epsilon(1e-15));
    }
    SUBCASE("single edge is the doubly lazy 2-state chain") {
        SpMatD p = transition_matrix(lift(build_complex({{1, 2}}, ClosurePolicy::complete)));
        Eigen::MatrixXd dense = Eigen::MatrixXd(p);
        CHECK(dense(0, 0) == 0.5);
        CHECK(dense(1, 0) == 0.5);
        CHECK(dense(0, 1) == 0.5);
        CHECK(dense(1, 1) == 0.5);
    }
}

TEST_CASE("supernode graph") {
    SUBCASE("single edge folds to [4]") {
        MatI s = MatI(supernode_graph(lift(build_complex({{1, 2}}, ClosurePolicy::complete))));
        CHECK(s(0, 0) == 4); // 2 self + 2 cross
    }
    SUBCASE("filled K3 folds to diagonal 10, off-diagonal 2") {
        MatI s = MatI(supernode_graph(lift(filled_k3())));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                CHECK(s(a, b) == (a == b ? 10 : 2));
    }
    SUBCASE("star K1,3: shared node gives weight 1 in A_I + A_II") {
        SimplicialComplex x =
            build_complex({{0, 1}, {0, 2}, {0, 3}}, ClosurePolicy::complete);
        MatI s = MatI(supernode_graph(lift(x)));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b)
                    CHECK(s(a, b) == 1);
        // Row sums still fold to 2 Dtot.
        VecI dtot = total_degree_diagonal(x);
        for (int a = 0; a < 3; ++a)
            CHECK(s.row(a).sum() == 2 * dtot[a]);
    }
    SUBCASE("row sums equal 2 Dtot on random complexes") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            SimplicialComplex x = random_walk_complex(12, 0.3, 0.5, seed);
            MatI s = MatI(supernode_graph(lift(x)));
            CHECK(s == MatI(s.transpose()));
            VecI dtot = total_degree_diagonal(x);
            for (int a = 0; a < x.n1(); ++a)
                CHECK(s.row(a).sum() == 2 * dtot[a]);
        }
    }
}

TEST_CASE("supernode graph ignores reference-orientation flips") {
    // Flip the orientation of each link in turn by negating its column of B1
    // and its row of B2, rebuild the lifted adjacency from the sign-split
    // formulas, and fold. The folded graph must not change.
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SimplicialComplex x = random_walk_complex(10, 0.35, 0.6, seed);
        LiftedLineGraph g = lift(x);
        MatI folded = MatI(supernode_graph(g));
        const int n1 = x.n1();
        Eigen::MatrixXd b1 = MatI(boundary_1(x)).cast<double>();
        Eigen::MatrixXd b2 = MatI(boundary_2(x)).cast<double>();
        for (int flip = 0; flip < n1; ++flip) {
            Eigen::MatrixXd fb1 = b1;
            fb1.col(flip) *= -1;
            Eigen::MatrixXd fb2 = b2;
            if (b2.cols() > 0)
                fb2.row(flip) *= -1;
            Eigen::MatrixXd b1h(b1.rows(), 2 * n1);
            b1h << fb1, -fb1;
            Eigen::MatrixXd b2h(2 * n1, b2.cols());
            b2h << fb2, -fb2;
            auto pos = [](const Eigen::MatrixXd& m) {
                return m.cwiseMax(0.0).eval();
            };
            auto neg = [](const Eigen::MatrixXd& m) {
                return (-m).cwiseMax(0.0).eval();
            };
            Eigen::MatrixXd lower =
                neg(b1h).transpose() * pos(b1h) + pos(b1h).transpose() * neg(b1h);
            Eigen::MatrixXd upper = Eigen::MatrixXd::Zero(2 * n1, 2 * n1);
            if (b2.cols() > 0)
                upper = pos(b2h) * neg(b2h).transpose() + neg(b2h) * pos(b2h).transpose();
            Eigen::MatrixXd a = lower + upper;
            VecI dtot = total_degree_diagonal(x);
            for (int s = 0; s < 2 * n1; ++s)
                a(s, s) += static_cast<double>(dtot[s % n1]);
            Eigen::MatrixXd fold =
                a.topLeftCorner(n1, n1) + a.topRightCorner(n1, n1);
            CHECK((fold - folded.cast<double>()).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("simulate_walk") {
    SUBCASE("zero steps is a point mass") {
        LiftedLineGraph g = lift(filled_k3());
        Eigen::VectorXd dist = simulate_walk(g, 2, 0, 1000, 9);
        CHECK(dist[2] == 1.0);
        CHECK(dist.sum() == doctest::Approx(1.0));
    }
    SUBCASE("single edge, one step, matches the transition matrix") {
        LiftedLineGraph g = lift(build_complex({{1, 2}}, ClosurePolicy::complete));
        const std::int64_t samples = 40000;
        Eigen::VectorXd dist = simulate_walk(g, 0, 1, samples, 11);
        const double sigma = std::sqrt(0.25 / samples);
        CHECK(std::abs(dist[0] - 0.5) <= 3 * sigma);
        CHECK(std::abs(dist[1] - 0.5) <= 3 * sigma);
    }
    SUBCASE("filled K3 mixes to the uniform distribution") {
        LiftedLineGraph g = lift(filled_k3());
        const std::int64_t samples = 60000;
        Eigen::VectorXd dist = simulate_walk(g, 0, 40, samples, 13);
        const double p = 1.0 / 6.0;
        const double sigma = std::sqrt(p * (1 - p) / samples);
        for (int s = 0; s < 6; ++s)
            CHECK(std::abs(dist[s] - p) <= 4 * sigma);
    }
    SUBCASE("seeded runs repeat exactly") {
        LiftedLineGraph g = lift(filled_k3());
        Eigen::VectorXd a = simulate_walk(g, 1, 5, 5000, 17);
        Eigen::VectorXd b = simulate_walk(g, 1, 5, 5000, 17);
        CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    }
}
