#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hodgelink/hodge.hpp"
#include "hodgelink/spectral.hpp"
#include "hodgelink/synth.hpp"

using namespace hodgelink;

namespace {
SimplicialComplex filled_k3() { return build_complex({{1, 2, 3}}, ClosurePolicy::complete); }
} // namespace

TEST_CASE("lifting identity") {
    SUBCASE("filled K3") { CHECK(verify_lifting_identity(filled_k3()) <= 1e-14); }
    SUBCASE("single edge") {
        CHECK(verify_lifting_identity(build_complex({{1, 2}}, ClosurePolicy::complete)) ==
              0.0);
    }
    SUBCASE("random sweep") {
        for (std::uint64_t seed = 1; seed <= 40; ++seed)
            CHECK(verify_lifting_identity(random_walk_complex(15, 0.3, 0.5, seed)) <= 1e-12);
    }
}

TEST_CASE("spectrum decomposition") {
    SUBCASE("filled K3 odd part is 2/7 thrice") {
        SpectrumReport rep = spectrum_decomposition(lift(filled_k3()));
        REQUIRE(rep.odd.size() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(rep.odd[i] == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
        CHECK(rep.even_contains_one);
        CHECK(rep.multiset_gap <= 1e-8);
    }
    SUBCASE("single edge spectra") {
        SpectrumReport rep =
            spectrum_decomposition(lift(build_complex({{1, 2}}, ClosurePolicy::complete)));
        REQUIRE(rep.full.size() == 2);
        CHECK(rep.full[0] == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(rep.full[1] == doctest::Approx(1.0).epsilon(1e-14));
        REQUIRE(rep.even.size() == 1);
        CHECK(rep.even[0] == doctest::Approx(1.0));
        REQUIRE(rep.odd.size() == 1);
        CHECK(rep.odd[0] == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("multiset match, even eigenvalue 1, lazy range on random complexes") {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            SpectrumReport rep =
                spectrum_decomposition(lift(random_walk_complex(14, 0.3, 0.5, seed)));
            CHECK(rep.multiset_gap <= 1e-8);
            CHECK(rep.even_contains_one);
            CHECK(rep.full.minCoeff() >= -1e-10);
            CHECK(rep.full.maxCoeff() <= 1.0 + 1e-10);
        }
    }
    SUBCASE("size gate") {
        CHECK_THROWS_AS(spectrum_decomposition(lift(filled_k3()), 2), SizeLimitExceeded);
    }
}

TEST_CASE("even eigenvector lifting") {
    SUBCASE("strength vector at eigenvalue 1") {
        LiftedLineGraph g = lift(filled_k3());
        // Column-stochastic convention: the strength vector is a right
        // eigenvector of P_I + P_II at eigenvalue 1.
        Eigen::VectorXd x = g.strength().head(3).cast<double>();
        CHECK(lift_even_eigenvector(g, x, 1.0) <= 1e-14);
    }
    SUBCASE("all even eigenpairs of random complexes lift") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            LiftedLineGraph g = lift(random_walk_complex(12, 0.3, 0.5, seed));
            Eigen::MatrixXd even = (g.block_i() + g.block_ii()).cast<double>();
            Eigen::VectorXd d = g.strength().head(g.n1).cast<double>();
            Eigen::VectorXd dsqrt = d.cwiseSqrt();
            Eigen::MatrixXd sym = dsqrt.cwiseInverse().asDiagonal() * even *
                                  dsqrt.cwiseInverse().asDiagonal();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
            for (int i = 0; i < solver.eigenvalues().size(); ++i) {
                Eigen::VectorXd v = dsqrt.asDiagonal() * solver.eigenvectors().col(i);
                CHECK(lift_even_eigenvector(g, v, solver.eigenvalues()[i]) <= 1e-10);
            }
        }
    }
    SUBCASE("rejects non-eigenpairs") {
        LiftedLineGraph g = lift(filled_k3());
        Eigen::VectorXd x(3);
        x << 1.0, 2.0, -1.0;
        CHECK_THROWS_AS(lift_even_eigenvector(g, x, 0.3), NotAnEigenpair);
    }
}

TEST_CASE("stationary projection") {
    SUBCASE("filled K3 is uniform") {
        StationaryCheck st = stationary_projection(lift(filled_k3()));
        for (int s = 0; s < 6; ++s)
            CHECK(st.pi[s] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
        CHECK(st.stationary_residual <= 1e-12);
        CHECK(st.projection_residual == 0.0);
    }
    SUBCASE("single edge") {
        StationaryCheck st =
            stationary_projection(lift(build_complex({{1, 2}}, ClosurePolicy::complete)));
        CHECK(st.pi[0] == doctest::Approx(0.5));
        CHECK(st.pi[1] == doctest::Approx(0.5));
    }
    SUBCASE("projection vanishes by block symmetry on random complexes") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            StationaryCheck st =
                stationary_projection(lift(random_walk_complex(13, 0.3, 0.5, seed)));
            CHECK(st.stationary_residual <= 1e-12);
            CHECK(st.projection_residual == 0.0);
        }
    }
}

TEST_CASE("integer rank") {
    MatI m(3, 3);
    m << 1, 2, 3, //
        2, 4, 6,  //
        1, 0, 1;
    CHECK(integer_rank(m) == 2);
    CHECK(integer_rank(MatI::Zero(4, 2)) == 0);
    CHECK(integer_rank(MatI::Identity(5, 5)) == 5);
}

TEST_CASE("Betti numbers") {
    SUBCASE("filled K3 kills its cycle") { CHECK(betti_1(filled_k3()) == 0); }
    SUBCASE("open triangle keeps one cycle") {
        CHECK(betti_1(build_complex({{1, 2}, {1, 3}, {2, 3}}, ClosurePolicy::complete)) == 1);
    }
    SUBCASE("tree has none") {
        CHECK(betti_1(build_complex({{1, 2}, {2, 3}, {3, 4}}, ClosurePolicy::complete)) == 0);
    }
    SUBCASE("kernel dimension of L1 matches the Betti number") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            SimplicialComplex x = random_walk_complex(14, 0.3, 0.5, seed);
            CHECK(kernel_dimension_l1(x) == betti_1(x));
        }
    }
    SUBCASE("graph rank identity: rank B1 = n0 - components") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            SimplicialComplex x = random_walk_complex(12, 0.3, 0.5, seed);
            // connected by construction
            CHECK(integer_rank(MatI(boundary_1(x))) == x.n0() - 1);
        }
    }
}
