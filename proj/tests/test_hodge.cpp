#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgelink/hodge.hpp"
#include "hodgelink/synth.hpp"

using namespace hodgelink;

namespace {
SimplicialComplex filled_k3() { return build_complex({{1, 2, 3}}, ClosurePolicy::complete); }
} // namespace

TEST_CASE("boundary_1 on the filled K3") {
    MatI b1 = MatI(boundary_1(filled_k3()));
    MatI expected(3, 3);
    // link order {1,2},{1,3},{2,3}
    expected << -1, -1, 0, //
        1, 0, -1,          //
        0, 1, 1;
    CHECK(b1 == expected);
}

TEST_CASE("boundary_1 on a single edge") {
    MatI b1 = MatI(boundary_1(build_complex({{1, 2}}, ClosurePolicy::complete)));
    CHECK(b1(0, 0) == -1);
    CHECK(b1(1, 0) == 1);
}

TEST_CASE("boundary_2 on the filled K3") {
    MatI b2 = MatI(boundary_2(filled_k3()));
    CHECK(b2(0, 0) == 1);
    CHECK(b2(1, 0) == -1);
    CHECK(b2(2, 0) == 1);
}

TEST_CASE("boundary_2 with no triangles is n1 x 0") {
    SpMatI b2 = boundary_2(build_complex({{1, 2}, {2, 3}, {1, 3}}, ClosurePolicy::complete));
    CHECK(b2.rows() == 3);
    CHECK(b2.cols() == 0);
}

TEST_CASE("boundary algebra on random complexes") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        SimplicialComplex x = random_walk_complex(12, 0.3, 0.5, seed);
        SpMatI b1 = boundary_1(x);
        SpMatI b2 = boundary_2(x);
        // columns of B1 sum to zero
        for (int col = 0; col < b1.outerSize(); ++col) {
            std::int64_t sum = 0;
            for (SpMatI::InnerIterator it(b1, col); it; ++it)
                sum += it.value();
            CHECK(sum == 0);
        }
        // d o d = 0, exactly in integers
        if (x.n2() > 0) {
            MatI product = MatI(SpMatI(b1 * b2));
            CHECK(product.cwiseAbs().maxCoeff() == 0);
        }
    }
}

TEST_CASE("hodge_l1 closed forms") {
    SUBCASE("filled K3 gives 3I") {
        MatI l1 = MatI(hodge_l1(filled_k3()));
        CHECK(l1 == MatI(3 * MatI::Identity(3, 3)));
    }
    SUBCASE("single edge gives [2]") {
        MatI l1 = MatI(hodge_l1(build_complex({{1, 2}}, ClosurePolicy::complete)));
        CHECK(l1(0, 0) == 2);
    }
    SUBCASE("open triangle has no upper term") {
        SimplicialComplex x = build_complex({{1, 2}, {1, 3}, {2, 3}}, ClosurePolicy::complete);
        SpMatI b1 = boundary_1(x);
        MatI expected = MatI(SpMatI(SpMatI(b1.transpose()) * b1));
        CHECK(MatI(hodge_l1(x)) == expected);
    }
}

TEST_CASE("L1 is symmetric with non-negative spectrum") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimplicialComplex x = random_walk_complex(15, 0.3, 0.5, seed);
        Eigen::MatrixXd l1 = MatI(hodge_l1(x)).cast<double>();
        CHECK((l1 - l1.transpose()).cwiseAbs().maxCoeff() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l1, Eigen::EigenvaluesOnly);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("normalized_l1 closed forms") {
    SUBCASE("filled K3: (3/7) I") {
        Eigen::MatrixXd nl1 = Eigen::MatrixXd(normalized_l1(filled_k3()));
        CHECK((nl1 - (3.0 / 7.0) * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
              1e-15);
    }
    SUBCASE("single edge: [1]") {
        Eigen::MatrixXd nl1 =
            Eigen::MatrixXd(normalized_l1(build_complex({{1, 2}}, ClosurePolicy::complete)));
        CHECK(nl1(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("open triangle: B1^T B1 / 4") {
        SimplicialComplex x = build_complex({{1, 2}, {1, 3}, {2, 3}}, ClosurePolicy::complete);
        SpMatI b1 = boundary_1(x);
        Eigen::MatrixXd expected = MatI(SpMatI(SpMatI(b1.transpose()) * b1)).cast<double>() / 4.0;
        CHECK((Eigen::MatrixXd(normalized_l1(x)) - expected).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("project_propagate") {
    SimplicialComplex k3 = filled_k3();
    Eigen::VectorXd f(3);
    f << 1.0, -2.0, 0.5;
    SUBCASE("one step on K3 scales by 2/7") {
        CHECK((project_propagate(k3, f, 1) - (2.0 / 7.0) * f).cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("zero steps is the identity") {
        CHECK((project_propagate(k3, f, 0) - f).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("kernel flows halve each step") {
        SimplicialComplex open_tri =
            build_complex({{1, 2}, {1, 3}, {2, 3}}, ClosurePolicy::complete);
        Eigen::VectorXd cycle(3); // circulation around the open triangle
        cycle << 1.0, -1.0, 1.0;
        CHECK((project_propagate(open_tri, cycle, 3) - cycle / 8.0).cwiseAbs().maxCoeff() <=
              1e-15);
    }
    SUBCASE("semigroup property") {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SimplicialComplex x = random_walk_complex(12, 0.3, 0.5, seed);
            Eigen::VectorXd g = Eigen::VectorXd::LinSpaced(x.n1(), -1.0, 1.0);
            Eigen::VectorXd once = g;
            for (int s = 0; s < 4; ++s)
                once = project_propagate(x, once, 1);
            CHECK((project_propagate(x, g, 4) - once).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
    SUBCASE("dimension mismatch") {
        Eigen::VectorXd wrong(2);
        wrong << 1, 2;
        CHECK_THROWS_AS(project_propagate(k3, wrong, 1), DimensionMismatch);
    }
}
