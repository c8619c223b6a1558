#include "hodgelink/hodge.hpp"

#include <string>
#include <vector>

namespace hodgelink {

SpMatI boundary_1(const SimplicialComplex& x) {
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(2 * x.n1());
    for (int k = 0; k < x.n1(); ++k) {
        const Link& l = x.links()[k];
        trips.emplace_back(l.lo, k, -1);
        trips.emplace_back(l.hi, k, +1);
    }
    SpMatI b1(x.n0(), x.n1());
    b1.setFromTriplets(trips.begin(), trips.end());
    return b1;
}

SpMatI boundary_2(const SimplicialComplex& x) {
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    trips.reserve(3 * x.n2());
    for (int t = 0; t < x.n2(); ++t) {
        const Triangle& tri = x.triangles()[t];
        trips.emplace_back(x.link_index({tri.a, tri.b}), t, +1);
        trips.emplace_back(x.link_index({tri.a, tri.c}), t, -1);
        trips.emplace_back(x.link_index({tri.b, tri.c}), t, +1);
    }
    SpMatI b2(x.n1(), x.n2());
    b2.setFromTriplets(trips.begin(), trips.end());
    return b2;
}

SpMatI hodge_l1(const SimplicialComplex& x) {
    SpMatI b1 = boundary_1(x);
    SpMatI b2 = boundary_2(x);
    SpMatI l1 = SpMatI(b1.transpose()) * b1;
    if (x.n2() > 0)
        l1 = l1 + SpMatI(b2 * SpMatI(b2.transpose()));
    l1.prune(static_cast<std::int64_t>(0));
    l1.makeCompressed();
    return l1;
}

VecI total_degree_diagonal(const SimplicialComplex& x) {
    VecI d(x.n1());
    for (int k = 0; k < x.n1(); ++k) {
        const Link& l = x.links()[k];
        d[k] = x.node_degree(l.lo) + x.node_degree(l.hi) + 3 * x.link_degree(k);
        if (d[k] <= 0)
            throw ZeroDegree("link " + std::to_string(k) + " has zero total degree");
    }
    return d;
}

SpMatD normalized_l1(const SimplicialComplex& x) {
    SpMatI l1 = hodge_l1(x);
    VecI d = total_degree_diagonal(x);
    SpMatD out(x.n1(), x.n1());
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(l1.nonZeros());
    for (int col = 0; col < l1.outerSize(); ++col)
        for (SpMatI::InnerIterator it(l1, col); it; ++it)
            trips.emplace_back(it.row(), col,
                               static_cast<double>(it.value()) / static_cast<double>(d[col]));
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

Eigen::VectorXd project_propagate(const SimplicialComplex& x, const Eigen::VectorXd& flow,
                                  int steps) {
    if (flow.size() != x.n1())
        throw DimensionMismatch("flow has " + std::to_string(flow.size()) +
                                " entries, complex has " + std::to_string(x.n1()) + " links");
    if (steps < 0)
        throw DimensionMismatch("negative step count");
    SpMatD nl1 = normalized_l1(x);
    Eigen::VectorXd f = flow;
    for (int s = 0; s < steps; ++s)
        f = 0.5 * (f - nl1 * f);
    return f;
}

} // namespace hodgelink
