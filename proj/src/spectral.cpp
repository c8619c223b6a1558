#include "hodgelink/spectral.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hodgelink/hodge.hpp"

namespace hodgelink {

double verify_lifting_identity(const SimplicialComplex& x) {
    const int n1 = x.n1();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n1, n1) - Eigen::MatrixXd(normalized_l1(x));
    LiftedLineGraph g = lift(x);
    Eigen::MatrixXd p = Eigen::MatrixXd(transition_matrix(g));

    // lhs = (I - L1n) V^T = [M, -M]; rhs = 2 V^T P = 2 (P_top - P_bottom).
    Eigen::MatrixXd lhs(n1, 2 * n1);
    lhs << m, -m;
    Eigen::MatrixXd rhs = 2.0 * (p.topRows(n1) - p.bottomRows(n1));
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

namespace {

Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues(); // ascending
}

/// Symmetric matrix similar to B D^{-1}: D^{-1/2} B D^{-1/2} for symmetric B.
Eigen::MatrixXd symmetrized_similar(const Eigen::MatrixXd& b, const Eigen::VectorXd& d) {
    Eigen::VectorXd inv_sqrt = d.cwiseSqrt().cwiseInverse();
    return inv_sqrt.asDiagonal() * b * inv_sqrt.asDiagonal();
}

} // namespace

SpectrumReport spectrum_decomposition(const LiftedLineGraph& g, int max_dense) {
    if (g.n1 > max_dense)
        throw SizeLimitExceeded("dense spectral work gated at n1 <= " +
                                std::to_string(max_dense));
    SpectrumReport rep;
    Eigen::MatrixXd a = MatI(g.adjacency()).cast<double>();
    Eigen::VectorXd d = g.strength().cast<double>();
    rep.full = sorted_eigenvalues(symmetrized_similar(a, d));

    const int n1 = g.n1;
    Eigen::MatrixXd a_i = g.block_i().cast<double>();
    Eigen::MatrixXd a_ii = g.block_ii().cast<double>();
    Eigen::VectorXd d_half = d.head(n1);
    rep.even = sorted_eigenvalues(symmetrized_similar(a_i + a_ii, d_half));
    rep.odd = sorted_eigenvalues(symmetrized_similar(a_i - a_ii, d_half));

    Eigen::VectorXd joined(2 * n1);
    joined << rep.even, rep.odd;
    std::sort(joined.begin(), joined.end());
    rep.multiset_gap = (joined - rep.full).cwiseAbs().maxCoeff();
    rep.even_contains_one = (rep.even.array() - 1.0).abs().minCoeff() <= 1e-8;

    StationaryCheck st = stationary_projection(g);
    rep.stationary = st.pi;
    rep.stationary_residual = st.stationary_residual;
    rep.projection_residual = st.projection_residual;
    return rep;
}

double lift_even_eigenvector(const LiftedLineGraph& g, const Eigen::VectorXd& x, double lambda) {
    const int n1 = g.n1;
    if (x.size() != n1)
        throw DimensionMismatch("eigenvector must have n1 entries");
    Eigen::MatrixXd even = (g.block_i() + g.block_ii()).cast<double>();
    Eigen::VectorXd d = g.strength().head(n1).cast<double>();
    Eigen::MatrixXd p_even = even * d.cwiseInverse().asDiagonal();
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    if ((p_even * x - lambda * x).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw NotAnEigenpair("(x, lambda) is not an eigenpair of P_I + P_II at 1e-10");

    Eigen::VectorXd lifted(2 * n1);
    lifted << x, x;
    Eigen::MatrixXd p = Eigen::MatrixXd(transition_matrix(g));
    return (p * lifted - lambda * lifted).cwiseAbs().maxCoeff();
}

StationaryCheck stationary_projection(const LiftedLineGraph& g) {
    StationaryCheck out;
    Eigen::VectorXd d = g.strength().cast<double>();
    out.pi = d / d.sum();
    SpMatD p = transition_matrix(g);
    out.stationary_residual = (p * out.pi - out.pi).cwiseAbs().maxCoeff();
    out.projection_residual =
        (out.pi.head(g.n1) - out.pi.tail(g.n1)).cwiseAbs().maxCoeff();
    return out;
}

int integer_rank(const MatI& m) {
    using Wide = __int128;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    if (rows == 0 || cols == 0)
        return 0;
    std::vector<std::vector<Wide>> a(rows, std::vector<Wide>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a[i][j] = m(i, j);

    auto checked_mul = [](Wide x, Wide y) {
        Wide r;
        if (__builtin_mul_overflow(x, y, &r))
            throw NumericError("integer rank: intermediate minor overflowed 128 bits");
        return r;
    };

    int rank = 0;
    Wide prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (checked_mul(a[i][j], a[rank][col]) -
                           checked_mul(a[i][col], a[rank][j])) /
                          prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

int betti_1(const SimplicialComplex& x) {
    MatI b1 = MatI(boundary_1(x));
    MatI b2 = MatI(boundary_2(x));
    return x.n1() - integer_rank(b1) - integer_rank(b2);
}

int kernel_dimension_l1(const SimplicialComplex& x, double tol) {
    Eigen::MatrixXd l1 = MatI(hodge_l1(x)).cast<double>();
    Eigen::VectorXd d = total_degree_diagonal(x).cast<double>();
    Eigen::VectorXd eigs = sorted_eigenvalues(symmetrized_similar(l1, d));
    int count = 0;
    for (int i = 0; i < eigs.size(); ++i)
        if (std::abs(eigs[i]) < tol)
            ++count;
    return count;
}

} // namespace hodgelink
