#pragma once

#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace hodgelink {

using SpMatI = Eigen::SparseMatrix<std::int64_t>;
using SpMatD = Eigen::SparseMatrix<double>;
using VecI   = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using MatI   = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace hodgelink
