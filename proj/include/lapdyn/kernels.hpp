#pragma once

#include "lapdyn/laplacian.hpp"
#include "lapdyn/taxonomy.hpp"

namespace lapdyn {

/// Right and left kernel bases of an actual Laplacian, one vector per reach.
///
/// Column m of `right` is gamma_m: 1 on the exclusive part H_m, strictly
/// between 0 and 1 on the common part C_m, 0 outside the reach; the columns
/// sum to the all-ones vector. Row m of `left` is gamma_bar_m: a probability
/// vector supported exactly on the cabal B_m. left * right = I_k.
struct KernelBasis {
  Matrix right;  // n x k, the matrix H0
  Matrix left;   // k x n, the matrix H0bar

  Index count() const noexcept { return static_cast<Index>(right.cols()); }
  Index size() const noexcept { return static_cast<Index>(right.rows()); }
  Vector gamma(Index m) const { return right.col(m); }
  Eigen::RowVectorXd gamma_bar(Index m) const { return left.row(m); }
};

/// Solves L_CC x_C = -L_CH 1_H for each reach. Throws SingularCommonBlock if
/// the common block cannot be solved to a residual below 1e-9 * max(1, ||L||).
Matrix right_kernel(const LaplacianMatrix& l, const ReachDecomposition& rd);

/// gamma_bar_m = v E^{-1} normalised, v the left Perron vector of S restricted
/// to the cabal. Aperiodic cabals use power iteration (tolerance 1e-13, at
/// most 100000 steps); periodic cabals, and any that fail to converge, use
/// the bordered system (I - S_BB)^T v = 0, sum(v) = 1. Throws
/// PerronIterationDiverged if neither route yields a valid vector.
Matrix left_kernel(const LaplacianMatrix& l, const ReachDecomposition& rd);

KernelBasis kernel_basis(const LaplacianMatrix& l, const ReachDecomposition& rd);

/// Convenience: decomposes l.graph() first.
KernelBasis kernel_basis(const LaplacianMatrix& l);

/// Gamma = sum_m gamma_m (x) gamma_bar_m = H0 * H0bar.
Matrix gamma_matrix(const KernelBasis& kb);

/// Period of the irreducible nonnegative matrix p (gcd of cycle lengths).
Index period(const Matrix& p);

/// Classification tolerance for kernel entries in {0}, (0,1), {1}.
inline constexpr double kKernelClassTolerance = 1e-9;

}  // namespace lapdyn
