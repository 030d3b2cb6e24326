#pragma once

#include "lapdyn/laplacian.hpp"

#include <complex>
#include <vector>

namespace lapdyn {

using Complex = std::complex<double>;

/// All n eigenvalues of a real matrix, sorted by (real, imag). Complex
/// eigenvalues appear in exact conjugate pairs.
struct Spectrum {
  std::vector<Complex> eigenvalues;

  Index size() const noexcept { return eigenvalues.size(); }
};

/// Householder reduction to upper Hessenberg form followed by Francis
/// double-shift QR. No balancing.
///
/// Deflates a subdiagonal entry once it is below machine epsilon relative to
/// its diagonal neighbours or below 1e-14 * ||M||_inf. Throws NoConvergence
/// (carrying the eigenvalues found so far) after 100 * n QR sweeps.
Spectrum eigenvalues(const Matrix& m);

/// Upper Hessenberg matrix orthogonally similar to m.
Matrix hessenberg(const Matrix& m);

/// Number of eigenvalues with |lambda| < tol.
Index zero_multiplicity(const Spectrum& s, double tol = 1e-7);

struct GersgorinDisk {
  double center;  // e+_i
  double radius;  // e_i
};

struct GersgorinReport {
  std::vector<GersgorinDisk> disks;
  std::vector<Index> violations;  // indices into the spectrum lying outside every disk
  bool consistent = true;
};

/// Checks every eigenvalue lies in the union of the closed balls B_{e_i}(e+_i), within 1e-8.
GersgorinReport gersgorin_check(const LaplacianMatrix& l, const Spectrum& s);

/// rank(m) by column-pivoted Householder QR; diagonal entries of R at or
/// below 1e-9 * ||m||_inf count as zero. `scale` overrides ||m||_inf.
Index numerical_rank(const Matrix& m, double scale = -1.0);
Index numerical_rank(const Eigen::MatrixXcd& m, double scale);

/// n - rank(m - lambda I), with the rank tolerance scaled by ||m||_inf.
Index geometric_multiplicity(const Matrix& m, Complex lambda);

struct EigenvalueCluster {
  Complex value;  // cluster mean
  Index algebraic;
  Index geometric;
  bool defective() const noexcept { return geometric < algebraic; }
};

/// Groups eigenvalues closer than `tol` (single linkage, 1e-7 by default) and
/// compares each group's size with its geometric multiplicity.
std::vector<EigenvalueCluster> multiplicity_report(const Matrix& m, const Spectrum& s, double tol = 1e-7);

}  // namespace lapdyn
