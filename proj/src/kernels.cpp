#include "lapdyn/kernels.hpp"

#include "lapdyn/errors.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lapdyn {

namespace {

void require_actual(const LaplacianMatrix& l, const ReachDecomposition& rd) {
  if (!l.is_actual()) throw std::invalid_argument("kernel bases need an actual Laplacian (eplus == e)");
  if (rd.condensation.component_of.size() != l.size())
    throw std::invalid_argument("reach decomposition does not match laplacian");
}

bool power_iteration(const Matrix& p, Vector& v) {
  const Eigen::Index b = p.rows();
  v = Vector::Constant(b, 1.0 / static_cast<double>(b));
  for (int it = 0; it < 100000; ++it) {
    Vector next = p.transpose() * v;
    next /= next.sum();
    double change = (next - v).lpNorm<1>();
    v = std::move(next);
    if (change < 1e-13) return true;
  }
  return false;
}

Vector bordered_solve(const Matrix& p) {
  const Eigen::Index b = p.rows();
  Matrix a = (Matrix::Identity(b, b) - p).transpose();
  a.row(b - 1).setOnes();
  Vector rhs = Vector::Zero(b);
  rhs(b - 1) = 1.0;
  return a.partialPivLu().solve(rhs);
}

bool valid_perron(const Matrix& p, const Vector& v) {
  if (!v.allFinite() || (v.array() <= 0.0).any()) return false;
  Vector residual = p.transpose() * v - v;
  return inf_norm(residual) < 1e-10 && std::abs(v.sum() - 1.0) < 1e-10;
}

}  // namespace

Index period(const Matrix& p) {
  const Eigen::Index b = p.rows();
  std::vector<long> level(b, -1);
  VertexSet queue{0};
  level[0] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Index u = queue[q];
    for (Eigen::Index w = 0; w < b; ++w)
      if (p(u, w) > 0.0 && level[w] < 0) {
        level[w] = level[u] + 1;
        queue.push_back(w);
      }
  }
  long g = 0;
  for (Eigen::Index u = 0; u < b; ++u)
    for (Eigen::Index w = 0; w < b; ++w)
      if (p(u, w) > 0.0 && level[u] >= 0 && level[w] >= 0) g = std::gcd(g, std::abs(level[u] + 1 - level[w]));
  return g == 0 ? 1 : static_cast<Index>(g);
}

Matrix right_kernel(const LaplacianMatrix& l, const ReachDecomposition& rd) {
  require_actual(l, rd);
  const Matrix& M = l.matrix();
  const Index n = l.size();
  const double tol = 1e-9 * std::max(1.0, inf_norm(M));

  Matrix out = Matrix::Zero(n, rd.count());
  for (Index m = 0; m < rd.count(); ++m) {
    const Reach& r = rd.reaches[m];
    for (Index v : r.exclusive) out(v, m) = 1.0;
    if (r.common.empty()) continue;

    Matrix lcc = select(M, r.common, r.common);
    Vector rhs = -select(M, r.common, r.exclusive).rowwise().sum();
    Eigen::PartialPivLU<Matrix> lu(lcc);
    Vector x = lu.solve(rhs);
    if (!x.allFinite() || inf_norm(Vector(lcc * x - rhs)) >= tol)
      throw SingularCommonBlock("common-part block of reach " + std::to_string(m + 1) + " is singular");
    for (std::size_t a = 0; a < r.common.size(); ++a) out(r.common[a], m) = x(a);
  }
  return out;
}

Matrix left_kernel(const LaplacianMatrix& l, const ReachDecomposition& rd) {
  require_actual(l, rd);
  const Index n = l.size();
  Matrix out = Matrix::Zero(rd.count(), n);

  for (Index m = 0; m < rd.count(); ++m) {
    const VertexSet& cabal = rd.reaches[m].cabal;
    for (Index v : cabal)
      if (!(l.e()(v) > 0.0)) throw std::invalid_argument("left kernel needs e_i > 0 on every cabal vertex");

    Matrix p = select(l.stochastic(), cabal, cabal);
    Vector v;
    if (cabal.size() == 1) {
      v = Vector::Ones(1);
    } else {
      bool ok = period(p) == 1 && power_iteration(p, v) && valid_perron(p, v);
      if (!ok) {
        v = bordered_solve(p);
        if (!valid_perron(p, v))
          throw PerronIterationDiverged("no left Perron vector for cabal of reach " + std::to_string(m + 1));
      }
    }

    Vector g(cabal.size());
    for (std::size_t a = 0; a < cabal.size(); ++a) g(a) = v(a) / l.e()(cabal[a]);
    g /= g.sum();
    for (std::size_t a = 0; a < cabal.size(); ++a) out(m, cabal[a]) = g(a);
  }
  return out;
}

KernelBasis kernel_basis(const LaplacianMatrix& l, const ReachDecomposition& rd) {
  return KernelBasis{right_kernel(l, rd), left_kernel(l, rd)};
}

KernelBasis kernel_basis(const LaplacianMatrix& l) { return kernel_basis(l, reach_decomposition(l.graph())); }

Matrix gamma_matrix(const KernelBasis& kb) { return kb.right * kb.left; }

}  // namespace lapdyn
