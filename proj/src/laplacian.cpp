#include "lapdyn/laplacian.hpp"

#include "lapdyn/errors.hpp"

#include <stdexcept>

namespace lapdyn {

std::string_view to_string(LaplacianKind k) {
  switch (k) {
    case LaplacianKind::Comb: return "comb";
    case LaplacianKind::RandomWalk: return "rw";
    case LaplacianKind::Generalized: return "generalized";
  }
  return "unknown";
}

LaplacianMatrix::LaplacianMatrix(LaplacianKind kind, Vector eplus, Vector e, Matrix stochastic,
                                 std::shared_ptr<const AdjacencyBundle> adjacency)
    : kind_(kind),
      eplus_(std::move(eplus)),
      e_(std::move(e)),
      s_(std::move(stochastic)),
      adjacency_(std::move(adjacency)) {
  const auto n = s_.rows();
  if (s_.cols() != n || eplus_.size() != n || e_.size() != n)
    throw std::invalid_argument("laplacian: dimension mismatch");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (e_(i) < 0.0 || eplus_(i) < 0.0) throw std::invalid_argument("laplacian: negative diagonal");
    if (eplus_(i) < e_(i)) throw ViolatesDominance(static_cast<Index>(i));
  }
  m_ = Matrix(eplus_.asDiagonal()) - e_.asDiagonal() * s_;
  strict_ = ((eplus_ - e_).array() > kStrictTolerance).any();
}

const Digraph& LaplacianMatrix::graph() const {
  if (!adjacency_) throw std::logic_error("laplacian has no underlying graph");
  return adjacency_->graph;
}

LaplacianMatrix comb_laplacian(std::shared_ptr<const AdjacencyBundle> a) {
  Vector d = a->D;
  Matrix s = a->S;
  return LaplacianMatrix(LaplacianKind::Comb, d, d, std::move(s), std::move(a));
}

LaplacianMatrix comb_laplacian(const AdjacencyBundle& a) {
  return comb_laplacian(std::make_shared<const AdjacencyBundle>(a));
}

LaplacianMatrix rw_laplacian(std::shared_ptr<const AdjacencyBundle> a) {
  Vector ones = Vector::Ones(a->S.rows());
  Matrix s = a->S;
  return LaplacianMatrix(LaplacianKind::RandomWalk, ones, ones, std::move(s), std::move(a));
}

LaplacianMatrix rw_laplacian(const AdjacencyBundle& a) {
  return rw_laplacian(std::make_shared<const AdjacencyBundle>(a));
}

LaplacianMatrix generalized_laplacian(std::shared_ptr<const AdjacencyBundle> a, const Vector& eplus,
                                      const Vector& e) {
  Matrix s = a->S;
  return LaplacianMatrix(LaplacianKind::Generalized, eplus, e, std::move(s), std::move(a));
}

LaplacianMatrix generalized_laplacian(const AdjacencyBundle& a, const Vector& eplus, const Vector& e) {
  return generalized_laplacian(std::make_shared<const AdjacencyBundle>(a), eplus, e);
}

LaplacianMatrix restricted_laplacian(const Matrix& substochastic, const Vector& eplus, const Vector& e) {
  const auto n = substochastic.rows();
  if (substochastic.cols() != n || e.size() != n) throw std::invalid_argument("laplacian: dimension mismatch");
  Matrix s = substochastic;
  Vector e_eff = e;
  for (Eigen::Index i = 0; i < n; ++i) {
    double mass = s.row(i).sum();
    if (mass > 0.0) {
      s.row(i) /= mass;
      e_eff(i) *= mass;
    } else {
      // No retained neighbours: any stochastic row will do since e_eff(i) = 0.
      s.row(i).setZero();
      s(i, i) = 1.0;
      e_eff(i) = 0.0;
    }
  }
  // Row mass can exceed 1 by roundoff; clamp so dominance is judged on the real data.
  for (Eigen::Index i = 0; i < n; ++i)
    if (e_eff(i) > eplus(i) && e_eff(i) - eplus(i) < kStrictTolerance) e_eff(i) = eplus(i);
  return LaplacianMatrix(LaplacianKind::Generalized, eplus, std::move(e_eff), std::move(s), nullptr);
}

BlockTriangularForm block_triangularize(const LaplacianMatrix& l, const Condensation& c) {
  if (c.component_of.size() != l.size()) throw std::invalid_argument("condensation does not match laplacian");
  BlockTriangularForm out;
  for (const VertexSet& scc : c.sccs) out.permutation.insert(out.permutation.end(), scc.begin(), scc.end());
  out.permuted = select(l.matrix(), out.permutation, out.permutation);

  for (const VertexSet& scc : c.sccs) {
    Vector eplus(scc.size()), e(scc.size());
    for (std::size_t a = 0; a < scc.size(); ++a) {
      eplus(a) = l.eplus()(scc[a]);
      e(a) = l.e()(scc[a]);
    }
    out.blocks.push_back({scc, restricted_laplacian(select(l.stochastic(), scc, scc), eplus, e)});
  }
  return out;
}

}  // namespace lapdyn
