#pragma once

#include "lapdyn/digraph.hpp"
#include "lapdyn/taxonomy.hpp"

#include <memory>

namespace lapdyn {

enum class LaplacianKind { Comb, RandomWalk, Generalized };
std::string_view to_string(LaplacianKind k);

/// M = diag(eplus) - diag(e) * S with eplus >= e >= 0.
///
/// comb: eplus = e = D.  rw: eplus = e = 1.  An actual Laplacian has
/// eplus == e (within 1e-12) and therefore zero row sums.
class LaplacianMatrix {
 public:
  LaplacianMatrix(LaplacianKind kind, Vector eplus, Vector e, Matrix stochastic,
                  std::shared_ptr<const AdjacencyBundle> adjacency);

  LaplacianKind kind() const noexcept { return kind_; }
  const Matrix& matrix() const noexcept { return m_; }
  const Vector& eplus() const noexcept { return eplus_; }
  const Vector& e() const noexcept { return e_; }
  /// The row-stochastic S the matrix was built from.
  const Matrix& stochastic() const noexcept { return s_; }
  Index size() const noexcept { return static_cast<Index>(m_.rows()); }

  bool is_actual() const noexcept { return !strict_; }
  bool is_strict() const noexcept { return strict_; }

  /// Null for matrices not built from a whole graph (e.g. diagonal blocks).
  const std::shared_ptr<const AdjacencyBundle>& adjacency() const noexcept { return adjacency_; }
  /// Throws std::logic_error if there is no underlying graph.
  const Digraph& graph() const;

 private:
  LaplacianKind kind_;
  Vector eplus_;
  Vector e_;
  Matrix s_;
  Matrix m_;
  bool strict_;
  std::shared_ptr<const AdjacencyBundle> adjacency_;
};

LaplacianMatrix comb_laplacian(std::shared_ptr<const AdjacencyBundle> a);
LaplacianMatrix comb_laplacian(const AdjacencyBundle& a);
LaplacianMatrix rw_laplacian(std::shared_ptr<const AdjacencyBundle> a);
LaplacianMatrix rw_laplacian(const AdjacencyBundle& a);

/// Throws ViolatesDominance when eplus_i < e_i, std::invalid_argument on
/// negative entries or size mismatch.
LaplacianMatrix generalized_laplacian(std::shared_ptr<const AdjacencyBundle> a, const Vector& eplus,
                                      const Vector& e);
LaplacianMatrix generalized_laplacian(const AdjacencyBundle& a, const Vector& eplus, const Vector& e);

/// Generalized Laplacian diag(eplus) - diag(e) * P for a row-substochastic P,
/// such as the restriction S_KK of S to a vertex subset K.
///
/// P is renormalised to a stochastic matrix and the lost row mass moved into
/// e (e_i -> e_i * rowsum_i), so the block is strict exactly when some row
/// leaks mass or eplus > e.
LaplacianMatrix restricted_laplacian(const Matrix& substochastic, const Vector& eplus, const Vector& e);

struct DiagonalBlock {
  VertexSet vertices;  // one SCC, ascending
  LaplacianMatrix block;
};

struct BlockTriangularForm {
  VertexSet permutation;  // permutation[p] = vertex placed at position p
  Matrix permuted;        // P M P^T, lower block triangular
  std::vector<DiagonalBlock> blocks;
};

BlockTriangularForm block_triangularize(const LaplacianMatrix& l, const Condensation& c);

/// Tolerance used for the eplus/e strictness test.
inline constexpr double kStrictTolerance = 1e-12;

}  // namespace lapdyn
