#pragma once

#include "lapdyn/lapdyn.hpp"
#include "random_graphs.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <initializer_list>
#include <random>

namespace lapdyn::test {

/// The seven-vertex example graph used throughout (unit weights).
inline constexpr const char* kExampleGraph = "7\n1 2\n1 6\n6 7\n7 6\n3 4\n4 5\n5 3\n3 7\n";

inline Digraph example_graph() { return parse_digraph(kExampleGraph); }

/// 1-based ids -> 0-based VertexSet.
inline VertexSet ids(std::initializer_list<Index> one_based) {
  VertexSet out;
  for (Index v : one_based) out.push_back(v - 1);
  return out;
}

inline Digraph graph(Index n, std::initializer_list<std::pair<Index, Index>> one_based_edges) {
  std::vector<Edge> edges;
  for (auto [a, b] : one_based_edges) edges.push_back({a - 1, b - 1, 1.0});
  return Digraph(n, std::move(edges));
}

inline Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
  Matrix m(r.size(), r.begin()->size());
  Eigen::Index i = 0;
  for (auto row : r) {
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<double> v) {
  Vector out(v.size());
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace lapdyn::test
