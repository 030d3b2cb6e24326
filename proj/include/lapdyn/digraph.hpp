#pragma once

#include "lapdyn/matrix.hpp"

#include <filesystem>
#include <string_view>
#include <vector>

namespace lapdyn {

/// Directed edge tail -> head ("head sees tail"). Indices are 0-based.
struct Edge {
  Index tail;
  Index head;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted digraph on vertices 0..n-1. Immutable once built.
///
/// Edges are kept sorted by (tail, head). Self-loops are ordinary edges and
/// count toward in-degree.
class Digraph {
 public:
  /// Throws ParseError (line 0) on out-of-range ids, non-positive or
  /// non-finite weights, or duplicate (tail, head) pairs.
  Digraph(Index n, std::vector<Edge> edges);

  Index size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Successors (heads of out-edges) per vertex, ascending.
  std::vector<VertexSet> out_neighbors() const;
  /// Predecessors (tails of in-edges) per vertex, ascending.
  std::vector<VertexSet> in_neighbors() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Index n_;
  std::vector<Edge> edges_;
};

/// Parses the edge-list format: first non-comment line holds n, then
/// `tail head [weight]` per line with 1-based ids; `#` comments to end of line.
Digraph parse_digraph(std::string_view text);
Digraph read_digraph(const std::filesystem::path& path);

/// Every edge (u, v, w) becomes (v, u, w).
Digraph reverse(const Digraph& g);

/// Q, D and S = D^{-1} Q for a digraph.
///
/// Q(i, j) is the weight of edge j -> i. A vertex with no incoming edge gets a
/// unit loop Q(i, i) = 1 so that D is invertible; those vertices are listed in
/// loop_added.
struct AdjacencyBundle {
  Digraph graph;
  Matrix Q;
  Vector D;
  Matrix S;
  VertexSet loop_added;
};

AdjacencyBundle build_adjacency(const Digraph& g);

}  // namespace lapdyn
