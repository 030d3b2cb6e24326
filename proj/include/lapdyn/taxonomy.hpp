#pragma once

#include "lapdyn/digraph.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace lapdyn {

/// SCC partition of a digraph, with the SCCs listed in topological order.
///
/// For every condensation edge a -> b (some edge from SCC a into SCC b),
/// a < b. Among SCCs that are ready at the same time the one with the
/// smallest vertex id goes first. Vertices inside an SCC are ascending.
struct Condensation {
  std::vector<VertexSet> sccs;
  std::vector<std::pair<Index, Index>> dag_edges;  // (a, b) positions into sccs, sorted, unique
  std::vector<Index> component_of;                 // vertex -> position in sccs

  Index size() const noexcept { return sccs.size(); }
  /// Positions of SCCs with no incoming condensation edge, ascending.
  std::vector<Index> sources() const;
};

Condensation strongly_connected_components(const Digraph& g);

enum class Connectivity { Strong, Unilateral, Weak, Disconnected };
std::string_view to_string(Connectivity c);

/// Strongest class that holds: strong, then unilateral, weak, disconnected.
Connectivity connectivity_class(const Digraph& g);

/// Components of the underlying undirected graph, each ascending, ordered by smallest vertex.
std::vector<VertexSet> weak_components(const Digraph& g);

struct Reach {
  VertexSet reach;      // R_m: everything reachable from the cabal
  VertexSet cabal;      // B_m: the source SCC generating the reach
  VertexSet exclusive;  // H_m: not reachable from any other cabal
  VertexSet common;     // C_m = R_m \ H_m
};

/// Reaches ordered by the smallest vertex id of their cabal.
struct ReachDecomposition {
  Condensation condensation;
  std::vector<Reach> reaches;

  Index count() const noexcept { return reaches.size(); }
  /// Union of all cabals, ascending.
  VertexSet cabal_union() const;
};

/// Throws NotWeaklyConnected if g has more than one weak component.
ReachDecomposition reach_decomposition(const Digraph& g);

/// Vertices reachable from `from` (including it), ascending.
VertexSet reachable_from(const Digraph& g, const VertexSet& from);

}  // namespace lapdyn
