#include "lapdyn/taxonomy.hpp"

#include "lapdyn/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace lapdyn {

namespace {

constexpr Index kUnvisited = std::numeric_limits<Index>::max();

// Iterative Tarjan. Returns an unordered list of SCCs.
std::vector<VertexSet> tarjan(const std::vector<VertexSet>& adj) {
  const Index n = adj.size();
  std::vector<Index> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  VertexSet stack;
  std::vector<VertexSet> out;
  Index counter = 0;

  struct Frame {
    Index v;
    Index next;
  };
  std::vector<Frame> call;

  for (Index root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        Index w = adj[f.v][f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Index v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexSet comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Index> Condensation::sources() const {
  std::vector<char> has_in(sccs.size(), 0);
  for (auto [a, b] : dag_edges) has_in[b] = 1;
  std::vector<Index> out;
  for (Index c = 0; c < sccs.size(); ++c)
    if (!has_in[c]) out.push_back(c);
  return out;
}

Condensation strongly_connected_components(const Digraph& g) {
  const Index n = g.size();
  auto comps = tarjan(g.out_neighbors());
  const Index m = comps.size();

  std::vector<Index> raw_of(n);
  for (Index c = 0; c < m; ++c)
    for (Index v : comps[c]) raw_of[v] = c;

  std::vector<std::vector<Index>> succ(m);
  std::vector<Index> indeg(m, 0);
  for (const Edge& e : g.edges()) {
    Index a = raw_of[e.tail], b = raw_of[e.head];
    if (a != b) succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Index b : s) ++indeg[b];
  }

  // Kahn's algorithm; ties go to the SCC holding the smallest vertex id.
  using Key = std::pair<Index, Index>;  // (smallest vertex, raw id)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (Index c = 0; c < m; ++c)
    if (indeg[c] == 0) ready.push({comps[c].front(), c});

  std::vector<Index> position(m);
  Condensation out;
  out.sccs.reserve(m);
  while (!ready.empty()) {
    Index c = ready.top().second;
    ready.pop();
    position[c] = out.sccs.size();
    out.sccs.push_back(comps[c]);
    for (Index b : succ[c])
      if (--indeg[b] == 0) ready.push({comps[b].front(), b});
  }

  for (Index a = 0; a < m; ++a)
    for (Index b : succ[a]) out.dag_edges.emplace_back(position[a], position[b]);
  std::sort(out.dag_edges.begin(), out.dag_edges.end());

  out.component_of.resize(n);
  for (Index v = 0; v < n; ++v) out.component_of[v] = position[raw_of[v]];
  return out;
}

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::Strong: return "strong";
    case Connectivity::Unilateral: return "unilateral";
    case Connectivity::Weak: return "weak";
    case Connectivity::Disconnected: return "disconnected";
  }
  return "unknown";
}

std::vector<VertexSet> weak_components(const Digraph& g) {
  const Index n = g.size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    Index a = find(e.tail), b = find(e.head);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> by_root(n);
  for (Index v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

Connectivity connectivity_class(const Digraph& g) {
  Condensation c = strongly_connected_components(g);
  if (c.size() == 1) return Connectivity::Strong;

  // Unilateral iff the condensation has a Hamiltonian path, which for a DAG
  // must be its (then unique) topological order.
  bool chain = true;
  for (Index p = 0; p + 1 < c.size() && chain; ++p)
    chain = std::binary_search(c.dag_edges.begin(), c.dag_edges.end(), std::pair(p, p + 1));
  if (chain) return Connectivity::Unilateral;

  return weak_components(g).size() == 1 ? Connectivity::Weak : Connectivity::Disconnected;
}

VertexSet reachable_from(const Digraph& g, const VertexSet& from) {
  auto adj = g.out_neighbors();
  std::vector<char> seen(g.size(), 0);
  VertexSet frontier;
  for (Index v : from)
    if (!seen[v]) {
      seen[v] = 1;
      frontier.push_back(v);
    }
  while (!frontier.empty()) {
    Index v = frontier.back();
    frontier.pop_back();
    for (Index w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push_back(w);
      }
  }
  VertexSet out;
  for (Index v = 0; v < g.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

VertexSet ReachDecomposition::cabal_union() const {
  VertexSet out;
  for (const Reach& r : reaches) out.insert(out.end(), r.cabal.begin(), r.cabal.end());
  std::sort(out.begin(), out.end());
  return out;
}

ReachDecomposition reach_decomposition(const Digraph& g) {
  auto weak = weak_components(g);
  if (weak.size() != 1) throw NotWeaklyConnected(std::move(weak));

  ReachDecomposition rd;
  rd.condensation = strongly_connected_components(g);
  const Index n = g.size();

  // Source SCCs come out of Kahn's order sorted by smallest vertex already,
  // but sort explicitly since that ordering is part of the contract.
  auto sources = rd.condensation.sources();
  std::sort(sources.begin(), sources.end(), [&](Index a, Index b) {
    return rd.condensation.sccs[a].front() < rd.condensation.sccs[b].front();
  });

  std::vector<Index> hits(n, 0);
  std::vector<VertexSet> reach_sets;
  for (Index s : sources) {
    reach_sets.push_back(reachable_from(g, rd.condensation.sccs[s]));
    for (Index v : reach_sets.back()) ++hits[v];
  }

  for (std::size_t m = 0; m < sources.size(); ++m) {
    Reach r;
    r.cabal = rd.condensation.sccs[sources[m]];
    r.reach = std::move(reach_sets[m]);
    for (Index v : r.reach) (hits[v] == 1 ? r.exclusive : r.common).push_back(v);
    rd.reaches.push_back(std::move(r));
  }
  return rd;
}

}  // namespace lapdyn
