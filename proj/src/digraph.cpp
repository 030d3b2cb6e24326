#include "lapdyn/digraph.hpp"

#include "lapdyn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace lapdyn {

namespace {

void validate_edges(Index n, std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.tail >= n || e.head >= n)
      throw ParseError(0, "vertex id out of range in edge " + std::to_string(e.tail + 1) + " " +
                              std::to_string(e.head + 1));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw ParseError(0, "edge weight must be finite and positive");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
  });
  auto dup = std::adjacent_find(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.tail == b.tail && a.head == b.head;
  });
  if (dup != edges.end())
    throw ParseError(0, "duplicate edge " + std::to_string(dup->tail + 1) + " " +
                            std::to_string(dup->head + 1));
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_unsigned(std::string_view tok, unsigned long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

bool parse_real(std::string_view tok, double& out) {
  // from_chars for double is not available on every toolchain we build with.
  std::string s(tok);
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return !s.empty() && end == s.c_str() + s.size();
}

}  // namespace

Digraph::Digraph(Index n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw ParseError(0, "vertex count must be positive");
  validate_edges(n_, edges_);
}

std::vector<VertexSet> Digraph::out_neighbors() const {
  std::vector<VertexSet> adj(n_);
  for (const Edge& e : edges_) adj[e.tail].push_back(e.head);
  return adj;
}

std::vector<VertexSet> Digraph::in_neighbors() const {
  std::vector<VertexSet> adj(n_);
  for (const Edge& e : edges_) adj[e.head].push_back(e.tail);
  return adj;
}

Digraph parse_digraph(std::string_view text) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool have_n = false;
  unsigned long long n = 0;
  std::vector<Edge> edges;
  std::map<std::pair<unsigned long long, unsigned long long>, std::size_t> first_seen;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    if (!have_n) {
      if (tok.size() != 1 || !parse_unsigned(tok[0], n) || n == 0)
        throw ParseError(lineno, "expected a positive vertex count");
      have_n = true;
      continue;
    }

    if (tok.size() != 2 && tok.size() != 3)
      throw ParseError(lineno, "expected `tail head [weight]`");
    unsigned long long tail = 0, head = 0;
    if (!parse_unsigned(tok[0], tail) || !parse_unsigned(tok[1], head))
      throw ParseError(lineno, "vertex ids must be positive integers");
    if (tail < 1 || tail > n || head < 1 || head > n)
      throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
    double w = 1.0;
    if (tok.size() == 3) {
      if (!parse_real(tok[2], w)) throw ParseError(lineno, "malformed weight");
      if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(lineno, "weight must be finite and positive");
    }
    auto [it, fresh] = first_seen.emplace(std::pair(tail, head), lineno);
    if (!fresh)
      throw ParseError(lineno, "duplicate edge (first defined on line " + std::to_string(it->second) + ")");
    edges.push_back({static_cast<Index>(tail - 1), static_cast<Index>(head - 1), w});
    if (eol == text.size()) break;
  }

  if (!have_n) throw ParseError(0, "missing vertex count");
  return Digraph(static_cast<Index>(n), std::move(edges));
}

Digraph read_digraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_digraph(ss.str());
}

Digraph reverse(const Digraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({e.head, e.tail, e.weight});
  return Digraph(g.size(), std::move(edges));
}

AdjacencyBundle build_adjacency(const Digraph& g) {
  const Index n = g.size();
  Matrix Q = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) Q(e.head, e.tail) = e.weight;

  VertexSet loops;
  for (Index i = 0; i < n; ++i) {
    if (Q.row(i).sum() == 0.0) {
      Q(i, i) = 1.0;
      loops.push_back(i);
    }
  }
  Vector D = Q.rowwise().sum();
  Matrix S = D.cwiseInverse().asDiagonal() * Q;
  return AdjacencyBundle{g, std::move(Q), std::move(D), std::move(S), std::move(loops)};
}

}  // namespace lapdyn
