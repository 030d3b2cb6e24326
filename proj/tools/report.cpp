#include "report.hpp"

#include <cstdio>

namespace lapdyn::cli {

json vertices_json(const VertexSet& s) {
  json out = json::array();
  for (Index v : s) out.push_back(v + 1);
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json spectrum_json(const Spectrum& s) {
  json out = json::array();
  for (Complex z : s.eigenvalues) out.push_back({z.real(), z.imag()});
  return out;
}

std::string vertices_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::string complex_text(Complex z) {
  char buf[80];
  if (z.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.10g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.10g %c %.10gi", z.real(), z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
  return buf;
}

Analysis analyze(std::shared_ptr<const AdjacencyBundle> a, LaplacianKind kind) {
  const Digraph& g = a->graph;
  Connectivity conn = connectivity_class(g);
  ReachDecomposition rd = reach_decomposition(g);
  LaplacianMatrix l = kind == LaplacianKind::Comb ? comb_laplacian(a) : rw_laplacian(a);
  KernelBasis kb = kernel_basis(l, rd);
  Matrix gamma = gamma_matrix(kb);
  Spectrum s = eigenvalues(l.matrix());
  GersgorinReport gr = gersgorin_check(l, s);
  std::vector<EigenvalueCluster> clusters = multiplicity_report(l.matrix(), s);

  std::vector<std::string> warnings;
  for (Index v : a->loop_added)
    warnings.push_back("vertex " + std::to_string(v + 1) + " has no in-edges; unit self-loop added");
  if (zero_multiplicity(s) != rd.count())
    warnings.push_back("zero eigenvalue multiplicity " + std::to_string(zero_multiplicity(s)) +
                       " differs from reach count " + std::to_string(rd.count()));
  if (!gr.consistent) warnings.push_back("eigenvalues outside the Gersgorin disks");
  for (const EigenvalueCluster& c : clusters)
    if (c.defective())
      warnings.push_back("eigenvalue " + complex_text(c.value) + " is defective (algebraic " +
                         std::to_string(c.algebraic) + ", geometric " + std::to_string(c.geometric) + ")");

  return Analysis{std::move(a), conn, std::move(rd), std::move(l), std::move(kb), std::move(gamma),
                  std::move(s),  std::move(gr), std::move(clusters), std::move(warnings)};
}

json to_json(const Analysis& a) {
  const Digraph& g = a.adjacency->graph;
  json reaches = json::array();
  for (const Reach& r : a.rd.reaches)
    reaches.push_back({{"reach", vertices_json(r.reach)},
                       {"cabal", vertices_json(r.cabal)},
                       {"exclusive", vertices_json(r.exclusive)},
                       {"common", vertices_json(r.common)}});
  json sccs = json::array();
  for (const VertexSet& s : a.rd.condensation.sccs) sccs.push_back(vertices_json(s));

  json disks = json::array();
  for (const GersgorinDisk& d : a.gersgorin.disks) disks.push_back({{"center", d.center}, {"radius", d.radius}});
  json clusters = json::array();
  for (const EigenvalueCluster& c : a.clusters)
    clusters.push_back({{"value", {c.value.real(), c.value.imag()}},
                        {"algebraic", c.algebraic},
                        {"geometric", c.geometric}});

  json gamma = json::array(), gamma_bar = json::array();
  for (Index m = 0; m < a.kernels.count(); ++m) {
    gamma.push_back(vector_json(a.kernels.gamma(m)));
    gamma_bar.push_back(vector_json(a.kernels.gamma_bar(m).transpose()));
  }

  return {
      {"graph", {{"n", g.size()}, {"edges", g.edges().size()}, {"connectivity", std::string(to_string(a.connectivity))}}},
      {"laplacian", std::string(to_string(a.laplacian.kind()))},
      {"sccs", sccs},
      {"k", a.rd.count()},
      {"reaches", reaches},
      {"gamma", gamma},
      {"gammaBar", gamma_bar},
      {"Gamma", matrix_json(a.gamma)},
      {"spectrum", spectrum_json(a.spectrum)},
      {"multiplicities", clusters},
      {"gersgorin", {{"disks", disks}, {"consistent", a.gersgorin.consistent}, {"violations", vertices_json(a.gersgorin.violations)}}},
      {"warnings", a.warnings},
  };
}

namespace {

void write_row(std::ostream& os, const Eigen::RowVectorXd& r) {
  char buf[40];
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%12.6g", r(j));
    os << buf;
  }
  os << '\n';
}

}  // namespace

void write_text(std::ostream& os, const Analysis& a) {
  const Digraph& g = a.adjacency->graph;
  os << "graph: " << g.size() << " vertices, " << g.edges().size() << " edges, " << to_string(a.connectivity)
     << "ly connected\n";
  os << "laplacian: " << to_string(a.laplacian.kind()) << '\n';
  os << "strongly connected components:";
  for (const VertexSet& s : a.rd.condensation.sccs) os << ' ' << vertices_text(s);
  os << "\nreaches: " << a.rd.count() << '\n';
  for (Index m = 0; m < a.rd.count(); ++m) {
    const Reach& r = a.rd.reaches[m];
    os << "  R" << m + 1 << " = " << vertices_text(r.reach) << "  cabal " << vertices_text(r.cabal) << "  exclusive "
       << vertices_text(r.exclusive) << "  common " << vertices_text(r.common) << '\n';
  }
  os << "right kernel (gamma_m as rows):\n";
  for (Index m = 0; m < a.kernels.count(); ++m) write_row(os, a.kernels.gamma(m).transpose());
  os << "left kernel (gamma_bar_m):\n";
  for (Index m = 0; m < a.kernels.count(); ++m) write_row(os, a.kernels.gamma_bar(m));
  os << "Gamma:\n";
  for (Eigen::Index i = 0; i < a.gamma.rows(); ++i) write_row(os, a.gamma.row(i));
  os << "spectrum:\n";
  for (Complex z : a.spectrum.eigenvalues) os << "  " << complex_text(z) << '\n';
  os << "gersgorin: " << (a.gersgorin.consistent ? "all eigenvalues inside" : "VIOLATED") << '\n';
  for (const std::string& w : a.warnings) os << "warning: " << w << '\n';
}

}  // namespace lapdyn::cli
