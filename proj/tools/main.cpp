// lapdyn: command-line front end for the Laplacian dynamics library.
//
// Exit codes: 0 success, 2 input error, 3 graph not weakly connected,
// 4 numerical failure.

#include "report.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace lapdyn;
using namespace lapdyn::cli;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitConnectivity = 3;
constexpr int kExitNumerical = 4;

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

struct Options {
  std::string out;
  bool json = false;
  std::uint64_t seed = 1;
  std::string graph;
  std::string kind_name = "rw";
  LaplacianKind kind = LaplacianKind::RandomWalk;
  // simulate
  std::string mode = "diffusion-continuous";
  std::string init = "uniform";
  double horizon = 50.0;
  Index samples = 100;
  Index steps = 1000;
  Index stride = 1;
  // spectrum
  std::string svg;
  // hitting-times, absorb
  Index walks = 0;
  Index vertex = 0;
};

/// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }
  /// Where summaries go: stdout if the main output went to a file, else stderr.
  std::ostream& summary() { return file_.is_open() ? std::cout : std::cerr; }

 private:
  std::ofstream file_;
};

std::shared_ptr<const AdjacencyBundle> load(const std::string& path) {
  return std::make_shared<const AdjacencyBundle>(build_adjacency(read_digraph(path)));
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Vector initial_state(const std::string& spec, Index n, Flow flow) {
  if (spec == "uniform")
    return flow == Flow::Diffusion ? Vector::Constant(n, 1.0 / static_cast<double>(n)) : Vector::Ones(n);
  if (spec.rfind("vertex:", 0) == 0) {
    const std::string id = spec.substr(7);
    char* end = nullptr;
    unsigned long long v = std::strtoull(id.c_str(), &end, 10);
    if (id.empty() || *end != '\0' || v < 1 || v > n) throw InputError("init: no vertex " + id);
    Vector x = Vector::Zero(n);
    x(v - 1) = 1.0;
    return x;
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw InputError("init: cannot open " + path);
    std::vector<double> values;
    std::string tok;
    while (in >> tok) {
      char* end = nullptr;
      double x = std::strtod(tok.c_str(), &end);
      if (*end != '\0' || !std::isfinite(x)) throw InputError("init: not a number: " + tok);
      values.push_back(x);
    }
    if (values.size() != n)
      throw InputError("init: expected " + std::to_string(n) + " values, found " + std::to_string(values.size()));
    return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(n));
  }
  throw InputError("init must be uniform, vertex:<id> or file:<path>, got '" + spec + "'");
}

int run_analyze(const Options& o) {
  Analysis a = analyze(load(o.graph), o.kind);
  Sink sink(o.out);
  if (o.json)
    sink.stream() << to_json(a).dump(2) << '\n';
  else
    write_text(sink.stream(), a);
  return 0;
}

/// Does S have an eigenvalue on the unit circle other than 1?
bool has_peripheral_roots(const Matrix& s) {
  for (Complex z : eigenvalues(s).eigenvalues)
    if (std::abs(std::abs(z) - 1.0) < 1e-7 && std::abs(z - 1.0) > 1e-7) return true;
  return false;
}

int run_simulate(const Options& o) {
  static const std::map<std::string, Mode> modes{{"consensus-continuous", Mode::ConsensusContinuous},
                                                  {"diffusion-continuous", Mode::DiffusionContinuous},
                                                  {"consensus-discrete", Mode::ConsensusDiscrete},
                                                  {"diffusion-discrete", Mode::DiffusionDiscrete}};
  const Mode mode = modes.at(o.mode);
  const bool discrete = mode == Mode::ConsensusDiscrete || mode == Mode::DiffusionDiscrete;
  const Flow flow = mode == Mode::ConsensusContinuous || mode == Mode::ConsensusDiscrete ? Flow::Consensus : Flow::Diffusion;

  auto adj = load(o.graph);
  const Index n = adj->graph.size();
  Vector x0 = initial_state(o.init, n, flow);
  ReachDecomposition rd = reach_decomposition(adj->graph);
  // Discrete modes iterate S, whose Cesaro limit is the rw Gamma.
  LaplacianMatrix l = discrete || o.kind == LaplacianKind::RandomWalk ? rw_laplacian(adj) : comb_laplacian(adj);
  Matrix gamma = gamma_matrix(kernel_basis(l, rd));

  TrajectoryRecord r = discrete ? simulate_discrete(adj->S, x0, o.steps, flow, gamma, o.stride)
                                : simulate_continuous(l, x0, o.horizon, o.samples, flow, gamma);

  std::vector<std::string> warnings;
  double raw_deviation = inf_norm(Vector(r.states.back() - r.predicted_limit));
  if (discrete && raw_deviation > 1e-6 && has_peripheral_roots(adj->S))
    warnings.push_back("raw iterates periodic; see cesaro column");

  Sink sink(o.out);
  std::ostream& os = sink.stream();
  if (o.json) {
    json states = json::array(), cesaro = json::array();
    for (const Vector& x : r.states) states.push_back(vector_json(x));
    for (const Vector& x : r.cesaro) cesaro.push_back(vector_json(x));
    json doc{{"mode", std::string(to_string(r.mode))},
             {"laplacian", discrete ? "rw" : std::string(to_string(l.kind()))},
             {"times", r.times},
             {"states", states},
             {"predictedLimit", vector_json(r.predicted_limit)},
             {"finalDeviation", r.final_deviation()},
             {"warnings", warnings}};
    if (discrete) doc["cesaro"] = cesaro;
    os << doc.dump(2) << '\n';
  } else {
    os << (discrete ? "step" : "t");
    for (Index i = 1; i <= n; ++i) os << ",x" << i;
    if (discrete)
      for (Index i = 1; i <= n; ++i) os << ",cesaro" << i;
    os << '\n';
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      os << format_double(r.times[k]);
      for (Index i = 0; i < n; ++i) os << ',' << format_double(r.states[k](i));
      if (discrete)
        for (Index i = 0; i < n; ++i) os << ',' << format_double(r.cesaro[k](i));
      os << '\n';
    }
  }

  std::ostream& summary = o.json && !sink.to_file() ? std::cerr : sink.summary();
  summary << "predicted limit:";
  for (Index i = 0; i < n; ++i) summary << ' ' << format_double(r.predicted_limit(i));
  summary << "\nfinal deviation: " << sci(r.final_deviation()) << (discrete ? " (cesaro average)" : "") << '\n';
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
  return 0;
}

int run_spectrum(const Options& o) {
  auto adj = load(o.graph);
  reach_decomposition(adj->graph);  // connectivity precondition
  LaplacianMatrix l = o.kind == LaplacianKind::Comb ? comb_laplacian(adj) : rw_laplacian(adj);
  Spectrum sl = eigenvalues(l.matrix());
  Spectrum ss = eigenvalues(adj->S);

  Sink sink(o.out);
  if (o.json) {
    sink.stream() << json{{"laplacian", std::string(to_string(l.kind()))},
                          {"eigenvalues", spectrum_json(sl)},
                          {"stochastic", spectrum_json(ss)}}
                         .dump(2)
                  << '\n';
  } else {
    sink.stream() << "eigenvalues of L (" << to_string(l.kind()) << "):\n";
    for (Complex z : sl.eigenvalues) sink.stream() << "  " << complex_text(z) << '\n';
    sink.stream() << "eigenvalues of S:\n";
    for (Complex z : ss.eigenvalues) sink.stream() << "  " << complex_text(z) << '\n';
  }
  if (!o.svg.empty()) {
    Spectrum minus{{}};
    for (Complex z : sl.eigenvalues) minus.eigenvalues.push_back(-z);
    std::ofstream f(o.svg, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.svg);
    f << spectrum_svg(ss, minus, std::string(to_string(l.kind())) + " Laplacian of " + std::filesystem::path(o.graph).filename().string());
  }
  return 0;
}

int run_hitting_times(const Options& o) {
  auto adj = load(o.graph);
  ReachDecomposition rd = reach_decomposition(adj->graph);
  HittingTimeSolution h = hitting_times(rw_laplacian(adj), rd);
  const Index n = adj->graph.size();
  std::vector<double> mc(n, 0.0);
  if (o.walks > 0)
    for (Index j = 0; j < n; ++j) mc[j] = simulate_walks(adj->S, rd, j, o.walks, o.seed + j).mean_hitting_time;

  Sink sink(o.out);
  if (o.json) {
    json doc{{"tau", vector_json(h.tau)}, {"absorbing", vertices_json(h.absorbing)}};
    if (o.walks > 0) doc["monteCarlo"] = {{"walks", o.walks}, {"seed", o.seed}, {"meanHittingTime", mc}};
    sink.stream() << doc.dump(2) << '\n';
  } else {
    sink.stream() << "absorbing set: " << vertices_text(h.absorbing) << '\n';
    sink.stream() << (o.walks > 0 ? "vertex,tau,monte_carlo\n" : "vertex,tau\n");
    for (Index j = 0; j < n; ++j) {
      sink.stream() << j + 1 << ',' << format_double(h.tau(j));
      if (o.walks > 0) sink.stream() << ',' << format_double(mc[j]);
      sink.stream() << '\n';
    }
  }
  return 0;
}

int run_absorb(const Options& o) {
  auto adj = load(o.graph);
  ReachDecomposition rd = reach_decomposition(adj->graph);
  KernelBasis kb = kernel_basis(rw_laplacian(adj), rd);
  const Index n = adj->graph.size();
  if (o.vertex > n) throw InputError("no vertex " + std::to_string(o.vertex));
  std::vector<Index> targets;
  if (o.vertex > 0)
    targets.push_back(o.vertex - 1);
  else
    for (Index j = 0; j < n; ++j) targets.push_back(j);

  json rows = json::array();
  std::ostringstream text;
  text << "vertex";
  for (Index m = 0; m < rd.count(); ++m) text << ",cabal" << m + 1;
  if (o.walks > 0)
    for (Index m = 0; m < rd.count(); ++m) text << ",monte_carlo" << m + 1;
  text << '\n';
  for (Index j : targets) {
    Vector p = absorption_probabilities(kb, j);
    json row{{"vertex", j + 1}, {"probabilities", vector_json(p)}};
    text << j + 1;
    for (Eigen::Index m = 0; m < p.size(); ++m) text << ',' << format_double(p(m));
    if (o.walks > 0) {
      WalkEstimate w = simulate_walks(adj->S, rd, j, o.walks, o.seed + j);
      row["monteCarlo"] = vector_json(w.absorption);
      for (Eigen::Index m = 0; m < w.absorption.size(); ++m) text << ',' << format_double(w.absorption(m));
    }
    text << '\n';
    rows.push_back(std::move(row));
  }

  Sink sink(o.out);
  if (o.json) {
    json cabals = json::array();
    for (const Reach& r : rd.reaches) cabals.push_back(vertices_json(r.cabal));
    json doc{{"cabals", cabals}, {"absorption", rows}};
    if (o.walks > 0) doc["walks"] = o.walks, doc["seed"] = o.seed;
    sink.stream() << doc.dump(2) << '\n';
  } else {
    sink.stream() << "cabals:";
    for (const Reach& r : rd.reaches) sink.stream() << ' ' << vertices_text(r.cabal);
    sink.stream() << '\n' << text.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consensus, diffusion and spectral analysis of weighted digraph Laplacians"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write the main output to this file");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "Seed for Monte Carlo walks")->capture_default_str();

  auto with_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Edge-list file")->required();
  };
  auto with_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind_name, "Laplacian: comb or rw")
        ->check(CLI::IsMember({"comb", "rw"}))
        ->capture_default_str();
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Reaches, kernels, Gamma and spectrum");
  with_graph(analyze_cmd);
  with_kind(analyze_cmd);

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Consensus or diffusion trajectory");
  with_graph(simulate_cmd);
  with_kind(simulate_cmd);
  simulate_cmd->add_option("--mode", o.mode)
      ->check(CLI::IsMember({"consensus-continuous", "diffusion-continuous", "consensus-discrete", "diffusion-discrete"}))
      ->capture_default_str();
  simulate_cmd->add_option("--init", o.init, "uniform | vertex:<id> | file:<path>")->capture_default_str();
  simulate_cmd->add_option("--horizon", o.horizon, "Continuous modes: final time")->capture_default_str();
  simulate_cmd->add_option("--samples", o.samples, "Continuous modes: number of sample intervals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--steps", o.steps, "Discrete modes: number of steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--stride", o.stride, "Discrete modes: record every stride-th step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of L and S");
  with_graph(spectrum_cmd);
  with_kind(spectrum_cmd);
  spectrum_cmd->add_option("--svg", o.svg, "Also plot S and -L eigenvalues to this SVG file");

  CLI::App* hitting_cmd = app.add_subcommand("hitting-times", "Expected steps until a walker reaches a cabal");
  with_graph(hitting_cmd);
  hitting_cmd->add_option("--walks", o.walks, "Monte Carlo walks per vertex (0: none)")->capture_default_str();

  CLI::App* absorb_cmd = app.add_subcommand("absorb", "Probability of ending in each cabal");
  with_graph(absorb_cmd);
  absorb_cmd->add_option("--vertex", o.vertex, "Start vertex (1-based; default all)");
  absorb_cmd->add_option("--walks", o.walks, "Monte Carlo walks per vertex (0: none)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  o.kind = o.kind_name == "comb" ? LaplacianKind::Comb : LaplacianKind::RandomWalk;

  try {
    if (analyze_cmd->parsed()) return run_analyze(o);
    if (simulate_cmd->parsed()) return run_simulate(o);
    if (spectrum_cmd->parsed()) return run_spectrum(o);
    if (hitting_cmd->parsed()) return run_hitting_times(o);
    if (absorb_cmd->parsed()) return run_absorb(o);
  } catch (const NotWeaklyConnected& e) {
    std::cerr << "error: " << e.what() << '\n';
    for (std::size_t c = 0; c < e.components().size(); ++c) {
      VertexSet comp(e.components()[c].begin(), e.components()[c].end());
      std::cerr << "  component " << c + 1 << ": " << vertices_text(comp) << '\n';
    }
    std::cerr << "hint: split the edge list and analyse each component on its own\n";
    return kExitConnectivity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Input: return kExitInput;
      case ErrorKind::Connectivity: return kExitConnectivity;
      case ErrorKind::Numerical: return kExitNumerical;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
