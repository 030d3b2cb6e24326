#include "support.hpp"

using namespace lapdyn;
using namespace lapdyn::test;

namespace {

struct Case {
  std::shared_ptr<const AdjacencyBundle> adjacency;
  ReachDecomposition rd;
};

std::vector<Case> random_cases(std::uint64_t seed, int count, const RandomGraphOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Case> out;
  for (int i = 0; i < count; ++i) {
    auto a = std::make_shared<const AdjacencyBundle>(build_adjacency(random_weakly_connected(rng, opt)));
    out.push_back({a, reach_decomposition(a->graph)});
  }
  return out;
}

bool uniform_cabal_degrees(const Case& c) {
  for (const Reach& r : c.rd.reaches)
    for (Index v : r.cabal)
      if (std::abs(c.adjacency->D(v) - c.adjacency->D(r.cabal.front())) > 1e-12) return false;
  return true;
}

}  // namespace

TEST_CASE("zero multiplicity equals the number of reaches", "[properties]") {
  for (const Case& c : random_cases(1, 100)) {
    for (const LaplacianMatrix& l : {rw_laplacian(c.adjacency), comb_laplacian(c.adjacency)}) {
      Spectrum s = eigenvalues(l.matrix());
      CHECK(zero_multiplicity(s) == c.rd.count());
      for (Complex z : s.eigenvalues) CHECK(z.real() >= -1e-8);
      CHECK(gersgorin_check(l, s).consistent);
    }
  }
}

TEST_CASE("Gamma is a projection annihilated by L", "[properties]") {
  for (const Case& c : random_cases(2, 100)) {
    for (const LaplacianMatrix& l : {rw_laplacian(c.adjacency), comb_laplacian(c.adjacency)}) {
      const Matrix& m = l.matrix();
      Matrix g = gamma_matrix(kernel_basis(l, c.rd));
      CHECK(max_abs_diff(g * g, g) < 1e-8);
      CHECK((m * g).cwiseAbs().maxCoeff() < 1e-8);
      CHECK((g * m).cwiseAbs().maxCoeff() < 1e-8);
      CHECK((g.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-10);
      CHECK(g.minCoeff() >= -1e-12);
      Vector in_cabals = indicator(c.adjacency->graph.size(), c.rd.cabal_union());
      for (Eigen::Index j = 0; j < g.cols(); ++j)
        if (in_cabals(j) == 0.0) CHECK(g.col(j).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("comb and rw Gamma coincide when cabal degrees are uniform", "[properties]") {
  int compared = 0;
  for (const Case& c : random_cases(3, 100)) {
    if (!uniform_cabal_degrees(c)) continue;
    ++compared;
    Matrix gr = gamma_matrix(kernel_basis(rw_laplacian(c.adjacency), c.rd));
    Matrix gc = gamma_matrix(kernel_basis(comb_laplacian(c.adjacency), c.rd));
    CHECK(max_abs_diff(gr, gc) < 1e-8);
  }
  CHECK(compared > 10);
}

TEST_CASE("strict diagonal blocks are nonsingular", "[properties]") {
  for (const Case& c : random_cases(4, 100)) {
    BlockTriangularForm f = block_triangularize(rw_laplacian(c.adjacency), c.rd.condensation);
    Index actual = 0;
    for (const DiagonalBlock& b : f.blocks) {
      Spectrum s = eigenvalues(b.block.matrix());
      if (b.block.is_strict()) {
        for (Complex z : s.eigenvalues) CHECK(z.real() > 1e-8);
      } else {
        ++actual;
        CHECK(zero_multiplicity(s) == 1);
      }
    }
    CHECK(actual == c.rd.count());
  }
}

TEST_CASE("stochastic matrices and time-one maps", "[properties]") {
  for (const Case& c : random_cases(5, 100)) {
    for (Complex z : eigenvalues(c.adjacency->S).eigenvalues) CHECK(std::abs(z) <= 1.0 + 1e-8);
    Matrix sd = time_one_map(rw_laplacian(c.adjacency));
    for (Complex z : eigenvalues(sd).eigenvalues) {
      CHECK(std::abs(z) > 1e-8);
      CHECK(std::abs(z) <= 1.0 + 1e-8);
    }
  }
}

TEST_CASE("diffusion conserves mass and positivity", "[properties]") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Case& c : random_cases(6, 100)) {
    const Eigen::Index n = static_cast<Eigen::Index>(c.adjacency->graph.size());
    Vector p0 = Vector::NullaryExpr(n, [&]() { return u(rng); });
    for (const LaplacianMatrix& l : {rw_laplacian(c.adjacency), comb_laplacian(c.adjacency)}) {
      Matrix g = gamma_matrix(kernel_basis(l, c.rd));
      TrajectoryRecord r = simulate_continuous(l, p0, 2.0, 4, Flow::Diffusion, g);
      for (const Vector& p : r.states) {
        CHECK(p.sum() == Catch::Approx(p0.sum()).margin(1e-9));
        CHECK(p.minCoeff() >= -1e-12);
      }
    }
    TrajectoryRecord d = simulate_discrete(c.adjacency->S, p0, 200, Flow::Diffusion,
                                           gamma_matrix(kernel_basis(rw_laplacian(c.adjacency), c.rd)), 20);
    for (const Vector& p : d.states) {
      CHECK(p.sum() == Catch::Approx(p0.sum()).margin(1e-9));
      CHECK(p.minCoeff() >= 0.0);
    }
  }
}

TEST_CASE("undirected graphs have real spectra", "[properties]") {
  RandomGraphOptions opt;
  opt.undirected = true;
  for (const Case& c : random_cases(7, 100, opt)) {
    CHECK(c.rd.count() == 1);
    for (const LaplacianMatrix& l : {rw_laplacian(c.adjacency), comb_laplacian(c.adjacency)})
      for (Complex z : eigenvalues(l.matrix()).eigenvalues) CHECK(std::abs(z.imag()) < 1e-8);
  }
}
