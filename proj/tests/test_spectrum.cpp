#include "oracles.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>

using namespace lapdyn;
using namespace lapdyn::test;

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

std::vector<Complex> eigen_reference(const Matrix& m) {
  Eigen::EigenSolver<Matrix> es(m, false);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

// Defective witness: a 4-vertex SCC whose comb Laplacian has spectrum {0, 1, 2, 2}
// with a single eigenvector for 2 (found by exhaustive search over unit-weight SCCs).
Digraph defective_scc() { return graph(4, {{1, 2}, {1, 3}, {2, 1}, {3, 4}, {4, 1}}); }

}  // namespace

TEST_CASE("spectra of the example Laplacians", "[spectrum]") {
  AdjacencyBundle a = build_adjacency(example_graph());
  Spectrum comb = eigenvalues(comb_laplacian(a).matrix());
  Spectrum rw = eigenvalues(rw_laplacian(a).matrix());
  REQUIRE(comb.size() == 7);
  std::vector<Complex> comb_expected{0, 0, 1, 1, 3, {1.5, kHalfRoot3}, {1.5, -kHalfRoot3}};
  std::vector<Complex> rw_expected{0, 0, 0.5, 1, 1.5, {1.5, kHalfRoot3}, {1.5, -kHalfRoot3}};
  CHECK(oracle::multiset_distance(comb.eigenvalues, comb_expected) < 1e-7);
  CHECK(oracle::multiset_distance(rw.eigenvalues, rw_expected) < 1e-7);
  CHECK(zero_multiplicity(comb, 1e-7) == 2);
  CHECK(zero_multiplicity(rw, 1e-7) == 2);
}

TEST_CASE("spectra of small matrices", "[spectrum]") {
  Spectrum id = eigenvalues(Matrix::Identity(4, 4));
  CHECK(oracle::multiset_distance(id.eigenvalues, {1, 1, 1, 1}) == 0.0);

  Spectrum cyc = eigenvalues(rw_laplacian(build_adjacency(graph(3, {{1, 2}, {2, 3}, {3, 1}}))).matrix());
  CHECK(oracle::multiset_distance(cyc.eigenvalues, {0, {1.5, kHalfRoot3}, {1.5, -kHalfRoot3}}) < 1e-12);
  CHECK(zero_multiplicity(cyc) == 1);

  AdjacencyBundle a = build_adjacency(example_graph());
  LaplacianMatrix block = restricted_laplacian(select(a.S, ids({6, 7}), ids({6, 7})), Vector::Ones(2), Vector::Ones(2));
  CHECK(zero_multiplicity(eigenvalues(block.matrix())) == 0);

  CHECK(eigenvalues(Matrix::Zero(1, 1)).eigenvalues == std::vector<Complex>{0.0});
  CHECK(eigenvalues(Matrix(0, 0)).eigenvalues.empty());
  CHECK_THROWS_AS(eigenvalues(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("Hessenberg reduction is a similarity", "[spectrum]") {
  std::mt19937_64 rng(0x4e55);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m = Matrix::NullaryExpr(8, 8, [&]() { return u(rng); });
  Matrix h = hessenberg(m);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j + 1 < i; ++j) CHECK(h(i, j) == 0.0);
  CHECK(h.trace() == Catch::Approx(m.trace()).margin(1e-12));
  CHECK(h.norm() == Catch::Approx(m.norm()).epsilon(1e-12));
}

TEST_CASE("eigenvalues agree with characteristic-polynomial roots", "[spectrum][oracle]") {
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    Matrix m = Matrix::NullaryExpr(n, n, [&]() { return u(rng); });
    auto roots = oracle::polynomial_roots(oracle::characteristic_polynomial(m));
    CHECK(oracle::multiset_distance(eigenvalues(m).eigenvalues, roots) < 1e-7);
  }
}

TEST_CASE("Laplacian spectra reproduce the characteristic polynomial", "[spectrum][oracle]") {
  // Laplacians often carry repeated (even defective) eigenvalues, where root
  // finding on the oracle side loses accuracy; compare coefficients instead.
  std::mt19937_64 rng(0xfade);
  RandomGraphOptions small;
  small.max_n = 8;
  for (int trial = 0; trial < 100; ++trial) {
    AdjacencyBundle a = build_adjacency(random_weakly_connected(rng, small));
    for (const Matrix& m : {comb_laplacian(a).matrix(), rw_laplacian(a).matrix()}) {
      auto expected = oracle::characteristic_polynomial(m);
      auto got = oracle::polynomial_from_roots(eigenvalues(m).eigenvalues);
      REQUIRE(got.size() == expected.size());
      const long double scale = std::pow(1.0L + inf_norm(m), static_cast<long double>(m.rows()));
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-12L * scale);
    }
  }
}

TEST_CASE("eigenvalues agree with Eigen's real Schur solver", "[spectrum][oracle]") {
  std::mt19937_64 rng(0xbeef);
  std::normal_distribution<double> g;
  for (int n : {7, 15, 31, 60}) {
    Matrix m = Matrix::NullaryExpr(n, n, [&]() { return g(rng); });
    Spectrum s = eigenvalues(m);
    CHECK(oracle::multiset_distance(s.eigenvalues, eigen_reference(m)) < 1e-8 * n);
    for (Complex z : s.eigenvalues)
      if (z.imag() != 0.0)
        CHECK(std::count(s.eigenvalues.begin(), s.eigenvalues.end(), std::conj(z)) >= 1);
  }
}

TEST_CASE("Gersgorin containment", "[spectrum]") {
  AdjacencyBundle a = build_adjacency(example_graph());
  LaplacianMatrix rw = rw_laplacian(a);
  Spectrum s = eigenvalues(rw.matrix());
  GersgorinReport rep = gersgorin_check(rw, s);
  CHECK(rep.consistent);
  for (const auto& d : rep.disks) {
    CHECK(d.center == 1.0);
    CHECK(d.radius == 1.0);
  }
  for (Complex z : s.eigenvalues) CHECK(std::abs(z - 1.0) <= 1.0 + 1e-8);

  LaplacianMatrix comb = comb_laplacian(a);
  GersgorinReport crep = gersgorin_check(comb, eigenvalues(comb.matrix()));
  CHECK(crep.consistent);
  CHECK(crep.disks[5].center == 2.0);
  CHECK(std::abs(3.0 - crep.disks[5].center) <= crep.disks[5].radius);

  // e = 0 leaves a diagonal matrix: eigenvalues are the centres.
  Vector centres = vec({0.5, 1, 2, 3, 4, 5, 6});
  LaplacianMatrix diag = generalized_laplacian(a, centres, Vector::Zero(7));
  Spectrum ds = eigenvalues(diag.matrix());
  CHECK(oracle::multiset_distance(ds.eigenvalues, {0.5, 1, 2, 3, 4, 5, 6}) == 0.0);
  CHECK(gersgorin_check(diag, ds).consistent);

  Spectrum fake{{0.0, 2.5, Complex(1.0, 1.2)}};
  GersgorinReport bad = gersgorin_check(rw_laplacian(build_adjacency(graph(3, {{1, 2}, {2, 3}, {3, 1}}))), fake);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.violations == std::vector<Index>{1, 2});
}

TEST_CASE("rank test detects defective eigenvalues", "[spectrum]") {
  SECTION("nilpotent Jordan block") {
    Matrix j = rows({{0, 1}, {0, 0}});
    auto report = multiplicity_report(j, eigenvalues(j));
    REQUIRE(report.size() == 1);
    CHECK(report[0].algebraic == 2);
    CHECK(report[0].geometric == 1);
    CHECK(report[0].defective());
  }
  SECTION("chain 1 -> 2 -> 3 comb Laplacian has a Jordan block at 1") {
    Matrix l = comb_laplacian(build_adjacency(graph(3, {{1, 2}, {2, 3}}))).matrix();
    auto report = multiplicity_report(l, eigenvalues(l));
    REQUIRE(report.size() == 2);
    CHECK(std::abs(report[1].value - 1.0) < 1e-7);
    CHECK(report[1].algebraic == 2);
    CHECK(report[1].geometric == 1);
    CHECK_FALSE(report[0].defective());
  }
  SECTION("strongly connected witness with a defective nonzero eigenvalue") {
    Matrix l = comb_laplacian(build_adjacency(defective_scc())).matrix();
    Spectrum s = eigenvalues(l);
    CHECK(oracle::multiset_distance(s.eigenvalues, {0, 1, 2, 2}) < 1e-7);
    auto report = multiplicity_report(l, s);
    REQUIRE(report.size() == 3);
    CHECK(report[2].value.real() == Catch::Approx(2.0).margin(1e-12));
    CHECK(report[2].algebraic == 2);
    CHECK(report[2].geometric == 1);
    CHECK(geometric_multiplicity(l, 0.0) == 1);
  }
  SECTION("undirected graphs are diagonalisable") {
    Matrix l = comb_laplacian(build_adjacency(graph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}}))).matrix();
    auto report = multiplicity_report(l, eigenvalues(l));
    REQUIRE(report.size() == 2);  // {0, 3, 3}
    CHECK(report[1].algebraic == 2);
    CHECK(report[1].geometric == 2);
  }
  CHECK(numerical_rank(Matrix::Identity(3, 3)) == 3);
  CHECK(numerical_rank(Matrix::Zero(3, 3)) == 0);
}
