#include "lapdyn/dynamics.hpp"

#include "lapdyn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapdyn {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::ConsensusContinuous: return "consensus-continuous";
    case Mode::DiffusionContinuous: return "diffusion-continuous";
    case Mode::ConsensusDiscrete: return "consensus-discrete";
    case Mode::DiffusionDiscrete: return "diffusion-discrete";
  }
  return "unknown";
}

double TrajectoryRecord::final_deviation() const {
  const auto& last = cesaro.empty() ? states.back() : cesaro.back();
  return inf_norm(Vector(last - predicted_limit));
}

Matrix matrix_exponential(const Matrix& m, double t) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: matrix must be square");
  if (!(t >= 0.0)) throw std::invalid_argument("matrix_exponential: t must be >= 0");
  const auto n = m.rows();
  Matrix a = -t * m;
  const double norm = inf_norm(a);
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm))) + 2;
  a /= std::ldexp(1.0, squarings);

  // Horner: I + A(I + A/2(I + A/3(... (I + A/12))))
  const Matrix id = Matrix::Identity(n, n);
  Matrix e = id;
  for (int k = 12; k >= 1; --k) e = id + (a * e) / static_cast<double>(k);
  for (int s = 0; s < squarings; ++s) e = e * e;
  return e;
}

namespace {

Vector predicted(const Matrix& gamma, const Vector& init, Flow flow) {
  return flow == Flow::Consensus ? Vector(gamma * init) : Vector(gamma.transpose() * init);
}

double rk4_step_size(double lnorm) {
  double h = lnorm > 0.0 ? std::min(0.01, 0.1 / lnorm) : 0.01;
  auto local_bound = [lnorm](double h) {
    double z = h * lnorm;
    return std::pow(z, 5) / 120.0 * std::exp(z);
  };
  while (local_bound(h) >= 1e-8) {
    h *= 0.5;
    if (h < 1e-12) throw StepUnderflow("RK4 step below 1e-12 required for ||L|| = " + std::to_string(lnorm));
  }
  return h;
}

}  // namespace

TrajectoryRecord simulate_continuous(const LaplacianMatrix& l, const Vector& init, double horizon, Index samples,
                                     Flow flow, const Matrix& gamma) {
  const Index n = l.size();
  if (static_cast<Index>(init.size()) != n) throw std::invalid_argument("initial state has wrong dimension");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (samples == 0) throw std::invalid_argument("samples must be positive");

  const Matrix gen = flow == Flow::Consensus ? Matrix(-l.matrix()) : Matrix(-l.matrix().transpose());
  const double h_max = rk4_step_size(inf_norm(l.matrix()));
  const double interval = horizon / static_cast<double>(samples);
  const auto substeps = static_cast<long>(std::ceil(interval / h_max));
  const double h = interval / static_cast<double>(substeps);

  TrajectoryRecord rec;
  rec.mode = flow == Flow::Consensus ? Mode::ConsensusContinuous : Mode::DiffusionContinuous;
  rec.predicted_limit = predicted(gamma, init, flow);
  rec.times.push_back(0.0);
  rec.states.push_back(init);

  Vector x = init;
  for (Index k = 1; k <= samples; ++k) {
    for (long s = 0; s < substeps; ++s) {
      Vector k1 = gen * x;
      Vector k2 = gen * (x + 0.5 * h * k1);
      Vector k3 = gen * (x + 0.5 * h * k2);
      Vector k4 = gen * (x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    rec.times.push_back(k == samples ? horizon : interval * static_cast<double>(k));
    rec.states.push_back(x);
  }
  return rec;
}

TrajectoryRecord simulate_continuous(const LaplacianMatrix& l, const Vector& init, double horizon, Index samples,
                                     Flow flow) {
  return simulate_continuous(l, init, horizon, samples, flow, gamma_matrix(kernel_basis(l)));
}

TrajectoryRecord simulate_discrete(const Matrix& s, const Vector& init, Index steps, Flow flow, const Matrix& gamma,
                                   Index stride) {
  const auto n = s.rows();
  if (s.cols() != n || init.size() != n) throw std::invalid_argument("dimension mismatch");
  if (steps == 0) throw std::invalid_argument("steps must be >= 1");
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");

  const Matrix step = flow == Flow::Consensus ? s : Matrix(s.transpose());
  TrajectoryRecord rec;
  rec.mode = flow == Flow::Consensus ? Mode::ConsensusDiscrete : Mode::DiffusionDiscrete;
  rec.predicted_limit = predicted(gamma, init, flow);
  rec.times.push_back(0.0);
  rec.states.push_back(init);
  rec.cesaro.push_back(init);

  Vector x = init;
  Vector sum = Vector::Zero(n);
  Vector comp = Vector::Zero(n);  // Kahan compensation
  for (Index l = 1; l <= steps; ++l) {
    Vector y = x - comp;
    Vector t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    x = step * x;
    if (l % stride == 0 || l == steps) {
      rec.times.push_back(static_cast<double>(l));
      rec.states.push_back(x);
      rec.cesaro.push_back(sum / static_cast<double>(l));
    }
  }
  return rec;
}

Matrix cesaro_matrix(const Matrix& s, Index steps) {
  if (s.rows() != s.cols()) throw std::invalid_argument("cesaro_matrix: matrix must be square");
  if (steps == 0) throw std::invalid_argument("steps must be >= 1");
  const auto n = s.rows();
  Matrix power = Matrix::Identity(n, n);
  Matrix sum = Matrix::Zero(n, n);
  Matrix comp = Matrix::Zero(n, n);
  for (Index j = 0; j < steps; ++j) {
    Matrix y = power - comp;
    Matrix t = sum + y;
    comp = (t - sum) - y;
    sum = std::move(t);
    power = power * s;
  }
  return sum / static_cast<double>(steps);
}

Matrix time_one_map(const LaplacianMatrix& rw) {
  if (rw.kind() != LaplacianKind::RandomWalk) throw std::invalid_argument("time_one_map needs a random-walk Laplacian");
  Matrix sd = matrix_exponential(rw.matrix(), 1.0);
  const Index n = rw.size();

  for (Index i = 0; i < n; ++i) {
    double row = sd.row(i).sum();
    if (std::abs(row - 1.0) > 1e-10)
      throw StochasticityViolation("row " + std::to_string(i + 1) + " of e^{-L} sums to " + format_double(row));
  }
  if (sd.minCoeff() < -1e-12) throw StochasticityViolation("e^{-L} has a negative entry");

  if (rw.adjacency()) {
    const Digraph& g = rw.graph();
    for (Index j = 0; j < n; ++j)
      for (Index i : reachable_from(g, {j}))
        if (!(sd(i, j) > 0.0))
          throw StochasticityViolation("e^{-L} misses path " + std::to_string(j + 1) + " ~> " + std::to_string(i + 1));
  }
  return sd;
}

Vector absorption_probabilities(const KernelBasis& kb, Index j) {
  if (j >= kb.size()) throw std::out_of_range("vertex out of range");
  return kb.right.row(j).transpose();
}

HittingTimeSolution hitting_times(const LaplacianMatrix& rw, const ReachDecomposition& rd) {
  if (rw.kind() != LaplacianKind::RandomWalk) throw std::invalid_argument("hitting_times needs a random-walk Laplacian");
  const Index n = rw.size();
  HittingTimeSolution out;
  out.absorbing = rd.cabal_union();
  out.tau = Vector::Zero(n);

  VertexSet rest;
  for (Index v = 0, b = 0; v < n; ++v) {
    if (b < out.absorbing.size() && out.absorbing[b] == v)
      ++b;
    else
      rest.push_back(v);
  }
  if (rest.empty()) return out;

  Matrix a = select(rw.matrix(), rest, rest);
  Vector rhs = Vector::Ones(rest.size());
  Vector tau = a.partialPivLu().solve(rhs);
  if (!tau.allFinite() || inf_norm(Vector(a * tau - rhs)) > 1e-9 * std::max(1.0, inf_norm(tau)))
    throw SingularSystem("hitting-time system is singular");
  for (std::size_t k = 0; k < rest.size(); ++k) out.tau(rest[k]) = tau(k);
  return out;
}

}  // namespace lapdyn
