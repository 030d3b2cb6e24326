#pragma once

#include "lapdyn/kernels.hpp"
#include "lapdyn/laplacian.hpp"

#include <string_view>
#include <vector>

namespace lapdyn {

/// e^{-m t} by scaling and squaring around a degree-12 Taylor core, with
/// ceil(log2(||m t||_inf)) + 2 squarings (none when ||m t|| <= 1/4).
Matrix matrix_exponential(const Matrix& m, double t);

/// Consensus evolves a column vector, x' = -L x (or x <- S x). Diffusion
/// evolves a row vector, p' = -p L (or p <- p S).
enum class Flow { Consensus, Diffusion };

enum class Mode { ConsensusContinuous, DiffusionContinuous, ConsensusDiscrete, DiffusionDiscrete };
std::string_view to_string(Mode m);

struct TrajectoryRecord {
  Mode mode;
  std::vector<double> times;
  std::vector<Vector> states;
  /// Discrete modes only: entry k is (1/l) sum_{j<l} state(j) at l = times[k]
  /// (the initial state itself at l = 0).
  std::vector<Vector> cesaro;
  /// Gamma x0 for consensus, p0 Gamma for diffusion.
  Vector predicted_limit;

  /// ||final state - predicted_limit||_inf (Cesaro average for discrete modes).
  double final_deviation() const;
};

/// Classical RK4 on a fixed step. The step starts at min(0.01, 0.1/||L||_inf)
/// and is halved until the RK4 local truncation bound (h||L||)^5/120 e^{h||L||}
/// drops below 1e-8; StepUnderflow if that needs h < 1e-12. Records
/// samples + 1 evenly spaced states on [0, horizon].
TrajectoryRecord simulate_continuous(const LaplacianMatrix& l, const Vector& init, double horizon, Index samples,
                                     Flow flow, const Matrix& gamma);
TrajectoryRecord simulate_continuous(const LaplacianMatrix& l, const Vector& init, double horizon, Index samples,
                                     Flow flow);

/// Iterates x <- S x (or p <- p S) for `steps` steps, recording every
/// `stride`-th state plus the last one, with a compensated running Cesaro sum.
TrajectoryRecord simulate_discrete(const Matrix& s, const Vector& init, Index steps, Flow flow, const Matrix& gamma,
                                   Index stride = 1);

/// (1/steps) sum_{j<steps} S^j by running accumulation.
Matrix cesaro_matrix(const Matrix& s, Index steps);

/// S^d = e^{-L} for a random-walk Laplacian. Throws StochasticityViolation
/// unless rows sum to 1 within 1e-10, entries are >= -1e-12, and every entry
/// (i, j) with a path j ~> i in the graph is strictly positive.
Matrix time_one_map(const LaplacianMatrix& rw);

/// (gamma_1j, ..., gamma_kj): where a walker started at j ends up.
Vector absorption_probabilities(const KernelBasis& kb, Index j);

struct HittingTimeSolution {
  Vector tau;          // expected steps to reach the union of cabals
  VertexSet absorbing;  // that union, B
};

/// Solves L tau = 1 on B^c with tau = 0 on B, for a random-walk Laplacian.
HittingTimeSolution hitting_times(const LaplacianMatrix& rw, const ReachDecomposition& rd);

}  // namespace lapdyn
