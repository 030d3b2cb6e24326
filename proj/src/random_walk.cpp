#include "lapdyn/random_walk.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lapdyn {

namespace {

// 53 random bits -> [0, 1). Avoids std::uniform_real_distribution, whose
// output differs between standard libraries.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

WalkEstimate simulate_walks(const Matrix& s, const ReachDecomposition& rd, Index start, Index walks,
                            std::uint64_t seed, Index max_steps) {
  const auto n = static_cast<Index>(s.rows());
  if (start >= n) throw std::out_of_range("start vertex out of range");
  if (walks == 0) throw std::invalid_argument("walks must be positive");

  std::vector<long> cabal_of(n, -1);
  for (Index m = 0; m < rd.count(); ++m)
    for (Index v : rd.reaches[m].cabal) cabal_of[v] = static_cast<long>(m);

  // Per-row cumulative distributions over the nonzero entries.
  std::vector<VertexSet> targets(n);
  std::vector<std::vector<double>> cdf(n);
  for (Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Index j = 0; j < n; ++j)
      if (s(i, j) > 0.0) {
        acc += s(i, j);
        targets[i].push_back(j);
        cdf[i].push_back(acc);
      }
  }

  std::mt19937_64 rng(seed);
  WalkEstimate est;
  est.start = start;
  est.walks = walks;
  est.seed = seed;
  est.absorption = Vector::Zero(rd.count());
  double total_steps = 0.0;
  Index finished = 0;

  for (Index w = 0; w < walks; ++w) {
    Index at = start;
    Index steps = 0;
    while (cabal_of[at] < 0 && steps < max_steps) {
      const auto& c = cdf[at];
      double u = unit_uniform(rng) * c.back();
      auto it = std::upper_bound(c.begin(), c.end(), u);
      if (it == c.end()) --it;
      at = targets[at][static_cast<std::size_t>(it - c.begin())];
      ++steps;
    }
    if (cabal_of[at] < 0) {
      ++est.truncated;
      continue;
    }
    est.absorption(cabal_of[at]) += 1.0;
    total_steps += static_cast<double>(steps);
    ++finished;
  }
  if (finished > 0) {
    est.absorption /= static_cast<double>(finished);
    est.mean_hitting_time = total_steps / static_cast<double>(finished);
  }
  return est;
}

}  // namespace lapdyn
