#pragma once

#include "lapdyn/taxonomy.hpp"

#include <cstdint>

namespace lapdyn {

/// Monte Carlo estimate for walkers started at one vertex.
///
/// A walker at i steps to j with probability S(i, j), i.e. it moves against
/// the edge direction toward information sources, and stops on entering the
/// union of cabals.
struct WalkEstimate {
  Index start = 0;
  Index walks = 0;
  std::uint64_t seed = 0;
  Vector absorption;  // fraction of walkers that stopped in each reach's cabal
  double mean_hitting_time = 0.0;
  Index truncated = 0;  // walkers still running at max_steps (excluded from the averages)
};

WalkEstimate simulate_walks(const Matrix& s, const ReachDecomposition& rd, Index start, Index walks,
                            std::uint64_t seed, Index max_steps = 1'000'000);

}  // namespace lapdyn
