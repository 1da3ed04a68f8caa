/* gla.hpp - Griffin-Lim baseline: alternate between the measured
 * magnitudes and the range of the STFT via least-squares synthesis. */

#ifndef STFTPR_GLA_HPP
#define STFTPR_GLA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stftpr/types.hpp"

namespace stftpr {

struct GlaConfig {
  int max_iters = 500;
  double tol = 1e-6;  // stop when ||x_{t+1} - x_t|| < tol
  // Random complex Gaussian init from this seed unless an explicit start
  // signal is provided.
  std::uint64_t seed = 0;
  std::optional<Signal> init;
};

struct GlaResult {
  Signal estimate;
  int iterations = 0;
  double final_diff = 0.0;
  // sum_{m,k} (|STFT(x_t)[m,k]| - sqrt(Y[m,k]))^2 per iteration;
  // non-increasing by the classic alternating-projection argument.
  std::vector<double> objective_history;
};

// Negative measurement entries (noise) are clipped to zero before the
// square root; phase(0) is defined as 1 so the update is total.
GlaResult recover_gla(const MagnitudeMeasurements& y, const Window& g,
                      const GlaConfig& config = {});

// Runs `restarts` independent runs (seeds derived from config.seed) and
// returns the one with the smallest final objective.
GlaResult recover_gla_restarts(const MagnitudeMeasurements& y, const Window& g,
                               const GlaConfig& config, int restarts);

}  // namespace stftpr

#endif
