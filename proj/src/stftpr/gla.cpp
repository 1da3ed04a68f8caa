#include "stftpr/gla.hpp"

#include <cmath>

#include "stftpr/errors.hpp"
#include "stftpr/rng.hpp"
#include "stftpr/transforms.hpp"

namespace stftpr {

GlaResult recover_gla(const MagnitudeMeasurements& y, const Window& g,
                      const GlaConfig& config) {
  const std::size_t n = y.size();
  if (g.size() != n) throw InvalidArgument("recover_gla: length mismatch");
  if (config.max_iters < 1) throw InvalidArgument("recover_gla: max_iters >= 1");
  if (!(config.tol > 0.0)) throw InvalidArgument("recover_gla: tol > 0");
  if (config.init && config.init->size() != n)
    throw InvalidArgument("recover_gla: init length mismatch");

  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  RealMat target = y.grid().cwiseMax(0.0).cwiseSqrt();

  Signal x = config.init ? *config.init : Signal::random(n, config.seed);
  GlaResult result{x};
  Mat replaced(ni, ni);

  // Evaluates the spectrogram misfit at `s` and fills `replaced` with the
  // magnitude-substituted grid.
  const auto project_magnitudes = [&](const Signal& s) {
    const StftGrid grid = stft_forward(s, g);
    double objective = 0.0;
    for (Eigen::Index m = 0; m < ni; ++m) {
      for (Eigen::Index k = 0; k < ni; ++k) {
        const cd v = grid.values(m, k);
        const double a = std::abs(v);
        const double d = a - target(m, k);
        objective += d * d;
        const cd phase = a > 0.0 ? v / a : cd(1.0, 0.0);
        replaced(m, k) = target(m, k) * phase;
      }
    }
    return objective;
  };

  for (int t = 0; t < config.max_iters; ++t) {
    result.objective_history.push_back(project_magnitudes(x));
    Signal next = istft_ls({replaced}, g);
    result.final_diff = (next.values() - x.values()).norm();
    x = std::move(next);
    result.iterations = t + 1;
    if (result.final_diff < config.tol) break;
  }
  result.objective_history.push_back(project_magnitudes(x));
  result.estimate = x;
  return result;
}

GlaResult recover_gla_restarts(const MagnitudeMeasurements& y, const Window& g,
                               const GlaConfig& config, int restarts) {
  if (restarts < 1) throw InvalidArgument("recover_gla_restarts: restarts >= 1");
  std::optional<GlaResult> best;
  for (int r = 0; r < restarts; ++r) {
    GlaConfig cfg = config;
    if (!cfg.init)
      cfg.seed = derive_seed(config.seed, 0xA11CE5EDULL,
                             static_cast<std::uint64_t>(r));
    GlaResult run = recover_gla(y, g, cfg);
    if (!best || run.objective_history.back() < best->objective_history.back())
      best = std::move(run);
    if (cfg.init) break;  // deterministic start, restarts are identical
  }
  return *best;
}

}  // namespace stftpr
