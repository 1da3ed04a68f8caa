#include "stftpr/recover.hpp"

#include <cmath>
#include <numeric>

#include "stftpr/circulant.hpp"
#include "stftpr/core.hpp"
#include "stftpr/errors.hpp"
#include "stftpr/transforms.hpp"

namespace stftpr {

namespace {

std::vector<std::size_t> all_shifts(std::size_t n) {
  std::vector<std::size_t> ells(n);
  std::iota(ells.begin(), ells.end(), std::size_t{0});
  return ells;
}

void require_admissible(const Window& g, const std::vector<std::size_t>& ells) {
  const AdmissibilityReport report = check_admissibility(g, ells);
  if (report.overall) return;
  for (const auto& [ell, entry] : report.per_ell) {
    if (!entry.invertible) {
      const double rel = entry.max_abs_spectrum > 0.0
                             ? entry.min_abs_spectrum / entry.max_abs_spectrum
                             : 0.0;
      throw WindowInadmissible(ell, 0, rel);
    }
  }
}

}  // namespace

LsRecoveryResult recover_ls(const MagnitudeMeasurements& y, const Window& g) {
  const std::size_t n = y.size();
  if (g.size() != n) throw InvalidArgument("recover_ls: length mismatch");
  require_admissible(g, all_shifts(n));

  const MagnitudeDft z = magnitude_dft(y);
  LiftedMatrix lifted(n);
  std::vector<double> residuals(n, 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t ell = 0; ell < n; ++ell) {
    const WindowAutocorrelation a = build_autocorrelation(g, ell);
    const Vec z_ell = z.values.col(static_cast<Eigen::Index>(ell));
    const Vec x_ell = solve_circulant(a, z_ell);
    residuals[ell] = (apply_circulant(a, x_ell) - inv_n * z_ell).norm();
    lifted.set_diagonal(ell, x_ell);
  }
  lifted.hermitize();

  const Eigenpair top = leading_eigenpair(lifted.matrix());
  LsRecoveryResult result{Signal::zero(n), lifted, top.value, residuals, true};
  if (top.value > 0.0) {
    result.estimate = Signal(std::sqrt(top.value) * top.vector);
  } else {
    result.rank_one_found = false;
  }
  return result;
}

Signal recover_algebraic(const MagnitudeMeasurements& y, const Window& g,
                         bool nonnegative) {
  const std::size_t n = y.size();
  if (g.size() != n) throw InvalidArgument("recover_algebraic: length mismatch");
  require_admissible(g, {0, 1});

  // Only the first two magnitude-DFT columns are needed: Z[m,l] for
  // l in {0,1} is a plain sum over k against one complex exponential.
  const RealMat& grid = y.grid();
  Vec z0(static_cast<Eigen::Index>(n)), z1(static_cast<Eigen::Index>(n));
  for (std::size_t m = 0; m < n; ++m) {
    cd acc0(0.0, 0.0), acc1(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double v = grid(static_cast<Eigen::Index>(m),
                            static_cast<Eigen::Index>(k));
      acc0 += v;
      acc1 += v * std::polar(1.0, -2.0 * M_PI * static_cast<double>(k) /
                                      static_cast<double>(n));
    }
    z0[static_cast<Eigen::Index>(m)] = acc0;
    z1[static_cast<Eigen::Index>(m)] = acc1;
  }

  const Vec x0 = solve_circulant(build_autocorrelation(g, 0), z0);
  const double first = x0[0].real();
  if (first < 0.0)
    throw InvalidArgument(
        "recover_algebraic: negative squared magnitude at entry 0 "
        "(noise artifact)");

  if (nonnegative) {
    Vec est(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < est.size(); ++i)
      est[i] = std::sqrt(std::max(x0[i].real(), 0.0));
    return Signal(std::move(est));
  }

  const Vec x1 = solve_circulant(build_autocorrelation(g, 1), z1);

  // Recursion scale: the largest signal magnitude, known from x0 up front.
  double peak_sq = 0.0;
  for (Eigen::Index i = 0; i < x0.size(); ++i)
    peak_sq = std::max(peak_sq, std::abs(x0[i]));
  const double threshold = 1e-12 * std::sqrt(peak_sq);

  Vec est(static_cast<Eigen::Index>(n));
  est[0] = std::sqrt(first);  // global phase fixed to the nonnegative root
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const cd cur = est[static_cast<Eigen::Index>(i)];
    if (std::abs(cur) <= threshold) throw VanishingSignal(i);
    est[static_cast<Eigen::Index>(i + 1)] =
        std::conj(x1[static_cast<Eigen::Index>(i)] / cur);
  }
  return Signal(std::move(est));
}

}  // namespace stftpr
