#include "stftpr/circulant.hpp"

#include <cmath>
#include <numeric>

#include "stftpr/errors.hpp"
#include "stftpr/fft.hpp"

namespace stftpr {

WindowAutocorrelation build_autocorrelation(const Window& g, std::size_t ell) {
  const std::size_t n = g.size();
  if (ell >= n) throw InvalidArgument("autocorrelation shift out of range");

  WindowAutocorrelation a;
  a.ell = ell;
  a.column.resize(static_cast<Eigen::Index>(n));
  std::vector<cd> col(n);
  for (std::size_t m = 0; m < n; ++m) {
    // Conjugate on the shifted factor; for real windows this coincides
    // with the plain product.
    col[m] = g.at_mod(static_cast<std::ptrdiff_t>(m)) *
             std::conj(g.at_mod(static_cast<std::ptrdiff_t>(m) -
                                static_cast<std::ptrdiff_t>(ell)));
    a.column[static_cast<Eigen::Index>(m)] = col[m];
  }
  dft_inplace(col.data(), n);
  a.spectrum.resize(static_cast<Eigen::Index>(n));
  for (std::size_t m = 0; m < n; ++m)
    a.spectrum[static_cast<Eigen::Index>(m)] = col[m];
  return a;
}

AdmissibilityReport check_admissibility(const Window& g,
                                        const std::vector<std::size_t>& ells,
                                        double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("admissibility tolerance must be > 0");
  AdmissibilityReport report;
  report.tolerance = tol;
  report.overall = true;
  for (std::size_t ell : ells) {
    const WindowAutocorrelation a = build_autocorrelation(g, ell);
    AdmissibilityEntry entry;
    entry.min_abs_spectrum = a.spectrum.cwiseAbs().minCoeff();
    entry.max_abs_spectrum = a.spectrum.cwiseAbs().maxCoeff();
    entry.invertible = entry.min_abs_spectrum > tol * entry.max_abs_spectrum;
    report.overall = report.overall && entry.invertible;
    report.per_ell[ell] = entry;
  }
  return report;
}

bool rect_admissibility_predicate(std::size_t n, std::size_t w, RectMode mode) {
  if (w < 1 || w > n)
    throw InvalidArgument("rectangular predicate requires 1 <= w <= n");
  if (mode == RectMode::kFull) {
    if (!(2 * w > n && w < n)) return false;
    for (std::size_t v = 2 * w - n; v <= w; ++v)
      if (std::gcd(n, v) != 1) return false;
    return true;
  }
  if (!(w >= 2 && w <= n - 1)) return false;
  return std::gcd(n, w) == 1 && std::gcd(n, w - 1) == 1;
}

Vec solve_circulant(const WindowAutocorrelation& autocorr, const Vec& rhs,
                    double tol) {
  const std::size_t n = static_cast<std::size_t>(autocorr.column.size());
  if (static_cast<std::size_t>(rhs.size()) != n)
    throw InvalidArgument("solve_circulant: rhs length mismatch");

  const double max_abs = autocorr.spectrum.cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(autocorr.spectrum[static_cast<Eigen::Index>(i)]) <=
        tol * max_abs) {
      const double rel =
          max_abs > 0.0
              ? std::abs(autocorr.spectrum[static_cast<Eigen::Index>(i)]) / max_abs
              : 0.0;
      throw WindowInadmissible(autocorr.ell, i, rel);
    }
  }

  std::vector<cd> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rhs[static_cast<Eigen::Index>(i)];
  dft_inplace(v.data(), n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] /= autocorr.spectrum[static_cast<Eigen::Index>(i)];
  inverse_dft_inplace(v.data(), n);

  Vec x(static_cast<Eigen::Index>(n));
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    x[static_cast<Eigen::Index>(i)] = v[i] * inv_n;
  return x;
}

Vec apply_circulant(const WindowAutocorrelation& autocorr, const Vec& x) {
  const std::size_t n = static_cast<std::size_t>(autocorr.column.size());
  if (static_cast<std::size_t>(x.size()) != n)
    throw InvalidArgument("apply_circulant: length mismatch");
  std::vector<cd> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = x[static_cast<Eigen::Index>(i)];
  dft_inplace(v.data(), n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] *= autocorr.spectrum[static_cast<Eigen::Index>(i)];
  inverse_dft_inplace(v.data(), n);
  Vec out(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

}  // namespace stftpr
