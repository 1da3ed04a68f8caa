#include "stftpr/types.hpp"

#include <cmath>

#include "stftpr/errors.hpp"
#include "stftpr/rng.hpp"

namespace stftpr {

Signal::Signal(Vec values) : values_(std::move(values)) {
  if (values_.size() < 2)
    throw InvalidArgument("signal length must be at least 2");
}

Signal Signal::zero(std::size_t n) {
  return Signal(Vec::Zero(static_cast<Eigen::Index>(n)));
}

Signal Signal::random(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Vec v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.complex_normal();
  return Signal(std::move(v));
}

bool Signal::is_non_vanishing() const {
  for (Eigen::Index i = 0; i < values_.size(); ++i)
    if (std::abs(values_[i]) <= 0.0) return false;
  return true;
}

bool Signal::is_non_vanishing(double threshold) const {
  for (Eigen::Index i = 0; i < values_.size(); ++i)
    if (std::abs(values_[i]) <= threshold) return false;
  return true;
}

Window Window::rectangular(std::size_t n, std::size_t w) {
  if (n == 0) throw InvalidArgument("window length must be positive");
  if (w < 1 || w > n)
    throw InvalidArgument("rectangular window requires 1 <= w <= n");
  Vec v = Vec::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < w; ++i) v[static_cast<Eigen::Index>(i)] = 1.0;
  return Window(std::move(v), Rectangular{w});
}

Window Window::gaussian(std::size_t n, double sigma) {
  if (n == 0) throw InvalidArgument("window length must be positive");
  if (!(sigma > 0.0)) throw InvalidArgument("gaussian window requires sigma > 0");
  // exp(-m^2/sigma^2) on the symmetric index m in {-floor(n/2), ...,
  // ceil(n/2)-1}, folded into {0, ..., n-1}.
  Vec v(static_cast<Eigen::Index>(n));
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>((n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::ptrdiff_t m = static_cast<std::ptrdiff_t>(i);
    if (m >= half) m -= static_cast<std::ptrdiff_t>(n);
    const double t = static_cast<double>(m) / sigma;
    v[static_cast<Eigen::Index>(i)] = std::exp(-t * t);
  }
  return Window(std::move(v), Gaussian{sigma});
}

Window Window::custom(Vec values) {
  if (values.size() == 0) throw InvalidArgument("window length must be positive");
  return Window(std::move(values), Custom{});
}

cd Window::at_mod(std::ptrdiff_t idx) const {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(size());
  std::ptrdiff_t r = idx % n;
  if (r < 0) r += n;
  return values_[static_cast<Eigen::Index>(r)];
}

std::string Window::describe() const {
  if (const auto* r = std::get_if<Rectangular>(&kind_))
    return "rect(w=" + std::to_string(r->w) + ")";
  if (const auto* g = std::get_if<Gaussian>(&kind_)) {
    std::string s = std::to_string(g->sigma);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return "gaussian(sigma=" + s + ")";
  }
  return "custom";
}

double MagnitudeMeasurements::noise_sigma() const {
  if (const auto* g = std::get_if<GaussianNoise>(&noise_)) return g->sigma;
  return 0.0;
}

LiftedMatrix LiftedMatrix::from_diagonals(std::size_t n,
                                          const DiagonalCorrelations& diags) {
  LiftedMatrix lifted(n);
  for (const auto& [ell, v] : diags.entries) lifted.set_diagonal(ell, v);
  return lifted;
}

Vec LiftedMatrix::diagonal(std::size_t ell) const {
  const std::size_t n = size();
  Vec v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    v[static_cast<Eigen::Index>(i)] =
        m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>((i + ell) % n));
  return v;
}

void LiftedMatrix::set_diagonal(std::size_t ell, const Vec& v) {
  const std::size_t n = size();
  if (static_cast<std::size_t>(v.size()) != n)
    throw InvalidArgument("diagonal length mismatch");
  if (ell >= n) throw InvalidArgument("diagonal index out of range");
  for (std::size_t i = 0; i < n; ++i)
    m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>((i + ell) % n)) =
        v[static_cast<Eigen::Index>(i)];
}

void LiftedMatrix::hermitize() {
  const Eigen::Index n = m_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    m_(i, i) = cd(m_(i, i).real(), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const cd h = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = h;
      m_(j, i) = std::conj(h);
    }
  }
}

bool LiftedMatrix::is_hermitian() const {
  const Eigen::Index n = m_.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j)
      if (m_(i, j) != std::conj(m_(j, i))) return false;
  return true;
}

}  // namespace stftpr
