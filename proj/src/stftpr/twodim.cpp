#include "stftpr/twodim.hpp"

#include <cmath>

#include "stftpr/core.hpp"
#include "stftpr/errors.hpp"
#include "stftpr/fft.hpp"
#include "stftpr/rng.hpp"

namespace stftpr {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
  std::ptrdiff_t r = i % static_cast<std::ptrdiff_t>(n);
  if (r < 0) r += static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(r);
}

// 2D DFT (rows then columns) of an N x N array, in place.
void dft2_inplace(Mat& a, bool inverse) {
  const std::size_t n = static_cast<std::size_t>(a.rows());
  std::vector<cd> buf(n);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) buf[j] = a(r, static_cast<Eigen::Index>(j));
    if (inverse)
      inverse_dft_inplace(buf.data(), n);
    else
      dft_inplace(buf.data(), n);
    for (std::size_t j = 0; j < n; ++j) a(r, static_cast<Eigen::Index>(j)) = buf[j];
  }
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (std::size_t j = 0; j < n; ++j) buf[j] = a(static_cast<Eigen::Index>(j), c);
    if (inverse)
      inverse_dft_inplace(buf.data(), n);
    else
      dft_inplace(buf.data(), n);
    for (std::size_t j = 0; j < n; ++j) a(static_cast<Eigen::Index>(j), c) = buf[j];
  }
}

}  // namespace

Signal2D::Signal2D(Mat values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols() || values_.rows() < 2)
    throw InvalidArgument("2D signal must be square with n >= 2");
}

Signal2D Signal2D::random(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Mat v(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j) v(i, j) = rng.complex_normal();
  return Signal2D(std::move(v));
}

bool Signal2D::is_non_vanishing(double threshold) const {
  for (Eigen::Index i = 0; i < values_.rows(); ++i)
    for (Eigen::Index j = 0; j < values_.cols(); ++j)
      if (std::abs(values_(i, j)) <= threshold) return false;
  return true;
}

Window2D::Window2D(Mat values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols() || values_.rows() < 1)
    throw InvalidArgument("2D window must be square");
}

Window2D Window2D::product(const Window& u, const Window& v) {
  if (u.size() != v.size())
    throw InvalidArgument("2D product window requires equal lengths");
  Mat m = u.values() * v.values().transpose();
  return Window2D(std::move(m));
}

cd Window2D::at_mod(std::ptrdiff_t i, std::ptrdiff_t j) const {
  const std::size_t n = size();
  return values_(static_cast<Eigen::Index>(wrap(i, n)),
                 static_cast<Eigen::Index>(wrap(j, n)));
}

Stft2Grid stft2_forward(const Signal2D& x, const Window2D& g) {
  const std::size_t n = x.size();
  if (g.size() != n) throw InvalidArgument("stft2_forward: shape mismatch");
  const Eigen::Index ni = static_cast<Eigen::Index>(n);

  Stft2Grid out;
  out.n = n;
  out.values.resize(ni * ni, ni * ni);
  Mat windowed(ni, ni);
  for (std::size_t m1 = 0; m1 < n; ++m1) {
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      for (std::size_t n1 = 0; n1 < n; ++n1)
        for (std::size_t n2 = 0; n2 < n; ++n2)
          windowed(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2)) =
              x.values()(static_cast<Eigen::Index>(n1),
                         static_cast<Eigen::Index>(n2)) *
              g.at_mod(static_cast<std::ptrdiff_t>(m1) -
                           static_cast<std::ptrdiff_t>(n1),
                       static_cast<std::ptrdiff_t>(m2) -
                           static_cast<std::ptrdiff_t>(n2));
      Mat spec = windowed;
      dft2_inplace(spec, false);
      const Eigen::Index row = static_cast<Eigen::Index>(m1 * n + m2);
      for (std::size_t k1 = 0; k1 < n; ++k1)
        for (std::size_t k2 = 0; k2 < n; ++k2)
          out.values(row, static_cast<Eigen::Index>(k1 * n + k2)) =
              spec(static_cast<Eigen::Index>(k1), static_cast<Eigen::Index>(k2));
    }
  }
  return out;
}

Measurements2D measure2(const Signal2D& x, const Window2D& g) {
  const Stft2Grid grid = stft2_forward(x, g);
  return {grid.values.cwiseAbs2(), grid.n};
}

Autocorrelation2D build_autocorrelation2(const Window2D& g, std::size_t ell1,
                                         std::size_t ell2) {
  const std::size_t n = g.size();
  if (ell1 >= n || ell2 >= n)
    throw InvalidArgument("2D autocorrelation shift out of range");
  Autocorrelation2D a;
  a.ell1 = ell1;
  a.ell2 = ell2;
  a.column.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t m1 = 0; m1 < n; ++m1)
    for (std::size_t m2 = 0; m2 < n; ++m2)
      a.column(static_cast<Eigen::Index>(m1), static_cast<Eigen::Index>(m2)) =
          g.at_mod(static_cast<std::ptrdiff_t>(m1),
                   static_cast<std::ptrdiff_t>(m2)) *
          std::conj(g.at_mod(
              static_cast<std::ptrdiff_t>(m1) - static_cast<std::ptrdiff_t>(ell1),
              static_cast<std::ptrdiff_t>(m2) -
                  static_cast<std::ptrdiff_t>(ell2)));
  a.spectrum = a.column;
  dft2_inplace(a.spectrum, false);
  return a;
}

Mat solve_circulant2(const Autocorrelation2D& autocorr, const Mat& rhs,
                     double tol) {
  const std::size_t n = static_cast<std::size_t>(autocorr.column.rows());
  if (rhs.rows() != autocorr.column.rows() || rhs.cols() != autocorr.column.cols())
    throw InvalidArgument("solve_circulant2: shape mismatch");

  const double max_abs = autocorr.spectrum.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < autocorr.spectrum.rows(); ++i)
    for (Eigen::Index j = 0; j < autocorr.spectrum.cols(); ++j)
      if (std::abs(autocorr.spectrum(i, j)) <= tol * max_abs)
        throw WindowInadmissible(
            autocorr.ell1 * n + autocorr.ell2,
            static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j),
            max_abs > 0.0 ? std::abs(autocorr.spectrum(i, j)) / max_abs : 0.0);

  Mat v = rhs;
  dft2_inplace(v, false);
  v = v.cwiseQuotient(autocorr.spectrum);
  dft2_inplace(v, true);
  return v / static_cast<double>(n * n);
}

Mat apply_circulant2(const Autocorrelation2D& autocorr, const Mat& x) {
  Mat v = x;
  dft2_inplace(v, false);
  v = v.cwiseProduct(autocorr.spectrum);
  dft2_inplace(v, true);
  return v;
}

namespace {

// Correlation grid x_{l1,l2}[n1,n2] for every shift pair, from the 2D
// magnitude-DFT of the measurements.
Mat correlation_for(const Measurements2D& y, const Window2D& g,
                    std::size_t ell1, std::size_t ell2) {
  const std::size_t n = y.n;
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  // Z[m1,m2; l1,l2] for the fixed shift pair: a plain double sum over
  // (k1,k2) per (m1,m2) row of the measurement grid.
  Mat z(ni, ni);
  for (std::size_t m1 = 0; m1 < n; ++m1) {
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      cd acc(0.0, 0.0);
      const Eigen::Index row = static_cast<Eigen::Index>(m1 * n + m2);
      for (std::size_t k1 = 0; k1 < n; ++k1)
        for (std::size_t k2 = 0; k2 < n; ++k2)
          acc += y.grid(row, static_cast<Eigen::Index>(k1 * n + k2)) *
                 std::polar(1.0, -2.0 * M_PI *
                                     static_cast<double>(k1 * ell1 + k2 * ell2) /
                                     static_cast<double>(n));
      z(static_cast<Eigen::Index>(m1), static_cast<Eigen::Index>(m2)) = acc;
    }
  }
  const Autocorrelation2D a = build_autocorrelation2(g, ell1, ell2);
  return solve_circulant2(a, z);
}

}  // namespace

Ls2Result recover2_ls(const Measurements2D& y, const Window2D& g) {
  const std::size_t n = y.n;
  if (g.size() != n) throw InvalidArgument("recover2_ls: shape mismatch");

  Ls2Result result;
  for (std::size_t ell1 = 0; ell1 < n; ++ell1)
    for (std::size_t ell2 = 0; ell2 < n; ++ell2)
      result.correlations[{ell1, ell2}] = correlation_for(y, g, ell1, ell2);

  if (n > 8) return result;  // lift not materialized beyond desk scale

  // Lift entry (p, q) with p = n1 N + n2, q = ((n1+l1) N + (n2+l2)) mod
  // pattern holds x[n1,n2] conj(x[(n1+l1),(n2+l2)]).
  const Eigen::Index d = static_cast<Eigen::Index>(n * n);
  LiftedMatrix lifted(static_cast<std::size_t>(d));
  Mat& lm = lifted.matrix();
  for (const auto& [shifts, corr] : result.correlations) {
    const auto [ell1, ell2] = shifts;
    for (std::size_t n1 = 0; n1 < n; ++n1)
      for (std::size_t n2 = 0; n2 < n; ++n2)
        lm(static_cast<Eigen::Index>(n1 * n + n2),
           static_cast<Eigen::Index>(((n1 + ell1) % n) * n + (n2 + ell2) % n)) =
            corr(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2));
  }
  lifted.hermitize();

  const Eigenpair top = leading_eigenpair(lifted.matrix());
  result.lambda_max = top.value;
  if (top.value > 0.0) {
    Mat est(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const double scale = std::sqrt(top.value);
    for (std::size_t n1 = 0; n1 < n; ++n1)
      for (std::size_t n2 = 0; n2 < n; ++n2)
        est(static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n2)) =
            scale * top.vector[static_cast<Eigen::Index>(n1 * n + n2)];
    result.estimate = Signal2D(std::move(est));
  }
  return result;
}

Signal2D recover2_algebraic(const Measurements2D& y, const Window2D& g) {
  const std::size_t n = y.n;
  if (g.size() != n) throw InvalidArgument("recover2_algebraic: shape mismatch");
  const Eigen::Index ni = static_cast<Eigen::Index>(n);

  const Mat x00 = correlation_for(y, g, 0, 0);  // |x[n1,n2]|^2
  const Mat x01 = correlation_for(y, g, 0, 1);  // x[n1,n2] conj(x[n1,n2+1])
  const Mat x10 = correlation_for(y, g, 1, 0);  // x[n1,n2] conj(x[n1+1,n2])

  double peak = 0.0;
  for (Eigen::Index i = 0; i < ni; ++i)
    for (Eigen::Index j = 0; j < ni; ++j)
      peak = std::max(peak, std::abs(x00(i, j)));
  const double threshold = 1e-12 * std::sqrt(peak);

  if (x00(0, 0).real() < 0.0)
    throw InvalidArgument(
        "recover2_algebraic: negative squared magnitude at (0,0)");

  Mat est = Mat::Zero(ni, ni);
  est(0, 0) = std::sqrt(x00(0, 0).real());

  const auto step = [&](cd current, cd correlation, std::size_t flat_index) {
    if (std::abs(current) <= threshold) throw VanishingSignal(flat_index);
    return std::conj(correlation / current);
  };

  // First row via (0,1), then each next row seeded through (1,0).
  for (std::size_t j = 0; j + 1 < n; ++j)
    est(0, static_cast<Eigen::Index>(j + 1)) =
        step(est(0, static_cast<Eigen::Index>(j)),
             x01(0, static_cast<Eigen::Index>(j)), j);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    est(static_cast<Eigen::Index>(i + 1), 0) =
        step(est(static_cast<Eigen::Index>(i), 0),
             x10(static_cast<Eigen::Index>(i), 0), i * n);
    for (std::size_t j = 0; j + 1 < n; ++j)
      est(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(j + 1)) =
          step(est(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(j)),
               x01(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(j)),
               (i + 1) * n + j);
  }
  return Signal2D(std::move(est));
}

double phase_aligned_error2(const Signal2D& truth, const Signal2D& estimate) {
  if (truth.size() != estimate.size())
    throw InvalidArgument("phase_aligned_error2: shape mismatch");
  const double est_norm = estimate.values().norm();
  if (est_norm == 0.0)
    throw InvalidArgument("phase_aligned_error2: zero-norm estimate");
  cd inner(0.0, 0.0);
  for (Eigen::Index i = 0; i < truth.values().rows(); ++i)
    for (Eigen::Index j = 0; j < truth.values().cols(); ++j)
      inner += std::conj(estimate.values()(i, j)) * truth.values()(i, j);
  cd rot(1.0, 0.0);
  if (std::abs(inner) > 0.0) rot = inner / std::abs(inner);
  return (truth.values() - rot * estimate.values()).norm() / est_norm;
}

}  // namespace stftpr
