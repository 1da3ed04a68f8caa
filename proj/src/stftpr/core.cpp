#include "stftpr/core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "stftpr/errors.hpp"
#include "stftpr/rng.hpp"

namespace stftpr {

double phase_aligned_error(const Signal& truth, const Signal& estimate) {
  if (truth.size() != estimate.size())
    throw InvalidArgument("phase_aligned_error: length mismatch");
  const double est_norm = estimate.norm();
  if (est_norm == 0.0)
    throw InvalidArgument("phase_aligned_error: zero-norm estimate");
  // <estimate, truth> with the conjugate on the estimate.
  const cd inner = estimate.values().dot(truth.values());
  cd rot(1.0, 0.0);
  if (std::abs(inner) > 0.0) rot = inner / std::abs(inner);
  return (truth.values() - rot * estimate.values()).norm() / est_norm;
}

MagnitudeMeasurements add_noise(const MagnitudeMeasurements& clean,
                                double snr_db, std::uint64_t seed) {
  if (!clean.is_noise_free())
    throw InvalidArgument("add_noise: input already carries noise");
  if (std::isnan(snr_db)) throw InvalidArgument("add_noise: snr is NaN");
  if (std::isinf(snr_db) && snr_db > 0.0)
    return MagnitudeMeasurements(clean.grid(), MagnitudeMeasurements::NoNoise{},
                                 seed);
  if (std::isinf(snr_db)) throw InvalidArgument("add_noise: snr is -inf");

  const RealMat& grid = clean.grid();
  const double n2 = static_cast<double>(grid.size());
  const double energy = grid.squaredNorm();
  const double sigma2 = energy / (n2 * std::pow(10.0, snr_db / 10.0));
  const double sigma = std::sqrt(sigma2);

  Rng rng(seed);
  RealMat noisy = grid;
  // Row-major fill order keeps files and tests stable across Eigen storage.
  for (Eigen::Index m = 0; m < noisy.rows(); ++m)
    for (Eigen::Index k = 0; k < noisy.cols(); ++k)
      noisy(m, k) += sigma * rng.normal();
  return MagnitudeMeasurements(std::move(noisy),
                               MagnitudeMeasurements::GaussianNoise{sigma},
                               seed);
}

namespace {

Eigenpair dense_leading(const Mat& x) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(x);
  const Eigen::Index last = x.rows() - 1;
  Eigenpair out;
  out.value = solver.eigenvalues()[last];
  out.vector = solver.eigenvectors().col(last);
  return out;
}

}  // namespace

Eigenpair leading_eigenpair(const Mat& x) {
  const Eigen::Index n = x.rows();
  if (n == 0 || x.cols() != n)
    throw InvalidArgument("leading_eigenpair: square matrix required");

  // Shift so all eigenvalues of x + s I are nonnegative and the target is
  // the largest in magnitude.
  double shift = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    shift = std::max(shift, x.col(j).cwiseAbs().sum());
  const double fro = x.norm();
  if (fro == 0.0) {
    Vec v = Vec::Zero(n);
    v[0] = 1.0;
    return {0.0, v};
  }

  // Deterministic start with entry-dependent phase; avoids starting
  // orthogonal to the dominant eigenvector on structured matrices.
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v[i] = std::polar(1.0, 0.37 * static_cast<double>(i + 1));
  v.normalize();

  const int max_iters = 10 * static_cast<int>(n);
  const double angle_tol = 1e-10;
  bool converged = false;
  for (int it = 0; it < max_iters; ++it) {
    Vec w = x * v + shift * v;
    const double wn = w.norm();
    if (wn == 0.0) break;
    w /= wn;
    const double align = std::abs(w.dot(v));
    v = w;
    if (1.0 - align <= angle_tol) {
      converged = true;
      break;
    }
  }

  if (converged) {
    const double lambda = std::real(v.dot(x * v));
    if ((x * v - lambda * v).norm() <= 1e-8 * fro) return {lambda, v};
  }
  return dense_leading(x);
}

}  // namespace stftpr
