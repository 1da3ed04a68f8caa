#include "stftpr/sdp.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <ostream>

#include "stftpr/circulant.hpp"
#include "stftpr/core.hpp"
#include "stftpr/errors.hpp"
#include "stftpr/fft.hpp"
#include "stftpr/transforms.hpp"

namespace stftpr {

double default_eta(double sigma, std::size_t n) {
  if (sigma < 0.0) throw InvalidArgument("default_eta: negative sigma");
  return 1.2 * sigma * static_cast<double>(n);
}

Mat psd_project(const Mat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian);
  Eigen::VectorXd w = solver.eigenvalues().cwiseMax(0.0);
  return solver.eigenvectors() * w.asDiagonal() *
         solver.eigenvectors().adjoint();
}

namespace {

// Unitary DFT and its inverse (norm preserving).
Vec unitary_dft(const Vec& v) {
  std::vector<cd> buf(v.data(), v.data() + v.size());
  dft_inplace(buf.data(), buf.size());
  Vec out(v.size());
  const double s = 1.0 / std::sqrt(static_cast<double>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = buf[i] * s;
  return out;
}

Vec unitary_idft(const Vec& v) {
  std::vector<cd> buf(v.data(), v.data() + v.size());
  inverse_dft_inplace(buf.data(), buf.size());
  Vec out(v.size());
  const double s = std::sqrt(static_cast<double>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = buf[i] * s;
  return out;
}

// One measurement-fit constraint ||sigma .* d - b|| <= eta expressed in
// the DFT eigenbasis, with the operator pre-scaled to unit spectral norm.
struct ShiftConstraint {
  std::size_t ell = 0;
  Vec sigma;         // normalized eigenvalues of N G_l
  Vec b;             // normalized measurement column, DFT coordinates
  double eta = 0.0;  // normalized budget
  std::vector<bool> zero_bin;
  double fixed_sq = 0.0;  // sum |b_i|^2 over structurally zero bins
};

// Projection of w onto {d : ||sigma .* d - b|| <= eta}.  Zero bins of the
// spectrum contribute a fixed residual; the remaining budget is spent on
// the range component through a single Lagrange multiplier found by a
// safeguarded Newton iteration.
Vec project_shift(const ShiftConstraint& c, const Vec& w) {
  const Eigen::Index n = w.size();
  const double eta_eff_sq = c.eta * c.eta - c.fixed_sq;

  if (eta_eff_sq <= 0.0) {
    // Empty or degenerate ball: match the range component exactly.  This
    // is the least-infeasible choice when fixed_sq exceeds the budget.
    Vec d = w;
    for (Eigen::Index i = 0; i < n; ++i)
      if (!c.zero_bin[static_cast<std::size_t>(i)]) d[i] = c.b[i] / c.sigma[i];
    return d;
  }

  double mismatch = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (!c.zero_bin[static_cast<std::size_t>(i)])
      mismatch += std::norm(c.sigma[i] * w[i] - c.b[i]);
  if (mismatch <= eta_eff_sq) return w;

  // phi(mu) = sum a_i / (1 + mu t_i)^2 - eta_eff_sq is convex and
  // decreasing, so Newton from mu = 0 converges monotonically.
  double mu = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    double f = -eta_eff_sq;
    double fp = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (c.zero_bin[static_cast<std::size_t>(i)]) continue;
      const double a = std::norm(c.sigma[i] * w[i] - c.b[i]);
      const double t = std::norm(c.sigma[i]);
      const double den = 1.0 + mu * t;
      f += a / (den * den);
      fp -= 2.0 * a * t / (den * den * den);
    }
    if (std::abs(f) <= 1e-15 * std::max(eta_eff_sq, 1.0)) break;
    if (fp == 0.0) break;
    mu -= f / fp;
    if (mu < 0.0) mu = 0.0;
  }

  Vec d = w;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (c.zero_bin[static_cast<std::size_t>(i)]) continue;
    const double t = std::norm(c.sigma[i]);
    d[i] = (w[i] + mu * std::conj(c.sigma[i]) * c.b[i]) / (1.0 + mu * t);
  }
  return d;
}

}  // namespace

SdpSolution recover_sdp(const MagnitudeMeasurements& y, const Window& g,
                        const std::vector<std::size_t>& lambda_set,
                        const std::map<std::size_t, double>& eta,
                        const SdpOptions& options) {
  const std::size_t n = y.size();
  if (g.size() != n) throw InvalidArgument("recover_sdp: length mismatch");
  if (n > SdpProblemSizeLimit::kMaxN)
    throw InvalidArgument("recover_sdp: problem size exceeds the solver bound");
  if (lambda_set.empty()) throw InvalidArgument("recover_sdp: empty shift set");

  SdpSolution sol{LiftedMatrix(n), Signal::zero(n)};
  bool has_dc = false;
  for (std::size_t ell : lambda_set) {
    if (ell >= n) throw InvalidArgument("recover_sdp: shift out of range");
    if (ell == 0) has_dc = true;
    auto it = eta.find(ell);
    if (it == eta.end())
      throw InvalidArgument("recover_sdp: missing eta for shift " +
                            std::to_string(ell));
    if (it->second < 0.0)
      throw InvalidArgument("recover_sdp: negative eta");
  }
  if (!has_dc)
    sol.warnings.push_back(
        "shift 0 not in the constraint set; magnitudes are unconstrained");

  const MagnitudeDft z = magnitude_dft(y);
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  const double nd = static_cast<double>(n);

  std::vector<ShiftConstraint> constraints;
  double z_norm_sq = 0.0;
  for (std::size_t ell : lambda_set) {
    const WindowAutocorrelation a = build_autocorrelation(g, ell);
    ShiftConstraint c;
    c.ell = ell;
    const Vec z_ell = z.values.col(static_cast<Eigen::Index>(ell));
    z_norm_sq += z_ell.squaredNorm();
    Vec sigma_raw = nd * a.spectrum;  // eigenvalues of N G_l
    const double scale = std::max(sigma_raw.cwiseAbs().maxCoeff(), 1e-300);
    c.sigma = sigma_raw / scale;
    c.b = unitary_dft(z_ell) / scale;
    c.eta = eta.at(ell) / scale;
    c.zero_bin.assign(n, false);
    for (Eigen::Index i = 0; i < ni; ++i) {
      if (std::abs(c.sigma[i]) <= kAdmissibilityTol) {
        c.zero_bin[static_cast<std::size_t>(i)] = true;
        c.fixed_sq += std::norm(c.b[i]);
      }
    }
    constraints.push_back(std::move(c));
  }
  const double z_scale = std::sqrt(z_norm_sq);

  const double t = options.prox_scale;
  Mat drive = Mat::Zero(ni, ni);
  Mat x = Mat::Zero(ni, ni);
  double residual = 0.0;
  int iters = 0;
  sol.merit_history.reserve(static_cast<std::size_t>(options.max_iters));

  auto hermitized = [](const Mat& m) { return 0.5 * (m + m.adjoint()).eval(); };

  for (iters = 0; iters < options.max_iters; ++iters) {
    x = psd_project(hermitized(drive) - t * Mat::Identity(ni, ni));
    const Mat reflected = 2.0 * x - drive;

    Mat projected = reflected;
    for (const ShiftConstraint& c : constraints) {
      Vec diag(ni);
      for (Eigen::Index i = 0; i < ni; ++i)
        diag[i] = reflected(i, (i + static_cast<Eigen::Index>(c.ell)) % ni);
      const Vec d = unitary_idft(project_shift(c, unitary_dft(diag)));
      for (Eigen::Index i = 0; i < ni; ++i)
        projected(i, (i + static_cast<Eigen::Index>(c.ell)) % ni) = d[i];
    }

    const Mat step = projected - x;
    residual = step.norm();
    sol.merit_history.push_back(residual);
    drive += step;

    if (options.diagnostics) {
      *options.diagnostics << "{\"iteration\":" << iters + 1
                           << ",\"residual\":" << residual
                           << ",\"trace\":" << x.trace().real() << "}\n";
    }
    if (residual < options.tol * (1.0 + z_scale)) {
      ++iters;
      break;
    }
  }
  sol.converged = residual < options.tol * (1.0 + z_scale);
  sol.iterations = iters;
  sol.primal_residual = residual;

  x = psd_project(hermitized(drive) - t * Mat::Identity(ni, ni));
  LiftedMatrix lifted(x);
  lifted.hermitize();
  sol.matrix = lifted;
  sol.trace = lifted.matrix().trace().real();

  sol.feasible = true;
  for (std::size_t ell : lambda_set) {
    const WindowAutocorrelation a = build_autocorrelation(g, ell);
    const Vec z_ell = z.values.col(static_cast<Eigen::Index>(ell));
    const Vec d = sol.matrix.diagonal(ell);
    const double slack = (z_ell - nd * apply_circulant(a, d)).norm();
    sol.constraint_slacks[ell] = slack;
    if (slack > eta.at(ell) + 1e-6 * (1.0 + z_ell.norm())) sol.feasible = false;
  }
  if (!sol.feasible)
    sol.warnings.push_back(
        "constraint set appears infeasible; returning the least-infeasible "
        "iterate");

  const Eigenpair top = leading_eigenpair(sol.matrix.matrix());
  if (top.value > 0.0)
    sol.estimate = Signal(std::sqrt(top.value) * top.vector);
  return sol;
}

}  // namespace stftpr
