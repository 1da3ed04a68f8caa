/* sdp.hpp - trace minimization over PSD Hermitian matrices subject to
 * per-shift measurement-fit ball constraints, solved by an operator
 * splitting scheme (Douglas-Rachford) whose two proximal maps are the
 * trace-shifted PSD projection and per-shift projections computed in the
 * circulant eigenbasis. */

#ifndef STFTPR_SDP_HPP
#define STFTPR_SDP_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "stftpr/types.hpp"

namespace stftpr {

struct SdpProblemSizeLimit {
  static constexpr std::size_t kMaxN = 128;
};

struct SdpOptions {
  double prox_scale = 1.0;  // step of the splitting on normalized operators
  int max_iters = 5000;
  double tol = 1e-7;        // convergence: residual < tol * (1 + ||z||)
  std::ostream* diagnostics = nullptr;  // JSON-lines: iteration, residual, trace
};

struct SdpSolution {
  LiftedMatrix matrix;  // PSD, Hermitian
  Signal estimate;
  int iterations = 0;
  double primal_residual = 0.0;
  double trace = 0.0;
  // Per-shift ||z_l - N G_l diag(X, l)||_2, in the same units as eta.
  std::map<std::size_t, double> constraint_slacks;
  bool converged = false;
  bool feasible = false;
  std::vector<double> merit_history;  // fixed-point residual per iteration
  std::vector<std::string> warnings;
};

// Per-shift noise budget for the magnitude-DFT columns: under additive
// measurement noise of deviation sigma, each column's noise has expected
// squared norm sigma^2 N^2, hence expected norm sigma N; the factor 1.2
// covers the quantile spread.  Throws on negative sigma.
double default_eta(double sigma, std::size_t n);

// Solves  min trace(X)  s.t.  X >= 0,  ||z_l - N G_l diag(X, l)|| <= eta_l
// for every shift l in lambda_set.  Shifts with structurally singular G_l
// are retained; their constraints bind only the range component.  When the
// constraint set is empty the least-infeasible iterate is returned with
// feasible = false.
SdpSolution recover_sdp(const MagnitudeMeasurements& y, const Window& g,
                        const std::vector<std::size_t>& lambda_set,
                        const std::map<std::size_t, double>& eta,
                        const SdpOptions& options = {});

// Frobenius-nearest PSD matrix: eigendecompose, clip negative eigenvalues
// to zero, reassemble.  Input must be Hermitian.
Mat psd_project(const Mat& hermitian);

}  // namespace stftpr

#endif
