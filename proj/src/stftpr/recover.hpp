/* recover.hpp - signal recovery from squared STFT magnitudes: the
 * least-squares route (per-shift circulant solves + rank-one extraction)
 * and the algebraic recursion for non-vanishing signals. */

#ifndef STFTPR_RECOVER_HPP
#define STFTPR_RECOVER_HPP

#include <vector>

#include "stftpr/types.hpp"

namespace stftpr {

struct LsRecoveryResult {
  Signal estimate;
  LiftedMatrix lifted;  // Hermitized
  double lambda_max = 0.0;
  std::vector<double> per_ell_residuals;
  bool rank_one_found = true;  // false when lambda_max <= 0 (zero estimate)
};

// Solves every per-shift circulant system, assembles the lifted matrix,
// Hermitizes it, and extracts the leading rank-one factor.  Throws
// WindowInadmissible before touching the data when any shift fails the
// admissibility check.
LsRecoveryResult recover_ls(const MagnitudeMeasurements& y, const Window& g);

// Magnitudes from shift 0, phases propagated through shift 1.  Exact (up
// to global phase) for non-vanishing signals on noise-free data; noisy
// input is accepted but uncertified.  With nonnegative = true the phase
// recursion is skipped and the square root of the magnitudes is returned
// (valid for real nonnegative signals).
Signal recover_algebraic(const MagnitudeMeasurements& y, const Window& g,
                         bool nonnegative = false);

}  // namespace stftpr

#endif
