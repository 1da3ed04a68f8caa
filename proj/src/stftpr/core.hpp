/* core.hpp - phase-aligned error metric, measurement noise, and the
 * leading Hermitian eigenpair used for rank-one extraction. */

#ifndef STFTPR_CORE_HPP
#define STFTPR_CORE_HPP

#include <cstdint>

#include "stftpr/types.hpp"

namespace stftpr {

// min over phi of ||truth - e^{j phi} estimate||_2 / ||estimate||_2.
// The minimizing phi is the argument of <estimate, truth>, no search.
// Throws InvalidArgument on length mismatch or a zero-norm estimate.
double phase_aligned_error(const Signal& truth, const Signal& estimate);

// Adds i.i.d. zero-mean Gaussian noise to every grid entry with variance
// chosen so that 10 log10(||clean||_F^2 / (N^2 sigma^2)) = snr_db.
// snr_db = +infinity returns the input unchanged.  Requires noise-free
// input; deterministic given the seed.
MagnitudeMeasurements add_noise(const MagnitudeMeasurements& clean,
                                double snr_db, std::uint64_t seed);

struct Eigenpair {
  double value = 0.0;  // largest algebraic eigenvalue
  Vec vector;          // unit norm
};

// Leading eigenpair of a Hermitian matrix: shifted power iteration (shift
// by the matrix 1-norm so the largest algebraic eigenvalue dominates in
// magnitude), with a dense Hermitian eigendecomposition as fallback.
// Residual contract: ||X u - lambda u|| <= 1e-8 ||X||_F.
Eigenpair leading_eigenpair(const Mat& hermitian);

}  // namespace stftpr

#endif
