/* circulant.hpp - windowed autocorrelation columns, their spectra, window
 * admissibility checks, and the diagonalized circulant solve behind the
 * per-shift linear systems. */

#ifndef STFTPR_CIRCULANT_HPP
#define STFTPR_CIRCULANT_HPP

#include <map>
#include <vector>

#include "stftpr/types.hpp"

namespace stftpr {

// Relative spectrum-magnitude threshold separating structural zeros from
// floating-point noise at the sizes this library targets.
inline constexpr double kAdmissibilityTol = 1e-10;

// First column c_l[m] = g[m] conj(g[(m-l) mod N]) of the circulant matrix
// G_l, together with its DFT (the eigenvalues of G_l).
struct WindowAutocorrelation {
  std::size_t ell = 0;
  Vec column;
  Vec spectrum;
};

WindowAutocorrelation build_autocorrelation(const Window& g, std::size_t ell);

struct AdmissibilityEntry {
  double min_abs_spectrum = 0.0;
  double max_abs_spectrum = 0.0;
  bool invertible = false;
};

struct AdmissibilityReport {
  std::map<std::size_t, AdmissibilityEntry> per_ell;
  bool overall = false;
  double tolerance = kAdmissibilityTol;
};

// invertible iff min |spectrum| > tol * max |spectrum| for each shift.
AdmissibilityReport check_admissibility(const Window& g,
                                        const std::vector<std::size_t>& ells,
                                        double tol = kAdmissibilityTol);

enum class RectMode {
  kFull,  // shifts {0, ..., N-1}: N/2 < W < N and gcd(N, w) = 1 on [2W-N, W]
  kPair   // shifts {0, 1}: 2 <= W <= N-1 and gcd(N, W) = gcd(N, W-1) = 1
};

// Closed-form admissibility for rectangular windows; agrees with
// check_admissibility on the corresponding shift sets.
bool rect_admissibility_predicate(std::size_t n, std::size_t w, RectMode mode);

// Solves (1/N) rhs = G_l x in the DFT eigenbasis:
// x = (1/N) idft(dft(rhs) / spectrum).  Throws WindowInadmissible naming
// the shift and the offending bin when the spectrum has a (near-)zero.
Vec solve_circulant(const WindowAutocorrelation& autocorr, const Vec& rhs,
                    double tol = kAdmissibilityTol);

// G_l x via spectrum multiplication (used for residuals and tests).
Vec apply_circulant(const WindowAutocorrelation& autocorr, const Vec& x);

}  // namespace stftpr

#endif
