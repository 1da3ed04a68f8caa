/* twodim.hpp - bivariate extension: 2D STFT, 2D magnitude-DFT, and
 * recovery through block-circulant-with-circulant-blocks systems
 * diagonalized by the 2D DFT. */

#ifndef STFTPR_TWODIM_HPP
#define STFTPR_TWODIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "stftpr/types.hpp"

namespace stftpr {

// Square N x N complex grid; both indices periodic modulo N.
class Signal2D {
 public:
  explicit Signal2D(Mat values);
  static Signal2D random(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return static_cast<std::size_t>(values_.rows()); }
  const Mat& values() const { return values_; }
  bool is_non_vanishing(double threshold) const;

 private:
  Mat values_;
};

class Window2D {
 public:
  explicit Window2D(Mat values);
  // Separable window u(m1) v(m2) from two equal-length 1D windows.
  static Window2D product(const Window& u, const Window& v);

  std::size_t size() const { return static_cast<std::size_t>(values_.rows()); }
  const Mat& values() const { return values_; }
  cd at_mod(std::ptrdiff_t i, std::ptrdiff_t j) const;

 private:
  Mat values_;
};

// X[m1,m2;k1,k2] stored as an N^2 x N^2 matrix with row (m1 N + m2) and
// column (k1 N + k2).
struct Stft2Grid {
  Mat values;
  std::size_t n = 0;
};

struct Measurements2D {
  RealMat grid;  // squared magnitudes, same layout as Stft2Grid
  std::size_t n = 0;
};

Stft2Grid stft2_forward(const Signal2D& x, const Window2D& g);
Measurements2D measure2(const Signal2D& x, const Window2D& g);

// First column of G_{l1,l2} as an N x N array and its 2D DFT.
struct Autocorrelation2D {
  std::size_t ell1 = 0, ell2 = 0;
  Mat column;
  Mat spectrum;
};

Autocorrelation2D build_autocorrelation2(const Window2D& g, std::size_t ell1,
                                         std::size_t ell2);

// Solves (1/N^2) rhs = G_{l1,l2} x by entrywise spectrum division in the
// 2D DFT basis; rhs and result are N x N arrays indexed by (m1, m2).
Mat solve_circulant2(const Autocorrelation2D& autocorr, const Mat& rhs,
                     double tol = 1e-10);
Mat apply_circulant2(const Autocorrelation2D& autocorr, const Mat& x);

struct Ls2Result {
  // Present only when the N^2 x N^2 lift was materialized (N <= 8).
  std::optional<Signal2D> estimate;
  double lambda_max = 0.0;
  std::map<std::pair<std::size_t, std::size_t>, Mat> correlations;
};

// Per-shift-pair solves; for N <= 8 the full lift is assembled,
// Hermitized and rank-one projected, otherwise only the correlation
// grids are returned.
Ls2Result recover2_ls(const Measurements2D& y, const Window2D& g);

// Magnitudes from (0,0); phases along the first row via (0,1), then row
// to row via (1,0).  Requires admissible spectra at those three shifts
// and a non-vanishing signal.
Signal2D recover2_algebraic(const Measurements2D& y, const Window2D& g);

double phase_aligned_error2(const Signal2D& truth, const Signal2D& estimate);

}  // namespace stftpr

#endif
