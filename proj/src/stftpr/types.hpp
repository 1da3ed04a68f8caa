/* types.hpp - shared domain types: signals, windows, measurement grids,
 * diagonal correlations and the lifted matrix. */

#ifndef STFTPR_TYPES_HPP
#define STFTPR_TYPES_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace stftpr {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealMat = Eigen::MatrixXd;

// Complex length-N vector; all index arithmetic elsewhere is modulo N.
// Immutable after construction.
class Signal {
 public:
  explicit Signal(Vec values);
  static Signal zero(std::size_t n);
  // i.i.d. complex Gaussian entries (unit variance per real component).
  static Signal random(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  const Vec& values() const { return values_; }
  cd operator[](std::size_t n) const { return values_[static_cast<Eigen::Index>(n)]; }

  // Exact zero test; the overload takes a magnitude threshold.
  bool is_non_vanishing() const;
  bool is_non_vanishing(double threshold) const;

  double norm() const { return values_.norm(); }

 private:
  Vec values_;
};

// STFT window with construction metadata.  Periodically indexed like the
// signal it multiplies.
class Window {
 public:
  struct Rectangular {
    std::size_t w;
  };
  struct Gaussian {
    double sigma;
  };
  struct Custom {};
  using Kind = std::variant<Rectangular, Gaussian, Custom>;

  static Window rectangular(std::size_t n, std::size_t w);
  static Window gaussian(std::size_t n, double sigma);
  static Window custom(Vec values);

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  const Vec& values() const { return values_; }
  cd at_mod(std::ptrdiff_t idx) const;  // periodic lookup, any integer index
  const Kind& kind() const { return kind_; }
  std::string describe() const;  // e.g. "rect(w=13)" or "gaussian(sigma=12)"

 private:
  Window(Vec values, Kind kind) : values_(std::move(values)), kind_(kind) {}

  Vec values_;
  Kind kind_;
};

// Real N x N grid Y[m,k] of (possibly noisy) squared STFT magnitudes.
// Noise is added to the squared magnitudes, so noisy entries may be
// negative; no clipping is applied here.
class MagnitudeMeasurements {
 public:
  struct NoNoise {};
  struct GaussianNoise {
    double sigma;
  };
  using NoiseModel = std::variant<NoNoise, GaussianNoise>;

  MagnitudeMeasurements(RealMat grid, NoiseModel noise, std::uint64_t seed)
      : grid_(std::move(grid)), noise_(noise), seed_(seed) {}

  std::size_t size() const { return static_cast<std::size_t>(grid_.rows()); }
  const RealMat& grid() const { return grid_; }
  const NoiseModel& noise_model() const { return noise_; }
  bool is_noise_free() const { return std::holds_alternative<NoNoise>(noise_); }
  double noise_sigma() const;  // 0 when noise-free
  std::uint64_t seed() const { return seed_; }

 private:
  RealMat grid_;
  NoiseModel noise_;
  std::uint64_t seed_;
};

// The vectors x_l[n] = x[n] conj(x[(n+l) mod N]) for the shifts l that
// have been solved for.
struct DiagonalCorrelations {
  std::map<std::size_t, Vec> entries;
};

// N x N complex matrix estimating the rank-one lift x x*.  Circular
// diagonal l holds the correlation vector x_l before Hermitization.
class LiftedMatrix {
 public:
  explicit LiftedMatrix(std::size_t n) : m_(Mat::Zero(n, n)) {}
  explicit LiftedMatrix(Mat m) : m_(std::move(m)) {}

  static LiftedMatrix from_diagonals(std::size_t n,
                                     const DiagonalCorrelations& diags);

  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  const Mat& matrix() const { return m_; }
  Mat& matrix() { return m_; }

  Vec diagonal(std::size_t ell) const;          // entries (i, (i+ell) mod N)
  void set_diagonal(std::size_t ell, const Vec& v);

  // (X + X*) / 2 with exactly conjugate-paired entries afterwards.
  void hermitize();
  bool is_hermitian() const;

 private:
  Mat m_;
};

}  // namespace stftpr

#endif
