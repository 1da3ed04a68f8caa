#include "stftpr/transforms.hpp"

#include <vector>

#include "stftpr/errors.hpp"
#include "stftpr/fft.hpp"

namespace stftpr {

StftGrid stft_forward(const Signal& x, const Window& g) {
  const std::size_t n = x.size();
  if (g.size() != n) throw InvalidArgument("stft_forward: length mismatch");

  Mat out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<cd> row(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i)
      row[i] = x[i] * g.at_mod(static_cast<std::ptrdiff_t>(m) -
                               static_cast<std::ptrdiff_t>(i));
    dft_inplace(row.data(), n);
    for (std::size_t k = 0; k < n; ++k)
      out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) = row[k];
  }
  return {std::move(out)};
}

MagnitudeMeasurements measure(const Signal& x, const Window& g) {
  const StftGrid grid = stft_forward(x, g);
  RealMat y = grid.values.cwiseAbs2();
  return MagnitudeMeasurements(std::move(y), MagnitudeMeasurements::NoNoise{},
                               0);
}

MagnitudeDft magnitude_dft(const MagnitudeMeasurements& y) {
  const RealMat& grid = y.grid();
  const std::size_t n = y.size();
  if (grid.cols() != grid.rows())
    throw InvalidArgument("magnitude_dft: square grid required");

  Mat z(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<cd> row(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k)
      row[k] = cd(grid(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)),
                  0.0);
    dft_inplace(row.data(), n);
    for (std::size_t l = 0; l < n; ++l)
      z(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(l)) = row[l];
  }
  return {std::move(z)};
}

Signal istft_ls(const StftGrid& grid, const Window& g) {
  const std::size_t n = g.size();
  if (static_cast<std::size_t>(grid.values.rows()) != n ||
      static_cast<std::size_t>(grid.values.cols()) != n)
    throw InvalidArgument("istft_ls: grid shape mismatch");
  if (g.values().norm() == 0.0)
    throw InvalidArgument("istft_ls: all-zero window");

  // x[n] = sum_m idft(X[m,.])[n] conj(g[(m-n) mod N]) / sum_m |g[(m-n)]|^2;
  // with hop 1 the denominator is ||g||^2 for every n.
  Vec num = Vec::Zero(static_cast<Eigen::Index>(n));
  std::vector<cd> row(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k)
      row[k] = grid.values(static_cast<Eigen::Index>(m),
                           static_cast<Eigen::Index>(k));
    inverse_dft_inplace(row.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      num[static_cast<Eigen::Index>(i)] +=
          row[i] * std::conj(g.at_mod(static_cast<std::ptrdiff_t>(m) -
                                      static_cast<std::ptrdiff_t>(i)));
  }
  const double denom = g.values().squaredNorm();
  return Signal(num / denom);
}

}  // namespace stftpr
