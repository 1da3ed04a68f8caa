/* transforms.hpp - forward STFT (hop 1, periodic indexing), squared
 * magnitude measurement, the magnitude-DFT grid, and the least-squares
 * inverse STFT used by the Griffin-Lim baseline. */

#ifndef STFTPR_TRANSFORMS_HPP
#define STFTPR_TRANSFORMS_HPP

#include "stftpr/types.hpp"

namespace stftpr {

// X[m,k] = sum_n x[n] g[(m-n) mod N] e^{-2 pi j k n / N}.
struct StftGrid {
  Mat values;  // rows indexed by m, columns by k
};

// Z[m,l]: DFT of the measurement grid along the k index.
struct MagnitudeDft {
  Mat values;
};

StftGrid stft_forward(const Signal& x, const Window& g);

// grid[m][k] = |X[m,k]|^2, noise-free.
MagnitudeMeasurements measure(const Signal& x, const Window& g);

MagnitudeDft magnitude_dft(const MagnitudeMeasurements& y);

// Least-squares synthesis: the signal whose STFT is Frobenius-closest to
// the given grid.  Requires a nonzero window.
Signal istft_ls(const StftGrid& grid, const Window& g);

}  // namespace stftpr

#endif
