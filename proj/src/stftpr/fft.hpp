/* fft.hpp - complex DFT for arbitrary lengths, including primes.
 *
 * Forward convention: W[l] = sum_n v[n] e^{-2 pi j n l / N} (unnormalized);
 * the inverse carries the 1/N factor.  Power-of-two lengths use an
 * iterative radix-2 Cooley-Tukey; everything else goes through Bluestein's
 * chirp-z reduction to a padded power-of-two convolution.
 */

#ifndef STFTPR_FFT_HPP
#define STFTPR_FFT_HPP

#include <complex>
#include <vector>

namespace stftpr {

using cd = std::complex<double>;

std::vector<cd> dft(const std::vector<cd>& v);
std::vector<cd> inverse_dft(const std::vector<cd>& v);

// In-place variants operating on externally owned buffers of length n.
void dft_inplace(cd* data, std::size_t n);
void inverse_dft_inplace(cd* data, std::size_t n);

}  // namespace stftpr

#endif
