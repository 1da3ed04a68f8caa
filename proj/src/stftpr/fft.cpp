#include "stftpr/fft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "stftpr/errors.hpp"

namespace stftpr {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Precomputed machinery for one transform length.
struct Plan {
  std::size_t n = 0;
  // radix-2 path
  std::vector<std::size_t> bitrev;
  std::vector<cd> twiddles;  // e^{-2 pi j k / n}, k < n/2
  // Bluestein path
  std::size_t m = 0;            // padded power-of-two length, >= 2n-1
  std::vector<cd> chirp;        // a[k] = e^{-j pi k^2 / n}
  std::vector<cd> chirp_kernel; // DFT_m of b, b[k] = e^{+j pi k^2 / n}
};

void radix2_inplace(cd* data, const Plan& plan, bool invert) {
  const std::size_t n = plan.n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = plan.bitrev[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        cd w = plan.twiddles[k * step];
        if (invert) w = std::conj(w);
        const cd u = data[start + k];
        const cd t = data[start + k + half] * w;
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

Plan make_plan(std::size_t n) {
  Plan plan;
  plan.n = n;
  if (is_pow2(n)) {
    plan.bitrev.assign(n, 0);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < log2n; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
      plan.bitrev[i] = r;
    }
    plan.twiddles.resize(n / 2 ? n / 2 : 1);
    for (std::size_t k = 0; k < plan.twiddles.size(); ++k)
      plan.twiddles[k] = std::polar(1.0, -kTwoPi * static_cast<double>(k) /
                                             static_cast<double>(n));
    return plan;
  }

  // Bluestein: reduce the length-n DFT to a length-m circular convolution.
  plan.m = next_pow2(2 * n - 1);
  plan.chirp.resize(n);
  std::vector<cd> b(plan.m, cd(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the chirp angle exactly representable for large k.
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle = -M_PI * static_cast<double>(k2) / static_cast<double>(n);
    plan.chirp[k] = std::polar(1.0, angle);
    const cd bk = std::conj(plan.chirp[k]);
    b[k] = bk;
    if (k != 0) b[plan.m - k] = bk;
  }
  Plan conv = make_plan(plan.m);
  radix2_inplace(b.data(), conv, false);
  plan.chirp_kernel = std::move(b);
  return plan;
}

const Plan& plan_for(std::size_t n) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::unique_ptr<Plan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<Plan>(make_plan(n))).first;
  return *it->second;
}

void bluestein_inplace(cd* data, const Plan& plan) {
  const std::size_t n = plan.n;
  const Plan& conv = plan_for(plan.m);
  std::vector<cd> a(plan.m, cd(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) a[k] = data[k] * plan.chirp[k];
  radix2_inplace(a.data(), conv, false);
  for (std::size_t k = 0; k < plan.m; ++k) a[k] *= plan.chirp_kernel[k];
  radix2_inplace(a.data(), conv, true);
  const double scale = 1.0 / static_cast<double>(plan.m);
  for (std::size_t k = 0; k < n; ++k) data[k] = a[k] * scale * plan.chirp[k];
}

}  // namespace

void dft_inplace(cd* data, std::size_t n) {
  if (n == 0) throw InvalidArgument("dft: empty input");
  if (n == 1) return;
  const Plan& plan = plan_for(n);
  if (is_pow2(n))
    radix2_inplace(data, plan, false);
  else
    bluestein_inplace(data, plan);
}

void inverse_dft_inplace(cd* data, std::size_t n) {
  if (n == 0) throw InvalidArgument("inverse_dft: empty input");
  for (std::size_t i = 0; i < n; ++i) data[i] = std::conj(data[i]);
  dft_inplace(data, n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) data[i] = std::conj(data[i]) * scale;
}

std::vector<cd> dft(const std::vector<cd>& v) {
  std::vector<cd> out = v;
  dft_inplace(out.data(), out.size());
  return out;
}

std::vector<cd> inverse_dft(const std::vector<cd>& v) {
  std::vector<cd> out = v;
  inverse_dft_inplace(out.data(), out.size());
  return out;
}

}  // namespace stftpr
