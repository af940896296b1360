// rtdnn/dsp.hpp
//
// Copyright 2026 The rtdnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Small self-contained signal helpers: Hann window, an iterative radix-2
// FFT, and normalized autocorrelation. Everything works on plain vectors;
// nothing here allocates global state.

#ifndef RTDNN_DSP_HPP_
#define RTDNN_DSP_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rtdnn/common.hpp"

namespace rtdnn {

inline constexpr double kPi = 3.14159265358979323846;

inline std::vector<double> hann_window(size_t n) {
  std::vector<double> w(n);
  for (size_t i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * (static_cast<double>(i) + 0.5) /
                                static_cast<double>(n));
  return w;
}

inline size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 FFT. data.size() must be a power of two.
// inverse=true computes the unscaled inverse transform (caller divides by N).
inline void fft_inplace(std::vector<std::complex<double>>& data,
                        bool inverse = false) {
  const size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw_numeric("fft size must be a power of two");
  // bit reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = data[i + k];
        std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Forward FFT of a real signal zero-padded to a power of two >= min_size.
inline std::vector<std::complex<double>> fft_real(std::span<const double> x,
                                                  size_t min_size = 0) {
  size_t n = next_pow2(std::max(x.size(), min_size));
  std::vector<std::complex<double>> data(n);
  for (size_t i = 0; i < x.size(); ++i) data[i] = x[i];
  fft_inplace(data);
  return data;
}

inline double sum_squares(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline double rms(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::sqrt(sum_squares(x) / static_cast<double>(x.size()));
}

// Normalized cross-correlation of x with itself at the given lag, using the
// energy of both windows so a decaying signal still scores near 1 when
// periodic: r(L) = sum x[n] x[n+L] / sqrt(sum_0 x^2 * sum_L x^2).
inline double normalized_autocorr(std::span<const double> x, size_t lag) {
  if (lag == 0 || lag >= x.size()) return 0.0;
  const size_t m = x.size() - lag;
  double num = 0.0, e0 = 0.0, e1 = 0.0;
  for (size_t i = 0; i < m; ++i) {
    num += x[i] * x[i + lag];
    e0 += x[i] * x[i];
    e1 += x[i + lag] * x[i + lag];
  }
  double denom = std::sqrt(e0 * e1);
  if (denom <= 0.0) return 0.0;
  return num / denom;
}

// Brick-wall bandpass [lo_hz, hi_hz) via FFT bin masking. The band edge at
// exactly lo_hz is kept, the one at hi_hz is not, matching the half-open
// band partition used for band powers.
inline std::vector<double> bandpass_brickwall(std::span<const double> x,
                                              double lo_hz, double hi_hz,
                                              double sample_rate) {
  const size_t n = next_pow2(x.size());
  std::vector<std::complex<double>> spec(n);
  for (size_t i = 0; i < x.size(); ++i) spec[i] = x[i];
  fft_inplace(spec);
  const double bin_hz = sample_rate / static_cast<double>(n);
  for (size_t k = 0; k <= n / 2; ++k) {
    double f = static_cast<double>(k) * bin_hz;
    bool keep = (f >= lo_hz && f < hi_hz) ||
                (k == n / 2 && hi_hz >= sample_rate / 2.0);
    if (!keep) {
      spec[k] = 0.0;
      if (k != 0 && k != n / 2) spec[n - k] = 0.0;
    }
  }
  fft_inplace(spec, /*inverse=*/true);
  std::vector<double> out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = spec[i].real() / static_cast<double>(n);
  return out;
}

}  // namespace rtdnn

#endif  // RTDNN_DSP_HPP_
