// Copyright 2026 The Revtk Authors.
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

#include "revtk/stft.hpp"

#include <algorithm>
#include <cmath>

#include "revtk/error.hpp"

namespace revtk {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Window-energy floor below which overlap-add output is left at zero.
constexpr double kWindowSumFloor = 1e-8;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void dft_naive(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  std::vector<std::complex<double>> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = sign * 2.0 * kPi * static_cast<double>(k * t % n) / n;
      acc += data[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  if (inverse) {
    for (auto& v : out) v /= static_cast<double>(n);
  }
  data.swap(out);
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (!is_pow2(n)) {
    dft_naive(data, inverse);
    return;
  }
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = data[i + k];
        const std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (auto& v : data) v /= static_cast<double>(n);
  }
}

std::vector<double> convolve_seq(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw InvalidArgumentError("convolve: inputs must be non-empty");
  }
  const std::size_t out_len = a.size() + b.size() - 1;
  // Direct sum is exact and faster for short kernels.
  if (std::min(a.size(), b.size()) <= 64) {
    std::vector<double> out(out_len, 0.0);
    const std::vector<double>& longer = a.size() >= b.size() ? a : b;
    const std::vector<double>& shorter = a.size() >= b.size() ? b : a;
    for (std::size_t j = 0; j < shorter.size(); ++j) {
      const double s = shorter[j];
      if (s == 0.0) continue;
      for (std::size_t i = 0; i < longer.size(); ++i) {
        out[i + j] += longer[i] * s;
      }
    }
    return out;
  }
  const std::size_t n = next_pow2(out_len);
  std::vector<std::complex<double>> fa(n), fb(n);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
  fft_inplace(fa, false);
  fft_inplace(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft_inplace(fa, true);
  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
  return out;
}

AudioSignal convolve(const AudioSignal& a, const std::vector<double>& b) {
  AudioSignal out;
  out.sample_rate = a.sample_rate;
  out.samples = convolve_seq(a.samples, b);
  return out;
}

void StftConfig::validate() const {
  if (hop <= 0 || window_len <= 0 || fft_size <= 0) {
    throw InvalidArgumentError("StftConfig: window_len, fft_size, hop must be positive");
  }
  if (!(hop <= window_len && window_len <= fft_size)) {
    throw InvalidArgumentError(
        "StftConfig: require hop <= window_len <= fft_size, got hop=" +
        std::to_string(hop) + " window_len=" + std::to_string(window_len) +
        " fft_size=" + std::to_string(fft_size));
  }
}

std::vector<double> make_window(WindowKind kind, int length) {
  std::vector<double> w(length, 1.0);
  if (length == 1) return w;
  switch (kind) {
    case WindowKind::kHamming:
      for (int n = 0; n < length; ++n) {
        w[n] = 0.54 - 0.46 * std::cos(2.0 * kPi * n / (length - 1));
      }
      break;
    case WindowKind::kHann:
      for (int n = 0; n < length; ++n) {
        w[n] = 0.5 - 0.5 * std::cos(2.0 * kPi * n / (length - 1));
      }
      break;
    case WindowKind::kRect:
      break;
  }
  return w;
}

ComplexSpectrogram stft(const AudioSignal& x, const StftConfig& cfg) {
  cfg.validate();
  if (static_cast<int>(x.size()) < cfg.window_len) {
    throw InvalidArgumentError("stft: signal length " + std::to_string(x.size()) +
                               " shorter than window " +
                               std::to_string(cfg.window_len));
  }
  const int frames = cfg.num_frames(x.size());
  const int bins = cfg.num_bins();
  const std::vector<double> window = make_window(cfg.window_kind, cfg.window_len);

  ComplexSpectrogram spec;
  spec.num_bins = bins;
  spec.num_frames = frames;
  spec.config = cfg;
  spec.bins.assign(static_cast<std::size_t>(bins) * frames, {0.0, 0.0});

  std::vector<std::complex<double>> buf(cfg.fft_size);
  for (int t = 0; t < frames; ++t) {
    const std::size_t start = static_cast<std::size_t>(t) * cfg.hop;
    for (int n = 0; n < cfg.window_len; ++n) {
      buf[n] = x.samples[start + n] * window[n];
    }
    std::fill(buf.begin() + cfg.window_len, buf.end(), std::complex<double>(0.0, 0.0));
    fft_inplace(buf, false);
    for (int f = 0; f < bins; ++f) {
      spec.at(f, t) = buf[f];
    }
  }
  return spec;
}

AudioSignal istft(const ComplexSpectrogram& spec, int sample_rate) {
  const StftConfig& cfg = spec.config;
  cfg.validate();
  if (spec.num_bins != cfg.num_bins()) {
    throw ShapeError("istft: spectrogram has " + std::to_string(spec.num_bins) +
                     " bins but config expects " + std::to_string(cfg.num_bins()));
  }
  const int frames = spec.num_frames;
  const std::size_t out_len =
      frames > 0 ? static_cast<std::size_t>(frames - 1) * cfg.hop + cfg.window_len : 0;
  const std::vector<double> window = make_window(cfg.window_kind, cfg.window_len);

  std::vector<double> acc(out_len, 0.0);
  std::vector<double> wsum(out_len, 0.0);
  std::vector<std::complex<double>> buf(cfg.fft_size);
  for (int t = 0; t < frames; ++t) {
    // Rebuild the full spectrum from the one-sided half (conjugate symmetry).
    for (int f = 0; f < spec.num_bins; ++f) buf[f] = spec.at(f, t);
    for (int f = spec.num_bins; f < cfg.fft_size; ++f) {
      buf[f] = std::conj(spec.at(cfg.fft_size - f, t));
    }
    fft_inplace(buf, true);
    const std::size_t start = static_cast<std::size_t>(t) * cfg.hop;
    for (int n = 0; n < cfg.window_len; ++n) {
      acc[start + n] += window[n] * buf[n].real();
      wsum[start + n] += window[n] * window[n];
    }
  }
  AudioSignal out;
  out.sample_rate = sample_rate;
  out.samples.resize(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    out.samples[i] = wsum[i] > kWindowSumFloor ? acc[i] / wsum[i] : 0.0;
  }
  return out;
}

CompressedMagnitude compress_magnitude(const ComplexSpectrogram& spec) {
  CompressedMagnitude out;
  out.num_bins = spec.num_bins;
  out.num_frames = spec.num_frames;
  out.values.resize(spec.bins.size());
  for (std::size_t i = 0; i < spec.bins.size(); ++i) {
    out.values[i] = std::cbrt(std::abs(spec.bins[i]));
  }
  return out;
}

}  // namespace revtk
