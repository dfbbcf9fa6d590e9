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

#ifndef REVTK_STFT_HPP_
#define REVTK_STFT_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "revtk/audio.hpp"

namespace revtk {

enum class WindowKind { kHamming, kHann, kRect };

// Analysis configuration. Frames start at sample 0 (no center padding);
// frame t covers samples [t*hop, t*hop + window_len).
struct StftConfig {
  int window_len = 480;
  int fft_size = 512;
  int hop = 120;
  WindowKind window_kind = WindowKind::kHamming;

  int num_bins() const { return fft_size / 2 + 1; }
  // Frames that fit entirely inside a signal of length n.
  int num_frames(std::size_t n) const {
    if (static_cast<int>(n) < window_len) return 0;
    return static_cast<int>((n - window_len) / hop) + 1;
  }
  // Throws InvalidArgumentError unless 0 < hop <= window_len <= fft_size.
  void validate() const;

  bool operator==(const StftConfig&) const = default;
};

// One-sided complex STFT grid, F = fft_size/2 + 1 rows by T frames.
// Storage is row-major over frequency: bins[f * frames + t].
struct ComplexSpectrogram {
  std::vector<std::complex<double>> bins;
  int num_bins = 0;
  int num_frames = 0;
  StftConfig config;

  std::complex<double>& at(int f, int t) { return bins[static_cast<std::size_t>(f) * num_frames + t]; }
  const std::complex<double>& at(int f, int t) const {
    return bins[static_cast<std::size_t>(f) * num_frames + t];
  }
};

// Nonnegative real grid, same layout as ComplexSpectrogram.
struct CompressedMagnitude {
  std::vector<double> values;
  int num_bins = 0;
  int num_frames = 0;

  double& at(int f, int t) { return values[static_cast<std::size_t>(f) * num_frames + t]; }
  double at(int f, int t) const { return values[static_cast<std::size_t>(f) * num_frames + t]; }
};

// Full linear convolution; output length = len(a) + len(b) - 1. Uses an FFT
// fast path for long inputs and the direct sum for short ones.
// Throws InvalidArgumentError on empty input.
AudioSignal convolve(const AudioSignal& a, const std::vector<double>& b);
std::vector<double> convolve_seq(const std::vector<double>& a,
                                 const std::vector<double>& b);

std::vector<double> make_window(WindowKind kind, int length);

// Forward STFT. Throws InvalidArgumentError if the signal is shorter than
// one analysis window.
ComplexSpectrogram stft(const AudioSignal& x, const StftConfig& cfg);

// Weighted overlap-add inverse with squared-window normalization; exact
// wherever the accumulated window energy exceeds a small floor. Output
// length is the span covered by the frames.
AudioSignal istft(const ComplexSpectrogram& spec, int sample_rate = 8000);

// Cubic-root compression, entry = |S|^(1/3).
CompressedMagnitude compress_magnitude(const ComplexSpectrogram& spec);

// In-place complex FFT/IFFT used by stft/convolve; radix-2 for power-of-two
// sizes with a naive DFT fallback for the rest. Exposed for tests.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

}  // namespace revtk

#endif  // REVTK_STFT_HPP_
