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

#ifndef REVTK_AUDIO_HPP_
#define REVTK_AUDIO_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace revtk {

// Mono time-domain signal. Samples are dimensionless amplitudes, nominally
// in [-1, 1]; sample_rate is in Hz and must be positive. All values finite.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = 8000;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }

  // Throws InvalidArgumentError on NaN/Inf samples or non-positive rate.
  void validate() const;
};

enum class WavEncoding { kPcm16, kFloat32 };

// Mono WAV I/O. PCM16 and IEEE float32 are supported; anything else
// (multi-channel, other bit depths) is rejected. No resampling: callers that
// require a specific rate must check `sample_rate` themselves.
AudioSignal read_wav(const std::string& path);
void write_wav(const std::string& path, const AudioSignal& signal,
               WavEncoding encoding = WavEncoding::kFloat32);

}  // namespace revtk

#endif  // REVTK_AUDIO_HPP_
