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

#ifndef REVTK_ROOM_HPP_
#define REVTK_ROOM_HPP_

#include <array>
#include <string>
#include <vector>

#include "revtk/rng.hpp"

namespace revtk {

inline constexpr double kSpeedOfSound = 343.0;  // m/s

// Rectangular room with a single source/microphone pair, all in meters.
struct RoomSpec {
  std::array<double, 3> dims{};
  std::array<double, 3> source_pos{};
  std::array<double, 3> mic_pos{};

  double volume() const { return dims[0] * dims[1] * dims[2]; }
  double surface_area() const {
    return 2.0 * (dims[0] * dims[1] + dims[0] * dims[2] + dims[1] * dims[2]);
  }
  // Throws InvalidArgumentError unless dims > 0, both points are strictly
  // inside, and source != mic.
  void validate() const;
};

// Simulated impulse response.
struct Rir {
  std::vector<double> taps;
  int sample_rate = 8000;
  double nominal_t60 = 0.0;
};

// Direct/early/late masks of a RIR. Each part is full length and zero
// outside its interval; the three sum exactly to the source taps.
struct RirParts {
  std::vector<double> direct;
  std::vector<double> early;
  std::vector<double> late;
  std::size_t direct_end_idx = 0;  // inclusive end of the direct interval
  std::size_t early_end_idx = 0;   // inclusive end of the early interval

  std::vector<double> direct_early() const;
};

// Sabine absorption for a target reverberation time:
//   alpha = 0.16 * V / (S * t60).
// Throws InvalidArgumentError for t60 <= 0 and InfeasibleT60Error when the
// room is too small for the requested time (alpha > 1).
double sabine_absorption(const RoomSpec& room, double t60);

// Rectangular-room image-source simulation with a uniform wall reflection
// coefficient. max_order < 0 selects a default that lets image paths decay
// 60 dB below the direct path. Deterministic for identical inputs.
Rir simulate_rir(const RoomSpec& room, double t60, int fs, int max_order = -1);

// Splits at 1 ms and 50 ms after the maximum-magnitude tap.
RirParts decompose_rir(const Rir& h);

// Schroeder backward integration: least-squares line on the -5..-35 dB
// stretch of the energy decay curve, extrapolated to 60 dB.
// Throws InsufficientDecayError when the curve never reaches -35 dB.
double measure_t60_schroeder(const Rir& h);

// Random source/mic placement: both positions keep `clearance` meters from
// every wall and sit exactly `separation` meters apart.
RoomSpec sample_room_geometry(const std::array<double, 3>& dims, Rng& rng,
                              double separation = 1.0, double clearance = 0.5);

// Persistence: float32 WAV plus a JSON sidecar (<path>.json) recording the
// geometry, nominal and measured T60, sample rate, and max_order.
void save_rir(const std::string& wav_path, const Rir& rir, const RoomSpec& room,
              int max_order);
Rir load_rir(const std::string& wav_path);

}  // namespace revtk

#endif  // REVTK_ROOM_HPP_
