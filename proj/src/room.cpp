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

#include "revtk/room.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "revtk/audio.hpp"
#include "revtk/error.hpp"

namespace revtk {

namespace {

constexpr double kPi = 3.14159265358979323846;

double distance(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

void RoomSpec::validate() const {
  for (double d : dims) {
    if (!(d > 0.0)) throw InvalidArgumentError("RoomSpec: dims must be positive");
  }
  for (int i = 0; i < 3; ++i) {
    if (!(source_pos[i] > 0.0 && source_pos[i] < dims[i])) {
      throw InvalidArgumentError("RoomSpec: source position outside room");
    }
    if (!(mic_pos[i] > 0.0 && mic_pos[i] < dims[i])) {
      throw InvalidArgumentError("RoomSpec: mic position outside room");
    }
  }
  if (source_pos == mic_pos) {
    throw InvalidArgumentError("RoomSpec: source and mic coincide");
  }
}

double sabine_absorption(const RoomSpec& room, double t60) {
  if (!(t60 > 0.0)) {
    throw InvalidArgumentError("sabine_absorption: t60 must be positive");
  }
  const double alpha = 0.16 * room.volume() / (room.surface_area() * t60);
  if (alpha > 1.0) {
    throw InfeasibleT60Error("t60 " + std::to_string(t60) +
                             " s infeasible for this room (Sabine absorption " +
                             std::to_string(alpha) + " > 1)");
  }
  return alpha;
}

Rir simulate_rir(const RoomSpec& room, double t60, int fs, int max_order) {
  room.validate();
  if (fs <= 0) throw InvalidArgumentError("simulate_rir: fs must be positive");
  const double alpha = sabine_absorption(room, t60);
  // The image lattice realizes an Eyring-type decay, exp(-k per reflection)
  // in energy, so a raw Sabine coefficient undershoots the requested T60
  // badly once absorption is high. Mapping through
  //   alpha_eff = 1 - exp(-alpha_sabine)
  // makes -ln(1 - alpha_eff) = alpha_sabine and the realized decay track the
  // nominal time across the whole grid.
  const double alpha_eff = 1.0 - std::exp(-alpha);
  const double beta = std::sqrt(1.0 - alpha_eff);

  if (max_order < 0) {
    // Enough reflections for image paths to fall 60 dB below the direct one.
    max_order = beta > 0.0
                    ? static_cast<int>(std::ceil(3.0 / -std::log10(beta)))
                    : 0;
  }

  const double direct_dist = distance(room.source_pos, room.mic_pos);
  const std::size_t len = std::max<std::size_t>(
      static_cast<std::size_t>(std::ceil(1.2 * t60 * fs)),
      static_cast<std::size_t>(std::lround(fs * direct_dist / kSpeedOfSound)) + 1);

  Rir rir;
  rir.taps.assign(len, 0.0);
  rir.sample_rate = fs;
  rir.nominal_t60 = t60;

  const double max_dist = kSpeedOfSound * static_cast<double>(len) / fs;
  const auto& L = room.dims;
  const auto& src = room.source_pos;
  const auto& mic = room.mic_pos;
  const int nx = static_cast<int>(std::ceil(max_dist / (2.0 * L[0])));
  const int ny = static_cast<int>(std::ceil(max_dist / (2.0 * L[1])));
  const int nz = static_cast<int>(std::ceil(max_dist / (2.0 * L[2])));

  for (int mx = -nx; mx <= nx; ++mx) {
    for (int q = 0; q <= 1; ++q) {
      const int refl_x = std::abs(mx - q) + std::abs(mx);
      if (refl_x > max_order) continue;
      const double ix = (1 - 2 * q) * src[0] + 2.0 * mx * L[0] - mic[0];
      for (int my = -ny; my <= ny; ++my) {
        for (int j = 0; j <= 1; ++j) {
          const int refl_xy = refl_x + std::abs(my - j) + std::abs(my);
          if (refl_xy > max_order) continue;
          const double iy = (1 - 2 * j) * src[1] + 2.0 * my * L[1] - mic[1];
          for (int mz = -nz; mz <= nz; ++mz) {
            for (int k = 0; k <= 1; ++k) {
              const int refl = refl_xy + std::abs(mz - k) + std::abs(mz);
              if (refl > max_order) continue;
              const double iz = (1 - 2 * k) * src[2] + 2.0 * mz * L[2] - mic[2];
              const double d = std::sqrt(ix * ix + iy * iy + iz * iz);
              const std::size_t idx =
                  static_cast<std::size_t>(std::lround(fs * d / kSpeedOfSound));
              if (idx >= len) continue;
              rir.taps[idx] += std::pow(beta, refl) / (4.0 * kPi * d);
            }
          }
        }
      }
    }
  }
  return rir;
}

RirParts decompose_rir(const Rir& h) {
  bool any_nonzero = false;
  for (double t : h.taps) {
    if (t != 0.0) {
      any_nonzero = true;
      break;
    }
  }
  if (h.taps.empty() || !any_nonzero) {
    throw InvalidArgumentError("decompose_rir: RIR has no nonzero tap");
  }

  std::size_t peak = 0;
  for (std::size_t i = 1; i < h.taps.size(); ++i) {
    if (std::abs(h.taps[i]) > std::abs(h.taps[peak])) peak = i;
  }
  const std::size_t last = h.taps.size() - 1;
  const std::size_t direct_end = std::min(
      last, peak + static_cast<std::size_t>(std::lround(0.001 * h.sample_rate)));
  const std::size_t early_end = std::min(
      last, peak + static_cast<std::size_t>(std::lround(0.050 * h.sample_rate)));

  RirParts parts;
  parts.direct.assign(h.taps.size(), 0.0);
  parts.early.assign(h.taps.size(), 0.0);
  parts.late.assign(h.taps.size(), 0.0);
  parts.direct_end_idx = direct_end;
  parts.early_end_idx = early_end;
  for (std::size_t i = 0; i < h.taps.size(); ++i) {
    if (i <= direct_end) {
      parts.direct[i] = h.taps[i];
    } else if (i <= early_end) {
      parts.early[i] = h.taps[i];
    } else {
      parts.late[i] = h.taps[i];
    }
  }
  return parts;
}

std::vector<double> RirParts::direct_early() const {
  std::vector<double> out(direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    out[i] = direct[i] + early[i];
  }
  return out;
}

double measure_t60_schroeder(const Rir& h) {
  if (h.taps.empty()) {
    throw InvalidArgumentError("measure_t60_schroeder: empty RIR");
  }
  // Backward-integrated energy decay curve.
  std::vector<double> edc(h.taps.size());
  double acc = 0.0;
  for (std::size_t i = h.taps.size(); i-- > 0;) {
    acc += h.taps[i] * h.taps[i];
    edc[i] = acc;
  }
  if (edc[0] <= 0.0) {
    throw InvalidArgumentError("measure_t60_schroeder: all-zero RIR");
  }

  // Collect (time, dB) points on the -5..-35 dB stretch.
  std::vector<double> ts, dbs;
  for (std::size_t i = 0; i < edc.size(); ++i) {
    if (edc[i] <= 0.0) break;
    const double db = 10.0 * std::log10(edc[i] / edc[0]);
    if (db > -5.0) continue;
    if (db < -35.0) break;
    ts.push_back(static_cast<double>(i) / h.sample_rate);
    dbs.push_back(db);
  }
  const double floor_db = 10.0 * std::log10(edc.back() > 0.0
                                                ? edc.back() / edc[0]
                                                : 1.0);
  if (ts.size() < 2 || floor_db > -35.0) {
    throw InsufficientDecayError(
        "measure_t60_schroeder: decay range below 30 dB (EDC floor " +
        std::to_string(floor_db) + " dB)");
  }

  // Least-squares line dB = a + b * t.
  const double n = static_cast<double>(ts.size());
  double st = 0.0, sd = 0.0, stt = 0.0, std_ = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sd += dbs[i];
    stt += ts[i] * ts[i];
    std_ += ts[i] * dbs[i];
  }
  const double denom = n * stt - st * st;
  if (denom <= 0.0) {
    throw InsufficientDecayError("measure_t60_schroeder: degenerate fit region");
  }
  const double slope = (n * std_ - st * sd) / denom;
  if (slope >= 0.0) {
    throw InsufficientDecayError("measure_t60_schroeder: non-decaying EDC fit");
  }
  return -60.0 / slope;
}

RoomSpec sample_room_geometry(const std::array<double, 3>& dims, Rng& rng,
                              double separation, double clearance) {
  for (double d : dims) {
    if (d <= 2.0 * clearance) {
      throw InvalidArgumentError(
          "sample_room_geometry: room too small for wall clearance");
    }
  }
  RoomSpec room;
  room.dims = dims;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<double, 3> mic;
    for (int i = 0; i < 3; ++i) {
      mic[i] = rng.uniform(clearance, dims[i] - clearance);
    }
    // Uniform direction for the source offset.
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const std::array<double, 3> dir{r * std::cos(phi), r * std::sin(phi), z};
    std::array<double, 3> src;
    bool inside = true;
    for (int i = 0; i < 3; ++i) {
      src[i] = mic[i] + separation * dir[i];
      inside = inside && src[i] > clearance && src[i] < dims[i] - clearance;
    }
    if (!inside) continue;
    room.mic_pos = mic;
    room.source_pos = src;
    room.validate();
    return room;
  }
  throw InvalidArgumentError(
      "sample_room_geometry: could not place source/mic pair");
}

void save_rir(const std::string& wav_path, const Rir& rir, const RoomSpec& room,
              int max_order) {
  AudioSignal sig;
  sig.samples = rir.taps;
  sig.sample_rate = rir.sample_rate;
  write_wav(wav_path, sig, WavEncoding::kFloat32);

  nlohmann::ordered_json j;
  j["dims"] = room.dims;
  j["source_pos"] = room.source_pos;
  j["mic_pos"] = room.mic_pos;
  j["nominal_t60"] = rir.nominal_t60;
  double measured = -1.0;
  try {
    measured = measure_t60_schroeder(rir);
  } catch (const Error&) {
    // Leave the sidecar value at -1 for RIRs without a usable decay range.
  }
  j["measured_t60"] = measured;
  j["fs"] = rir.sample_rate;
  j["max_order"] = max_order;
  std::ofstream out(wav_path + ".json");
  if (!out) throw IoError("cannot write RIR sidecar: " + wav_path + ".json");
  out << j.dump(2) << "\n";
}

Rir load_rir(const std::string& wav_path) {
  const AudioSignal sig = read_wav(wav_path);
  Rir rir;
  rir.taps = sig.samples;
  rir.sample_rate = sig.sample_rate;
  std::ifstream in(wav_path + ".json");
  if (in) {
    nlohmann::json j;
    in >> j;
    rir.nominal_t60 = j.value("nominal_t60", 0.0);
  }
  return rir;
}

}  // namespace revtk
