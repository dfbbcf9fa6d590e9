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

#ifndef REVTK_FEATURES_HPP_
#define REVTK_FEATURES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "revtk/stft.hpp"

namespace revtk {

// Log-magnitude floor inside log(|S| + eps).
inline constexpr double kLogEps = 1e-8;
// Per-row standard-deviation floor for normalization stats.
inline constexpr double kStdEps = 1e-8;

// Stacked T60 input features: rows [0, F) log-magnitude, [F, 2F) sin(phase),
// [2F, 3F) cos(phase). Row-major storage values[row * frames + t].
struct FeatureMap {
  std::vector<double> values;
  int rows = 0;        // always 3F
  int num_frames = 0;
  bool normalized = false;

  double& at(int r, int t) { return values[static_cast<std::size_t>(r) * num_frames + t]; }
  double at(int r, int t) const { return values[static_cast<std::size_t>(r) * num_frames + t]; }
};

// Per-row mean/std pooled over all training frames. std entries are floored
// at kStdEps.
struct NormStats {
  std::vector<double> mean;
  std::vector<double> std;

  int rows() const { return static_cast<int>(mean.size()); }
  void save_json(const std::string& path) const;
  static NormStats load_json(const std::string& path);
};

// Feature extraction per the log-magnitude (+) sin/cos phase stack. When
// stats are supplied, each row is standardized as (v - mean) / std and the
// map is flagged normalized. Throws ShapeError on a stats length mismatch.
FeatureMap extract_t60_features(const ComplexSpectrogram& spec,
                                const std::optional<NormStats>& stats = std::nullopt);

// Pooled per-row statistics over all frames of all maps (population std).
// Throws InvalidArgumentError on an empty collection or mixed row counts.
NormStats fit_normalization(const std::vector<FeatureMap>& features);

// Applies stats in place; used when maps are extracted before stats exist.
void normalize_features(FeatureMap& f, const NormStats& stats);

}  // namespace revtk

#endif  // REVTK_FEATURES_HPP_
