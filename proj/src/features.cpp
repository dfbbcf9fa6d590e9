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

#include "revtk/features.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "revtk/error.hpp"

namespace revtk {

FeatureMap extract_t60_features(const ComplexSpectrogram& spec,
                                const std::optional<NormStats>& stats) {
  const int f_bins = spec.num_bins;
  const int frames = spec.num_frames;
  FeatureMap out;
  out.rows = 3 * f_bins;
  out.num_frames = frames;
  out.values.resize(static_cast<std::size_t>(out.rows) * frames);

  for (int f = 0; f < f_bins; ++f) {
    for (int t = 0; t < frames; ++t) {
      const std::complex<double>& v = spec.at(f, t);
      const double mag = std::abs(v);
      // atan2(0, 0) = 0, so silent bins get sin 0 / cos 1.
      const double theta = std::atan2(v.imag(), v.real());
      out.at(f, t) = std::log(mag + kLogEps);
      out.at(f_bins + f, t) = std::sin(theta);
      out.at(2 * f_bins + f, t) = std::cos(theta);
    }
  }
  if (stats.has_value()) {
    normalize_features(out, *stats);
  }
  return out;
}

void normalize_features(FeatureMap& f, const NormStats& stats) {
  if (stats.rows() != f.rows) {
    throw ShapeError("normalize_features: stats rows " +
                     std::to_string(stats.rows()) + " vs feature rows " +
                     std::to_string(f.rows));
  }
  for (int r = 0; r < f.rows; ++r) {
    const double m = stats.mean[r];
    const double s = stats.std[r];
    for (int t = 0; t < f.num_frames; ++t) {
      f.at(r, t) = (f.at(r, t) - m) / s;
    }
  }
  f.normalized = true;
}

NormStats fit_normalization(const std::vector<FeatureMap>& features) {
  if (features.empty()) {
    throw InvalidArgumentError("fit_normalization: empty feature collection");
  }
  const int rows = features.front().rows;
  std::vector<double> sum(rows, 0.0), sumsq(rows, 0.0);
  std::size_t total_frames = 0;
  for (const FeatureMap& f : features) {
    if (f.rows != rows) {
      throw InvalidArgumentError("fit_normalization: mixed row counts " +
                                 std::to_string(f.rows) + " vs " +
                                 std::to_string(rows));
    }
    for (int r = 0; r < rows; ++r) {
      for (int t = 0; t < f.num_frames; ++t) {
        const double v = f.at(r, t);
        sum[r] += v;
        sumsq[r] += v * v;
      }
    }
    total_frames += f.num_frames;
  }
  if (total_frames == 0) {
    throw InvalidArgumentError("fit_normalization: feature maps have no frames");
  }
  NormStats stats;
  stats.mean.resize(rows);
  stats.std.resize(rows);
  const double n = static_cast<double>(total_frames);
  for (int r = 0; r < rows; ++r) {
    const double mean = sum[r] / n;
    const double var = std::max(0.0, sumsq[r] / n - mean * mean);
    stats.mean[r] = mean;
    stats.std[r] = std::max(std::sqrt(var), kStdEps);
  }
  return stats;
}

void NormStats::save_json(const std::string& path) const {
  nlohmann::ordered_json j;
  j["rows"] = rows();
  j["mean"] = mean;
  j["std"] = std;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write norm stats: " + path);
  out << j.dump() << "\n";
}

NormStats NormStats::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read norm stats: " + path);
  nlohmann::json j;
  in >> j;
  NormStats stats;
  stats.mean = j.at("mean").get<std::vector<double>>();
  stats.std = j.at("std").get<std::vector<double>>();
  if (stats.mean.size() != stats.std.size()) {
    throw ConfigError("norm stats mean/std length mismatch in " + path);
  }
  return stats;
}

}  // namespace revtk
