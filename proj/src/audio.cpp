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

#include "revtk/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "revtk/error.hpp"

namespace revtk {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  }
  T out;
  std::memcpy(&out, &v, sizeof(T));
  return out;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  std::uint64_t v = 0;
  std::memcpy(&v, &value, sizeof(T));
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

}  // namespace

void AudioSignal::validate() const {
  if (sample_rate <= 0) {
    throw InvalidArgumentError("AudioSignal: sample_rate must be positive, got " +
                               std::to_string(sample_rate));
  }
  for (double s : samples) {
    if (!std::isfinite(s)) {
      throw InvalidArgumentError("AudioSignal: non-finite sample value");
    }
  }
}

AudioSignal read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAV file: " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) {
    throw IoError("not a RIFF file: " + path);
  }
  read_le<std::uint32_t>(in);  // riff size, unused
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) {
    throw IoError("not a WAVE file: " + path);
  }

  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;

  AudioSignal out;
  while (in.read(tag, 4)) {
    const std::uint32_t chunk_size = read_le<std::uint32_t>(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format = read_le<std::uint16_t>(in);
      channels = read_le<std::uint16_t>(in);
      rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      bits = read_le<std::uint16_t>(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw IoError("WAV data chunk before fmt chunk: " + path);
      if (channels != 1) {
        throw InvalidArgumentError("WAV must be mono, got " +
                                   std::to_string(channels) + " channels: " + path);
      }
      if (format == kFormatPcm && bits == 16) {
        const std::size_t n = chunk_size / 2;
        out.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          out.samples[i] = read_le<std::int16_t>(in) / 32768.0;
        }
      } else if (format == kFormatIeeeFloat && bits == 32) {
        const std::size_t n = chunk_size / 4;
        out.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          out.samples[i] = static_cast<double>(read_le<float>(in));
        }
      } else {
        throw InvalidArgumentError("unsupported WAV encoding (format=" +
                                   std::to_string(format) + ", bits=" +
                                   std::to_string(bits) + "): " + path);
      }
      if (!in) throw IoError("truncated WAV data chunk: " + path);
      out.sample_rate = static_cast<int>(rate);
      return out;
    } else {
      // Skip unknown chunk (word-aligned).
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw IoError("WAV file has no data chunk: " + path);
}

void write_wav(const std::string& path, const AudioSignal& signal,
               WavEncoding encoding) {
  signal.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create WAV file: " + path);

  const std::uint32_t n = static_cast<std::uint32_t>(signal.size());
  const std::uint16_t bytes_per_sample = encoding == WavEncoding::kPcm16 ? 2 : 4;
  const std::uint32_t data_bytes = n * bytes_per_sample;

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, encoding == WavEncoding::kPcm16 ? kFormatPcm
                                                               : kFormatIeeeFloat);
  write_le<std::uint16_t>(out, 1);  // mono
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(signal.sample_rate));
  write_le<std::uint32_t>(out,
                          static_cast<std::uint32_t>(signal.sample_rate) *
                              bytes_per_sample);
  write_le<std::uint16_t>(out, bytes_per_sample);
  write_le<std::uint16_t>(out, static_cast<std::uint16_t>(8 * bytes_per_sample));
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_bytes);

  if (encoding == WavEncoding::kPcm16) {
    for (double s : signal.samples) {
      const double clamped = std::clamp(s, -1.0, 1.0);
      write_le<std::int16_t>(
          out, static_cast<std::int16_t>(std::lrint(clamped * 32767.0)));
    }
  } else {
    for (double s : signal.samples) {
      write_le<float>(out, static_cast<float>(s));
    }
  }
  if (!out) throw IoError("short write to WAV file: " + path);
}

}  // namespace revtk
