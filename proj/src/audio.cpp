// beamdiar/audio.cpp
//
// Copyright (c) 2026 The beamdiar authors
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

#include "beamdiar/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>

#include "beamdiar/error.hpp"

namespace beamdiar {

namespace {

constexpr double kPi = std::numbers::pi;

// Little-endian readers; WAV is LE by definition and every platform we
// target is LE, but go through memcpy to stay alignment-safe.
template <typename T>
T read_le(const unsigned char *p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

template <typename T>
void write_le(std::ofstream &out, T v) {
  out.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

}  // namespace

void MultiChannelAudio::validate() const {
  if (samples.rows() < 1 || samples.cols() < 1) {
    throw DimensionError("audio must have at least one sample and channel");
  }
  if (sample_rate <= 0) throw FormatError("sample rate must be positive");
  if (!samples.allFinite()) throw FormatError("audio contains non-finite samples");
}

MultiChannelAudio MultiChannelAudio::crop(double onset, double offset) const {
  if (onset < 0.0 || offset > duration() + 1e-9 || offset <= onset) {
    throw BoundsError("crop interval [" + std::to_string(onset) + ", " +
                      std::to_string(offset) + "] outside recording of " +
                      std::to_string(duration()) + " s");
  }
  auto t0 = static_cast<Eigen::Index>(std::llround(onset * sample_rate));
  auto t1 = static_cast<Eigen::Index>(std::llround(offset * sample_rate));
  t1 = std::min(t1, samples.rows());
  t0 = std::min(t0, t1 - 1);
  MultiChannelAudio out;
  out.sample_rate = sample_rate;
  out.samples = samples.middleRows(t0, t1 - t0);
  return out;
}

MultiChannelAudio load_wav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open wav file: " + path);
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
    throw FormatError("not a RIFF/WAVE file: " + path);
  }

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const unsigned char *pcm = nullptr;
  std::size_t pcm_bytes = 0;

  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const char *id = reinterpret_cast<const char *>(data.data() + pos);
    uint32_t chunk_size = read_le<uint32_t>(data.data() + pos + 4);
    std::size_t body = pos + 8;
    if (body + chunk_size > data.size()) {
      throw FormatError("truncated chunk in wav file: " + path);
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError("malformed fmt chunk: " + path);
      format = read_le<uint16_t>(data.data() + body);
      channels = read_le<uint16_t>(data.data() + body + 2);
      rate = read_le<uint32_t>(data.data() + body + 4);
      bits = read_le<uint16_t>(data.data() + body + 14);
    } else if (std::memcmp(id, "data", 4) == 0) {
      pcm = data.data() + body;
      pcm_bytes = chunk_size;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }
  if (pcm == nullptr || channels == 0 || rate == 0) {
    throw FormatError("missing fmt or data chunk: " + path);
  }

  const bool pcm16 = (format == 1 && bits == 16);
  const bool float32 = (format == 3 && bits == 32);
  if (!pcm16 && !float32) {
    throw FormatError("unsupported wav encoding (need PCM16 or float32): " +
                      path);
  }

  std::size_t bytes_per_sample = bits / 8;
  std::size_t total = pcm_bytes / (bytes_per_sample * channels);
  if (total == 0) throw FormatError("empty data chunk: " + path);

  MultiChannelAudio audio;
  audio.sample_rate = static_cast<int>(rate);
  audio.samples.resize(static_cast<Eigen::Index>(total), channels);
  for (std::size_t t = 0; t < total; ++t) {
    for (std::size_t m = 0; m < channels; ++m) {
      const unsigned char *p = pcm + (t * channels + m) * bytes_per_sample;
      double v;
      if (pcm16) {
        v = read_le<int16_t>(p) / 32768.0;
      } else {
        v = read_le<float>(p);
      }
      audio.samples(static_cast<Eigen::Index>(t),
                    static_cast<Eigen::Index>(m)) = v;
    }
  }
  audio.validate();
  return audio;
}

void save_wav(const MultiChannelAudio &audio, const std::string &path,
              WavEncoding encoding) {
  audio.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write wav file: " + path);

  const auto frames = static_cast<uint32_t>(audio.samples.rows());
  const auto channels = static_cast<uint16_t>(audio.samples.cols());
  const uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : 32;
  const uint16_t fmt = encoding == WavEncoding::kPcm16 ? 1 : 3;
  const uint32_t byte_rate = audio.sample_rate * channels * bits / 8;
  const uint32_t data_bytes = frames * channels * bits / 8;

  out.write("RIFF", 4);
  write_le<uint32_t>(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<uint32_t>(out, 16);
  write_le<uint16_t>(out, fmt);
  write_le<uint16_t>(out, channels);
  write_le<uint32_t>(out, static_cast<uint32_t>(audio.sample_rate));
  write_le<uint32_t>(out, byte_rate);
  write_le<uint16_t>(out, static_cast<uint16_t>(channels * bits / 8));
  write_le<uint16_t>(out, bits);
  out.write("data", 4);
  write_le<uint32_t>(out, data_bytes);

  for (uint32_t t = 0; t < frames; ++t) {
    for (uint16_t m = 0; m < channels; ++m) {
      double v = audio.samples(t, m);
      if (encoding == WavEncoding::kPcm16) {
        double scaled = std::round(v * 32768.0);
        scaled = std::clamp(scaled, -32768.0, 32767.0);
        write_le<int16_t>(out, static_cast<int16_t>(scaled));
      } else {
        write_le<float>(out, static_cast<float>(v));
      }
    }
  }
}

Eigen::Index frame_count(Eigen::Index total_samples, const FrameGrid &grid) {
  if (grid.frame_shift <= 0 || grid.frame_shift > grid.frame_length) {
    throw DimensionError("frame grid requires 0 < shift <= length");
  }
  if (grid.frame_length > total_samples) {
    throw BoundsError("frame length " + std::to_string(grid.frame_length) +
                      " exceeds signal length " + std::to_string(total_samples));
  }
  return (total_samples - grid.frame_length) / grid.frame_shift + 1;
}

std::vector<Eigen::MatrixXd> frame_signal(const MultiChannelAudio &audio,
                                          const FrameGrid &grid) {
  const Eigen::Index n = frame_count(audio.samples.rows(), grid);
  Eigen::VectorXd window = Eigen::VectorXd::Ones(grid.frame_length);
  if (grid.window == WindowKind::kHann) {
    // Periodic Hann: sums to one at 50% overlap.
    for (int t = 0; t < grid.frame_length; ++t) {
      window(t) = 0.5 * (1.0 - std::cos(2.0 * kPi * t / grid.frame_length));
    }
  }
  std::vector<Eigen::MatrixXd> frames;
  frames.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXd frame =
        audio.samples.middleRows(i * grid.frame_shift, grid.frame_length);
    frame.array().colwise() *= window.array();
    frames.push_back(std::move(frame));
  }
  return frames;
}

Spectrum dft(const Eigen::VectorXd &frame,
             const std::vector<double> &bin_frequencies) {
  if (bin_frequencies.empty()) throw DimensionError("dft needs at least one bin");
  for (std::size_t l = 0; l < bin_frequencies.size(); ++l) {
    double w = bin_frequencies[l];
    if (w <= 0.0 || w > kPi + 1e-12) {
      throw BoundsError("bin frequency must lie in (0, pi]");
    }
    if (l > 0 && w <= bin_frequencies[l - 1]) {
      throw FormatError("bin frequencies must be strictly increasing");
    }
  }
  Spectrum spec;
  spec.bin_frequencies = bin_frequencies;
  spec.bins.resize(bin_frequencies.size());
  const Eigen::Index T = frame.size();
  for (std::size_t l = 0; l < bin_frequencies.size(); ++l) {
    const double w = bin_frequencies[l];
    std::complex<double> acc(0.0, 0.0);
    for (Eigen::Index t = 0; t < T; ++t) {
      acc += frame(t) * std::polar(1.0, -w * static_cast<double>(t));
    }
    spec.bins[l] = acc;
  }
  return spec;
}

Spectrum dft(const Eigen::VectorXd &frame) {
  const Eigen::Index T = frame.size();
  if (T < 2) throw DimensionError("full-grid dft needs at least 2 samples");
  std::vector<double> freqs;
  freqs.reserve(static_cast<std::size_t>(T / 2));
  for (Eigen::Index k = 1; k <= T / 2; ++k) {
    freqs.push_back(2.0 * kPi * static_cast<double>(k) / static_cast<double>(T));
  }
  return dft(frame, freqs);
}

Eigen::VectorXd idft(const Spectrum &spectrum, double dc_term,
                     Eigen::Index length) {
  const auto L = static_cast<Eigen::Index>(spectrum.bins.size());
  if (L != length / 2) {
    throw DimensionError("idft requires the full one-sided grid of the frame");
  }
  Eigen::VectorXd x = Eigen::VectorXd::Constant(length, dc_term);
  const bool even = (length % 2 == 0);
  for (Eigen::Index k = 0; k < L; ++k) {
    const double w = spectrum.bin_frequencies[static_cast<std::size_t>(k)];
    const std::complex<double> X = spectrum.bins[static_cast<std::size_t>(k)];
    const bool nyquist = even && (k == L - 1);
    const double scale = nyquist ? 1.0 : 2.0;
    for (Eigen::Index t = 0; t < length; ++t) {
      x(t) += scale * (X * std::polar(1.0, w * static_cast<double>(t))).real();
    }
  }
  return x / static_cast<double>(length);
}

}  // namespace beamdiar
