// beamdiar/audio.hpp
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

#ifndef BEAMDIAR_AUDIO_HPP_
#define BEAMDIAR_AUDIO_HPP_

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace beamdiar {

/// Multi-channel PCM audio. samples is T x M, amplitudes in [-1, 1].
struct MultiChannelAudio {
  Eigen::MatrixXd samples;  // T x M
  int sample_rate = 0;

  Eigen::Index frame_count() const { return samples.rows(); }
  Eigen::Index channel_count() const { return samples.cols(); }
  double duration() const {
    return static_cast<double>(samples.rows()) / sample_rate;
  }

  /// Crop to [onset, offset] seconds (sample-aligned, end exclusive).
  MultiChannelAudio crop(double onset, double offset) const;

  /// T >= 1, M >= 1, finite samples, positive rate.
  void validate() const;
};

enum class WindowKind { kRectangular, kHann };

struct FrameGrid {
  int frame_length = 400;
  int frame_shift = 160;
  WindowKind window = WindowKind::kRectangular;
};

/// One-sided spectrum: complex bins at strictly increasing digital
/// frequencies in (0, pi] rad/sample.
struct Spectrum {
  std::vector<std::complex<double>> bins;
  std::vector<double> bin_frequencies;  // rad/sample
};

/// Read a RIFF/WAVE file (PCM16 or IEEE float32, any channel count).
/// 16-bit samples are scaled by 1/32768.
MultiChannelAudio load_wav(const std::string &path);

enum class WavEncoding { kPcm16, kFloat32 };

void save_wav(const MultiChannelAudio &audio, const std::string &path,
              WavEncoding encoding = WavEncoding::kFloat32);

/// Slice a multi-channel signal into frames of grid.frame_length samples
/// every grid.frame_shift samples, window applied per channel. The final
/// partial frame is dropped. Throws if frame_length > T.
std::vector<Eigen::MatrixXd> frame_signal(const MultiChannelAudio &audio,
                                          const FrameGrid &grid);

/// Number of frames frame_signal will produce: floor((T - len)/shift) + 1.
Eigen::Index frame_count(Eigen::Index total_samples, const FrameGrid &grid);

/// DFT of a real frame evaluated at arbitrary digital frequencies
/// (rad/sample): X(w) = sum_t x[t] e^{-jwt}. O(T*L).
Spectrum dft(const Eigen::VectorXd &frame,
             const std::vector<double> &bin_frequencies);

/// DFT at the full one-sided grid w_k = 2*pi*k/T, k = 1..floor(T/2).
Spectrum dft(const Eigen::VectorXd &frame);

/// Inverse of the full-grid dft(). dc_term is sum_t x[t] (the k = 0
/// coefficient, which the one-sided Spectrum does not carry).
Eigen::VectorXd idft(const Spectrum &spectrum, double dc_term,
                     Eigen::Index length);

}  // namespace beamdiar

#endif  // BEAMDIAR_AUDIO_HPP_
