// beamdiar/fsb.cpp
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

#include "beamdiar/fsb.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>

#include "beamdiar/error.hpp"

namespace beamdiar {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double angle) {
  double a = std::fmod(angle + kPi, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a - kPi;
}

template <typename T>
void write_le(std::ofstream &out, T v) {
  out.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

template <typename T>
T read_le(std::ifstream &in) {
  T v;
  in.read(reinterpret_cast<char *>(&v), sizeof(T));
  if (!in) throw FormatError("truncated filter bank file");
  return v;
}

}  // namespace

double DesiredResponse::evaluate(double dtheta) const {
  if (main_lobe_half_width <= 0.0 || main_lobe_half_width >= kPi) {
    throw FormatError("desired response half-width must lie in (0, pi)");
  }
  const double d = std::abs(wrap_pi(dtheta));
  switch (shape) {
    case Shape::kBoxcar:
      return d <= main_lobe_half_width ? 1.0 : 0.0;
    case Shape::kRaisedCosine:
      if (d >= main_lobe_half_width) return 0.0;
      return 0.5 * (1.0 + std::cos(kPi * d / main_lobe_half_width));
  }
  return 0.0;
}

std::vector<double> uniform_frequencies(double f_lo_hz, double f_hi_hz,
                                        int count) {
  if (count < 1) throw DimensionError("frequency grid needs at least one bin");
  if (f_lo_hz <= 0.0 || f_hi_hz < f_lo_hz) {
    throw FormatError("frequency band must satisfy 0 < f_lo <= f_hi");
  }
  std::vector<double> f(static_cast<std::size_t>(count));
  if (count == 1) {
    f[0] = 0.5 * (f_lo_hz + f_hi_hz);
    return f;
  }
  for (int l = 0; l < count; ++l) {
    f[static_cast<std::size_t>(l)] =
        f_lo_hz + (f_hi_hz - f_lo_hz) * l / (count - 1);
  }
  return f;
}

FilterDesigner::FilterDesigner(const ArrayGeometry &geometry,
                               const DirectionGrid &grid,
                               std::vector<double> frequencies_hz,
                               int sample_rate, int order,
                               double regularization)
    : geometry_(geometry),
      grid_(grid),
      frequencies_hz_(std::move(frequencies_hz)),
      sample_rate_(sample_rate),
      order_(order),
      regularization_(regularization),
      bulk_delay_(0.5 * (order - 1)) {
  if (order_ < 1) throw DimensionError("filter order must be >= 1");
  if (regularization_ < 0.0) throw FormatError("regularization must be >= 0");
  if (sample_rate_ <= 0) throw FormatError("sample rate must be positive");
  if (frequencies_hz_.empty()) {
    throw DimensionError("designer needs at least one frequency");
  }
  for (double f : frequencies_hz_) {
    if (f < 0.0 || f > 0.5 * sample_rate_) {
      throw BoundsError("design frequency outside [0, Nyquist]");
    }
  }

  const int M = geometry_.mic_count();
  const int N = grid_.size();
  const auto L = static_cast<Eigen::Index>(frequencies_hz_.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(M) * order_;

  basis_.resize(L * N, cols);
  for (Eigen::Index l = 0; l < L; ++l) {
    const double f = frequencies_hz_[static_cast<std::size_t>(l)];
    const double omega_d = 2.0 * kPi * f / sample_rate_;  // rad/sample
    const double omega = 2.0 * kPi * f;                   // rad/s
    for (int i = 0; i < N; ++i) {
      const Eigen::Index row = l * N + i;
      const SteeringVector sv =
          steering(geometry_, grid_.angles[static_cast<std::size_t>(i)], omega);
      for (int m = 0; m < M; ++m) {
        for (int k = 0; k < order_; ++k) {
          basis_(row, static_cast<Eigen::Index>(m) * order_ + k) =
              sv.entries(m) * std::polar(1.0, -omega_d * k);
        }
      }
    }
  }

  // Real normal matrix: Re(B^H B) = A^T A for the stacked [Re; Im] system.
  normal_ = (basis_.adjoint() * basis_).real();
  normal_.diagonal().array() += regularization_;
  normal_ldlt_.compute(normal_);
  if (normal_ldlt_.info() != Eigen::Success) {
    throw NumericalError("normal matrix factorization failed");
  }
  const Eigen::VectorXd d = normal_ldlt_.vectorD();
  const double dmax = d.cwiseAbs().maxCoeff();
  if (dmax <= 0.0 || d.minCoeff() < -1e-9 * dmax ||
      d.cwiseAbs().minCoeff() < 1e-13 * dmax) {
    throw NumericalError(
        "singular normal matrix; pass regularization > 0 to ridge the design");
  }
}

Eigen::VectorXcd FilterDesigner::target(double look_direction,
                                        const DesiredResponse &desired) const {
  const int N = grid_.size();
  const auto L = static_cast<Eigen::Index>(frequencies_hz_.size());
  Eigen::VectorXcd d(L * N);
  for (Eigen::Index l = 0; l < L; ++l) {
    const double omega_d =
        2.0 * kPi * frequencies_hz_[static_cast<std::size_t>(l)] / sample_rate_;
    const std::complex<double> phase = std::polar(1.0, -omega_d * bulk_delay_);
    for (int i = 0; i < N; ++i) {
      const double fd = desired.evaluate(
          grid_.angles[static_cast<std::size_t>(i)] - look_direction);
      d(l * N + i) = fd * phase;
    }
  }
  return d;
}

Eigen::MatrixXd FilterDesigner::design(double look_direction,
                                       const DesiredResponse &desired) const {
  const Eigen::VectorXcd d = target(look_direction, desired);
  // A^T d for the stacked real system equals Re(B^H d).
  const Eigen::VectorXd rhs = (basis_.adjoint() * d).real();
  const Eigen::VectorXd a = normal_ldlt_.solve(rhs);
  const int M = geometry_.mic_count();
  Eigen::MatrixXd coeffs(M, order_);
  for (int m = 0; m < M; ++m) {
    coeffs.row(m) = a.segment(static_cast<Eigen::Index>(m) * order_, order_);
  }
  return coeffs;
}

double FilterDesigner::objective(const Eigen::MatrixXd &coefficients,
                                 double look_direction,
                                 const DesiredResponse &desired) const {
  if (coefficients.rows() != geometry_.mic_count() ||
      coefficients.cols() != order_) {
    throw DimensionError("coefficient shape does not match the designer");
  }
  Eigen::VectorXd a(coefficients.size());
  for (int m = 0; m < coefficients.rows(); ++m) {
    a.segment(static_cast<Eigen::Index>(m) * order_, order_) =
        coefficients.row(m);
  }
  const Eigen::VectorXcd d = target(look_direction, desired);
  const double fit = (basis_ * a - d).squaredNorm();
  return fit + regularization_ * a.squaredNorm();
}

double FilterDesigner::normal_equation_residual(
    const Eigen::MatrixXd &coefficients, double look_direction,
    const DesiredResponse &desired) const {
  Eigen::VectorXd a(coefficients.size());
  for (int m = 0; m < coefficients.rows(); ++m) {
    a.segment(static_cast<Eigen::Index>(m) * order_, order_) =
        coefficients.row(m);
  }
  const Eigen::VectorXcd d = target(look_direction, desired);
  const Eigen::VectorXd rhs = (basis_.adjoint() * d).real();
  return (normal_ * a - rhs).norm();
}

Eigen::MatrixXd design_filter(const ArrayGeometry &geometry,
                              const DirectionGrid &grid,
                              const std::vector<double> &frequencies_hz,
                              int sample_rate, double look_direction,
                              const DesiredResponse &desired, int order,
                              double regularization) {
  FilterDesigner designer(geometry, grid, frequencies_hz, sample_rate, order,
                          regularization);
  return designer.design(look_direction, desired);
}

FilterBank design_bank(const ArrayGeometry &geometry, const DirectionGrid &grid,
                       const std::vector<double> &frequencies_hz,
                       int sample_rate, const DesiredResponse &desired,
                       int order, double regularization) {
  FilterDesigner designer(geometry, grid, frequencies_hz, sample_rate, order,
                          regularization);
  FilterBank bank;
  bank.look_directions = grid.angles;
  bank.coefficients.reserve(grid.angles.size());
  for (double theta : grid.angles) {
    bank.coefficients.push_back(designer.design(theta, desired));
  }
  return bank;
}

void FilterBank::save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write filter bank: " + path);
  out.write("FSB1", 4);
  write_le<uint32_t>(out, static_cast<uint32_t>(direction_count()));
  write_le<uint32_t>(out, static_cast<uint32_t>(mic_count()));
  write_le<uint32_t>(out, static_cast<uint32_t>(order()));
  for (const auto &coeffs : coefficients) {
    for (Eigen::Index m = 0; m < coeffs.rows(); ++m) {
      for (Eigen::Index k = 0; k < coeffs.cols(); ++k) {
        write_le<double>(out, coeffs(m, k));
      }
    }
  }
}

FilterBank FilterBank::load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open filter bank: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "FSB1", 4) != 0) {
    throw FormatError("bad filter bank magic (want FSB1): " + path);
  }
  const auto N = read_le<uint32_t>(in);
  const auto M = read_le<uint32_t>(in);
  const auto K = read_le<uint32_t>(in);
  if (N < 1 || M < 1 || K < 1) {
    throw FormatError("degenerate filter bank dimensions: " + path);
  }
  FilterBank bank;
  bank.coefficients.reserve(N);
  for (uint32_t n = 0; n < N; ++n) {
    Eigen::MatrixXd coeffs(M, K);
    for (uint32_t m = 0; m < M; ++m) {
      for (uint32_t k = 0; k < K; ++k) {
        coeffs(m, k) = read_le<double>(in);
      }
    }
    if (!coeffs.allFinite()) {
      throw FormatError("non-finite filter coefficients: " + path);
    }
    bank.coefficients.push_back(std::move(coeffs));
  }
  bank.look_directions.resize(N);
  for (uint32_t n = 0; n < N; ++n) {
    bank.look_directions[n] = 2.0 * kPi * n / N;
  }
  return bank;
}

Eigen::VectorXd apply_filter_and_sum(const MultiChannelAudio &audio,
                                     const Eigen::MatrixXd &coefficients) {
  if (audio.channel_count() != coefficients.rows()) {
    throw DimensionError("channel count mismatch: audio has " +
                         std::to_string(audio.channel_count()) +
                         ", coefficients expect " +
                         std::to_string(coefficients.rows()));
  }
  const Eigen::Index T = audio.frame_count();
  const Eigen::Index M = coefficients.rows();
  const Eigen::Index K = coefficients.cols();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(T);
  for (Eigen::Index m = 0; m < M; ++m) {
    const auto x = audio.samples.col(m);
    for (Eigen::Index k = 0; k < K; ++k) {
      const double a = coefficients(m, k);
      if (a == 0.0) continue;
      y.tail(T - k) += a * x.head(T - k);
    }
  }
  return y;
}

std::complex<double> spatial_response(const Eigen::MatrixXd &coefficients,
                                      const ArrayGeometry &geometry,
                                      double theta_eval, double frequency_hz,
                                      int sample_rate) {
  if (coefficients.rows() != geometry.mic_count()) {
    throw DimensionError("coefficient rows must match mic count");
  }
  if (sample_rate <= 0) throw FormatError("sample rate must be positive");
  const double omega_d = 2.0 * kPi * frequency_hz / sample_rate;
  const double omega = 2.0 * kPi * frequency_hz;
  const SteeringVector sv = steering(geometry, theta_eval, omega);
  std::complex<double> F(0.0, 0.0);
  for (Eigen::Index m = 0; m < coefficients.rows(); ++m) {
    std::complex<double> fir(0.0, 0.0);
    for (Eigen::Index k = 0; k < coefficients.cols(); ++k) {
      fir += coefficients(m, k) *
             std::polar(1.0, -omega_d * static_cast<double>(k));
    }
    F += fir * sv.entries(m);
  }
  return F;
}

}  // namespace beamdiar
