// beamdiar/fsb.hpp
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

#ifndef BEAMDIAR_FSB_HPP_
#define BEAMDIAR_FSB_HPP_

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "beamdiar/array.hpp"
#include "beamdiar/audio.hpp"

namespace beamdiar {

/// Target beam pattern: unit passband of the given half-width around the
/// look direction, zero stopband. Raised cosine tapers the passband edge
/// to reduce ripple.
struct DesiredResponse {
  enum class Shape { kBoxcar, kRaisedCosine };

  Shape shape = Shape::kBoxcar;
  double main_lobe_half_width = 0.0;  // radians, in (0, pi)

  /// F_d at angular offset dtheta from the look direction (wrapped to
  /// [-pi, pi]).
  double evaluate(double dtheta) const;
};

/// L uniformly spaced design frequencies in [f_lo, f_hi] Hz.
std::vector<double> uniform_frequencies(double f_lo_hz, double f_hi_hz, int count);

/// Designed filter-and-sum beamformer: one M x K real FIR set per look
/// direction.
struct FilterBank {
  std::vector<Eigen::MatrixXd> coefficients;  // N entries, each M x K
  std::vector<double> look_directions;        // radians, grid order

  int direction_count() const { return static_cast<int>(coefficients.size()); }
  int mic_count() const {
    return coefficients.empty() ? 0 : static_cast<int>(coefficients[0].rows());
  }
  int order() const {
    return coefficients.empty() ? 0 : static_cast<int>(coefficients[0].cols());
  }

  /// Binary format: magic `FSB1`, then N, M, K as u32 LE, then N*M*K
  /// f64 LE, direction-major, channel-minor, tap-innermost.
  void save(const std::string &path) const;
  static FilterBank load(const std::string &path);
};

/// Shared least-squares machinery for one (geometry, grid, band, order)
/// tuple. The normal matrix does not depend on the look direction, so a
/// bank design factorizes it once.
///
/// The design matches the FIR response against the desired pattern delayed
/// by (K-1)/2 taps, so the causal filters realize a linear-phase
/// approximation of the zero-phase target.
class FilterDesigner {
 public:
  FilterDesigner(const ArrayGeometry &geometry, const DirectionGrid &grid,
                 std::vector<double> frequencies_hz, int sample_rate,
                 int order, double regularization);

  /// Solve for the M x K coefficients of one look direction.
  Eigen::MatrixXd design(double look_direction,
                         const DesiredResponse &desired) const;

  /// Discretized design objective
  ///   sum_{l,i} |F_d(theta_i - theta_0) e^{-j w_l k0} - F(theta_i, w_l)|^2
  ///   + lambda ||a||^2
  /// evaluated for arbitrary coefficients.
  double objective(const Eigen::MatrixXd &coefficients, double look_direction,
                   const DesiredResponse &desired) const;

  /// Residual of the normal equations for the given solution, used to
  /// check optimality.
  double normal_equation_residual(const Eigen::MatrixXd &coefficients,
                                  double look_direction,
                                  const DesiredResponse &desired) const;

  int mic_count() const { return geometry_.mic_count(); }
  int order() const { return order_; }

 private:
  Eigen::VectorXcd target(double look_direction,
                          const DesiredResponse &desired) const;

  ArrayGeometry geometry_;
  DirectionGrid grid_;
  std::vector<double> frequencies_hz_;
  int sample_rate_;
  int order_;
  double regularization_;
  double bulk_delay_;            // taps, (K-1)/2
  Eigen::MatrixXcd basis_;       // (L*N) x (M*K) complex design basis
  Eigen::MatrixXd normal_;       // real normal matrix + lambda*I
  Eigen::LDLT<Eigen::MatrixXd> normal_ldlt_;
};

/// One-direction design. Returns M x K real coefficients minimizing the
/// discretized pattern-matching objective.
Eigen::MatrixXd design_filter(const ArrayGeometry &geometry,
                              const DirectionGrid &grid,
                              const std::vector<double> &frequencies_hz,
                              int sample_rate, double look_direction,
                              const DesiredResponse &desired, int order,
                              double regularization);

/// Full bank: row i designed for grid angle theta_i.
FilterBank design_bank(const ArrayGeometry &geometry, const DirectionGrid &grid,
                       const std::vector<double> &frequencies_hz,
                       int sample_rate, const DesiredResponse &desired,
                       int order, double regularization);

/// y(t) = sum_m sum_k a(m, k) x_m(t - k), zero history before t = 0.
/// Output has the input's length.
Eigen::VectorXd apply_filter_and_sum(const MultiChannelAudio &audio,
                                     const Eigen::MatrixXd &coefficients);

/// F(theta, w): FIR frequency response folded with the steering phases,
///   F = sum_m [sum_k a(m,k) e^{-j w_d k}] z_m(theta, Omega),
/// w_d = 2*pi*f/fs rad/sample, Omega = 2*pi*f rad/s. Equals the DFT at w_d
/// of apply_filter_and_sum run on a unit plane wave from theta_eval.
std::complex<double> spatial_response(const Eigen::MatrixXd &coefficients,
                                      const ArrayGeometry &geometry,
                                      double theta_eval, double frequency_hz,
                                      int sample_rate);

}  // namespace beamdiar

#endif  // BEAMDIAR_FSB_HPP_
