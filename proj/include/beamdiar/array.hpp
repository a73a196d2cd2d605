// beamdiar/array.hpp
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

#ifndef BEAMDIAR_ARRAY_HPP_
#define BEAMDIAR_ARRAY_HPP_

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace beamdiar {

/// Planar microphone array. Positions in meters, azimuth-only far-field
/// model. Steering phases are referenced to the array centroid, so a
/// global translation of all positions leaves them unchanged.
class ArrayGeometry {
 public:
  /// positions: M x 2 (x, y in meters), pairwise distinct.
  ArrayGeometry(Eigen::MatrixX2d positions, double speed_of_sound = 343.0);

  /// Uniform circular array: mic m at azimuth 2*pi*m/M on a circle.
  static ArrayGeometry uniform_circular(int mic_count, double radius_m,
                                        double speed_of_sound = 343.0);

  /// Plain-text geometry file: one `x_meters y_meters` line per mic,
  /// `#` starts a comment. Requires at least two mics.
  static ArrayGeometry load(const std::string &path,
                            double speed_of_sound = 343.0);

  int mic_count() const { return static_cast<int>(positions_.rows()); }
  const Eigen::MatrixX2d &positions() const { return positions_; }
  double speed_of_sound() const { return speed_of_sound_; }

  /// Arrival delay of mic m for a plane wave from azimuth theta:
  /// tau_m = -(p_m . u(theta)) / c, p_m centroid-referenced,
  /// u(theta) = (cos theta, sin theta) pointing at the source.
  double delay(int mic, double theta) const;

 private:
  Eigen::MatrixX2d positions_;  // centroid-referenced
  double speed_of_sound_;
};

/// N look directions theta_i = 2*pi*i/N, i = 0..N-1.
struct DirectionGrid {
  explicit DirectionGrid(int direction_count);

  int size() const { return static_cast<int>(angles.size()); }
  std::vector<double> angles;  // radians, strictly increasing in [0, 2*pi)
};

/// Per-mic complex phases a plane wave from `angle` imprints at angular
/// frequency `omega` (rad/s). Entries are unit modulus.
struct SteeringVector {
  Eigen::VectorXcd entries;  // M
  double angle = 0.0;        // radians
  double omega = 0.0;        // rad/s
};

/// z_m = exp(-j * omega * tau_m(theta)). omega in rad/s, omega >= 0.
SteeringVector steering(const ArrayGeometry &geometry, double theta,
                        double omega);

/// Stacked steering rows for all (direction, frequency) pairs:
/// (N*L) x M complex, direction-major within each frequency block, i.e.
/// row index = l * N + i for frequency l and direction i.
Eigen::MatrixXcd steering_matrix(const ArrayGeometry &geometry,
                                 const DirectionGrid &grid,
                                 const std::vector<double> &omegas);

}  // namespace beamdiar

#endif  // BEAMDIAR_ARRAY_HPP_
