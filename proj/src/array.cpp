// beamdiar/array.cpp
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

#include "beamdiar/array.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "beamdiar/error.hpp"

namespace beamdiar {

namespace {
constexpr double kPi = std::numbers::pi;
}

ArrayGeometry::ArrayGeometry(Eigen::MatrixX2d positions, double speed_of_sound)
    : positions_(std::move(positions)), speed_of_sound_(speed_of_sound) {
  // A single mic (degenerate beamformer) is allowed programmatically;
  // the file loader insists on M >= 2.
  if (positions_.rows() < 1) {
    throw DimensionError("array geometry needs at least one mic");
  }
  if (speed_of_sound_ <= 0.0) {
    throw FormatError("speed of sound must be positive");
  }
  for (Eigen::Index a = 0; a < positions_.rows(); ++a) {
    for (Eigen::Index b = a + 1; b < positions_.rows(); ++b) {
      if ((positions_.row(a) - positions_.row(b)).norm() == 0.0) {
        throw FormatError("mic positions must be pairwise distinct");
      }
    }
  }
  positions_.rowwise() -= positions_.colwise().mean();
}

ArrayGeometry ArrayGeometry::uniform_circular(int mic_count, double radius_m,
                                              double speed_of_sound) {
  if (mic_count < 2) throw DimensionError("circular array needs >= 2 mics");
  if (radius_m <= 0.0) throw FormatError("radius must be positive");
  Eigen::MatrixX2d pos(mic_count, 2);
  for (int m = 0; m < mic_count; ++m) {
    double phi = 2.0 * kPi * m / mic_count;
    pos(m, 0) = radius_m * std::cos(phi);
    pos(m, 1) = radius_m * std::sin(phi);
  }
  return ArrayGeometry(std::move(pos), speed_of_sound);
}

ArrayGeometry ArrayGeometry::load(const std::string &path,
                                  double speed_of_sound) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open geometry file: " + path);
  std::vector<std::array<double, 2>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double x, y;
    if (!(ss >> x)) continue;
    if (!(ss >> y)) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": expected `x_meters y_meters`");
    }
    rows.push_back({x, y});
  }
  if (rows.size() < 2) {
    throw FormatError(path + ": geometry file needs at least two mics");
  }
  Eigen::MatrixX2d pos(static_cast<Eigen::Index>(rows.size()), 2);
  for (std::size_t m = 0; m < rows.size(); ++m) {
    pos(static_cast<Eigen::Index>(m), 0) = rows[m][0];
    pos(static_cast<Eigen::Index>(m), 1) = rows[m][1];
  }
  return ArrayGeometry(std::move(pos), speed_of_sound);
}

double ArrayGeometry::delay(int mic, double theta) const {
  if (mic < 0 || mic >= mic_count()) throw BoundsError("mic index out of range");
  const double ux = std::cos(theta);
  const double uy = std::sin(theta);
  return -(positions_(mic, 0) * ux + positions_(mic, 1) * uy) / speed_of_sound_;
}

DirectionGrid::DirectionGrid(int direction_count) {
  if (direction_count < 2) {
    throw DimensionError("direction grid needs at least 2 angles");
  }
  angles.resize(static_cast<std::size_t>(direction_count));
  for (int i = 0; i < direction_count; ++i) {
    angles[static_cast<std::size_t>(i)] = 2.0 * kPi * i / direction_count;
  }
}

SteeringVector steering(const ArrayGeometry &geometry, double theta,
                        double omega) {
  if (omega < 0.0) throw BoundsError("steering frequency must be >= 0");
  SteeringVector sv;
  sv.angle = theta;
  sv.omega = omega;
  sv.entries.resize(geometry.mic_count());
  for (int m = 0; m < geometry.mic_count(); ++m) {
    sv.entries(m) = std::polar(1.0, -omega * geometry.delay(m, theta));
  }
  return sv;
}

Eigen::MatrixXcd steering_matrix(const ArrayGeometry &geometry,
                                 const DirectionGrid &grid,
                                 const std::vector<double> &omegas) {
  if (omegas.empty()) throw DimensionError("steering_matrix needs frequencies");
  const int N = grid.size();
  const auto L = static_cast<Eigen::Index>(omegas.size());
  Eigen::MatrixXcd z(L * N, geometry.mic_count());
  for (Eigen::Index l = 0; l < L; ++l) {
    for (int i = 0; i < N; ++i) {
      z.row(l * N + i) =
          steering(geometry, grid.angles[static_cast<std::size_t>(i)],
                   omegas[static_cast<std::size_t>(l)])
              .entries.transpose();
    }
  }
  return z;
}

}  // namespace beamdiar
