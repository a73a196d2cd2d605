// beamdiar/svector.hpp
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

#ifndef BEAMDIAR_SVECTOR_HPP_
#define BEAMDIAR_SVECTOR_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "beamdiar/audio.hpp"
#include "beamdiar/fsb.hpp"
#include "beamdiar/timeline.hpp"

namespace beamdiar {

/// Spatial embedding: distribution of beamformed output energy over the
/// bank's N look directions. Nonnegative, sums to one.
struct SVector {
  Eigen::VectorXd weights;
};

/// Per-direction output energies of the bank on the given audio:
/// E_i = sum_t y_i(t)^2 with y_i = apply_filter_and_sum(audio, bank row i).
/// Computed blockwise as matrix products; agrees with the per-direction
/// filter to floating-point roundoff.
Eigen::VectorXd bank_energies(const MultiChannelAudio &audio,
                              const FilterBank &bank);

/// Normalize bank energies to a distribution. All-silent audio maps to
/// the uniform distribution. Requires at least 50 ms of audio.
SVector extract_svector(const MultiChannelAudio &audio, const FilterBank &bank);

/// Batched extraction over cropped segments (seconds, within the
/// recording). Order preserved.
std::vector<SVector> extract_svectors(const MultiChannelAudio &audio,
                                      const FilterBank &bank,
                                      const std::vector<Interval> &segments);

/// Text matrix format shared by s-vector and x-vector files:
/// first line `n D`, then n rows of D floats, row i <-> segment i.
Eigen::MatrixXd load_embedding_matrix(const std::string &path);
void save_embedding_matrix(const Eigen::MatrixXd &matrix,
                           const std::string &path);

}  // namespace beamdiar

#endif  // BEAMDIAR_SVECTOR_HPP_
