// beamdiar/svector.cpp
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

#include "beamdiar/svector.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "beamdiar/error.hpp"

namespace beamdiar {

Eigen::VectorXd bank_energies(const MultiChannelAudio &audio,
                              const FilterBank &bank) {
  if (audio.channel_count() != bank.mic_count()) {
    throw DimensionError("audio has " + std::to_string(audio.channel_count()) +
                         " channels, bank expects " +
                         std::to_string(bank.mic_count()));
  }
  const Eigen::Index T = audio.frame_count();
  const Eigen::Index M = bank.mic_count();
  const Eigen::Index K = bank.order();
  const Eigen::Index N = bank.direction_count();

  // Per-mic filter slices: A_m is N x K.
  std::vector<Eigen::MatrixXd> per_mic(static_cast<std::size_t>(M));
  for (Eigen::Index m = 0; m < M; ++m) {
    Eigen::MatrixXd A(N, K);
    for (Eigen::Index n = 0; n < N; ++n) {
      A.row(n) = bank.coefficients[static_cast<std::size_t>(n)].row(m);
    }
    per_mic[static_cast<std::size_t>(m)] = std::move(A);
  }

  Eigen::VectorXd energies = Eigen::VectorXd::Zero(N);
  const Eigen::Index block = 16384;
  Eigen::MatrixXd lagged;  // block x K
  Eigen::MatrixXd y;       // block x N
  for (Eigen::Index t0 = 0; t0 < T; t0 += block) {
    const Eigen::Index bt = std::min(block, T - t0);
    y.setZero(bt, N);
    lagged.resize(bt, K);
    for (Eigen::Index m = 0; m < M; ++m) {
      const auto x = audio.samples.col(m);
      for (Eigen::Index k = 0; k < K; ++k) {
        for (Eigen::Index i = 0; i < bt; ++i) {
          const Eigen::Index t = t0 + i - k;
          lagged(i, k) = t >= 0 ? x(t) : 0.0;
        }
      }
      y.noalias() += lagged * per_mic[static_cast<std::size_t>(m)].transpose();
    }
    energies += y.colwise().squaredNorm().transpose();
  }
  return energies;
}

SVector extract_svector(const MultiChannelAudio &audio,
                        const FilterBank &bank) {
  if (audio.duration() < 0.050) {
    throw BoundsError("segment too short for an s-vector (< 50 ms)");
  }
  Eigen::VectorXd energies = bank_energies(audio, bank);
  SVector sv;
  const double total = energies.sum();
  if (total <= 0.0) {
    sv.weights = Eigen::VectorXd::Constant(energies.size(),
                                           1.0 / energies.size());
  } else {
    sv.weights = energies / total;
  }
  return sv;
}

std::vector<SVector> extract_svectors(const MultiChannelAudio &audio,
                                      const FilterBank &bank,
                                      const std::vector<Interval> &segments) {
  const double total = audio.duration();
  std::vector<SVector> out;
  out.reserve(segments.size());
  for (const auto &seg : segments) {
    if (seg.onset < -1e-9 || seg.offset > total + 1e-9) {
      throw BoundsError("segment [" + std::to_string(seg.onset) + ", " +
                        std::to_string(seg.offset) +
                        "] outside recording of " + std::to_string(total) +
                        " s");
    }
    out.push_back(extract_svector(audio.crop(seg.onset, seg.offset), bank));
  }
  return out;
}

Eigen::MatrixXd load_embedding_matrix(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open embedding matrix: " + path);
  Eigen::Index n = 0, dim = 0;
  if (!(in >> n >> dim) || n < 0 || dim < 1) {
    throw FormatError(path + ": expected header `n D`");
  }
  Eigen::MatrixXd matrix(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (!(in >> matrix(i, j))) {
        throw FormatError(path + ": truncated at row " + std::to_string(i));
      }
    }
  }
  if (!matrix.allFinite()) {
    throw FormatError(path + ": non-finite embedding values");
  }
  return matrix;
}

void save_embedding_matrix(const Eigen::MatrixXd &matrix,
                           const std::string &path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write embedding matrix: " + path);
  out << matrix.rows() << " " << matrix.cols() << "\n";
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      out << matrix(i, j) << (j + 1 == matrix.cols() ? "\n" : " ");
    }
  }
}

}  // namespace beamdiar
