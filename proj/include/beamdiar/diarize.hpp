// beamdiar/diarize.hpp
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

#ifndef BEAMDIAR_DIARIZE_HPP_
#define BEAMDIAR_DIARIZE_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "beamdiar/timeline.hpp"

namespace beamdiar {

/// Segmentation window length and shift, both in seconds.
struct TimeScale {
  double window = 1.0;
  double shift = 0.5;
};

struct SegmentList {
  std::string recording_id;
  std::vector<Interval> intervals;  // sorted by onset
  TimeScale time_scale;
};

/// Tile each VAD interval with `window`-long segments every `shift`
/// seconds. A shorter final segment starting at the next shift position is
/// emitted whenever speech would otherwise be left uncovered, so the union
/// of the segments equals the VAD union exactly.
SegmentList uniform_segments(const Timeline &vad, double window, double shift);

/// Kaldi-style segments file: `<utt-id> <rec-id> <onset-s> <offset-s>`
/// per line. Grouped by recording in first-appearance order.
std::vector<SegmentList> load_segments(const std::string &path);
void save_segments(const std::vector<SegmentList> &lists,
                   const std::string &path);

enum class SimilarityKind { kSpeaker, kSpatial, kFused };

/// Symmetric n x n affinity with unit diagonal, entries in [-1, 1].
struct SimilarityMatrix {
  Eigen::MatrixXd values;
  SimilarityKind kind = SimilarityKind::kSpeaker;

  Eigen::Index size() const { return values.rows(); }
};

/// Pairwise cosine similarity of embedding rows. Throws on zero-norm rows
/// naming the offending segment index.
SimilarityMatrix cosine_similarity_matrix(const Eigen::MatrixXd &embeddings,
                                          SimilarityKind kind);

/// Paper default weight for combining speaker and spatial similarity.
inline constexpr double kDefaultFusionAlpha = 0.95;

/// Elementwise alpha * A_x + (1 - alpha) * A_s. Endpoints reproduce the
/// inputs bit-exactly.
SimilarityMatrix late_fuse(const SimilarityMatrix &speaker,
                           const SimilarityMatrix &spatial, double alpha);

struct ClusterLabels {
  std::vector<int> labels;  // in [0, cluster_count)
  int cluster_count = 0;
};

struct NmeScOptions {
  int max_speakers = 8;
  std::vector<double> p_grid = {0.05, 0.10, 0.15, 0.20, 0.25,
                                0.30, 0.35, 0.40, 0.45, 0.50};
};

/// Normalized-maximum-eigengap spectral clustering. For each binarization
/// fraction p: keep each row's top ceil(p*n) entries as a binary graph,
/// symmetrize by OR, build the unnormalized Laplacian and its ascending
/// eigenvalues; the NME ratio r(p) = p / (max_gap / lambda_max) picks p*,
/// the largest eigengap at p* picks the cluster count; segments are
/// embedded in the bottom eigenvectors, row-normalized, and k-means
/// clustered (deterministic farthest-point init, 100 iterations).
ClusterLabels nme_sc(const SimilarityMatrix &affinity,
                     const NmeScOptions &options = {});

/// Deterministic k-means used by nme_sc, exposed for reuse. Rows of
/// `points` are observations.
std::vector<int> kmeans_labels(const Eigen::MatrixXd &points, int k,
                               int iterations = 100);

/// Turn per-segment labels into a speaker timeline. Same-speaker
/// overlapping segments merge; a different-speaker conflict between
/// adjacent windows is cut at the midpoint of the overlap. Speakers are
/// named `spk<label>`.
Annotation assign_primary_labels(const SegmentList &segments,
                                 const ClusterLabels &labels);

}  // namespace beamdiar

#endif  // BEAMDIAR_DIARIZE_HPP_
