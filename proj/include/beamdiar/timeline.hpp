// beamdiar/timeline.hpp
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

#ifndef BEAMDIAR_TIMELINE_HPP_
#define BEAMDIAR_TIMELINE_HPP_

#include <string>
#include <vector>

namespace beamdiar {

struct Interval {
  double onset = 0.0;
  double offset = 0.0;

  double duration() const { return offset - onset; }
  bool intersects(const Interval &o) const {
    return onset < o.offset && o.onset < offset;
  }
};

/// Set of non-overlapping, sorted, merged intervals on the time axis.
/// Used for VAD spans, overlap regions and scoring arithmetic.
class Timeline {
 public:
  Timeline() = default;
  explicit Timeline(std::vector<Interval> intervals);

  void add(Interval iv);

  const std::vector<Interval> &intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  double duration() const;
  bool contains(double t) const;

  Timeline intersect(const Timeline &other) const;
  Timeline unite(const Timeline &other) const;
  /// Set difference: parts of this timeline not covered by `other`.
  Timeline subtract(const Timeline &other) const;
  /// Clip all intervals to [lo, hi]; empty results are dropped.
  Timeline clip(double lo, double hi) const;

 private:
  void normalize();
  std::vector<Interval> intervals_;
};

/// One labeled speech region of a diarization annotation.
struct Region {
  std::string speaker;
  double onset = 0.0;
  double offset = 0.0;
};

/// Diarization hypothesis or reference for one recording. Regions of one
/// speaker are merged and non-overlapping after normalize().
struct Annotation {
  std::string recording_id;
  std::vector<Region> regions;

  /// Merge overlapping/abutting same-speaker regions, sort by
  /// (onset, speaker), drop empty regions.
  void normalize();

  /// Per-speaker merged timeline.
  Timeline speaker_timeline(const std::string &speaker) const;
  /// Union of all speech of all speakers.
  Timeline support() const;
  std::vector<std::string> speakers() const;
};

/// Overlap timeline file: one `onset offset` pair per line, seconds.
Timeline load_overlap_timeline(const std::string &path);
void save_overlap_timeline(const Timeline &timeline, const std::string &path);

}  // namespace beamdiar

#endif  // BEAMDIAR_TIMELINE_HPP_
