// beamdiar/timeline.cpp
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

#include "beamdiar/timeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "beamdiar/error.hpp"

namespace beamdiar {

Timeline::Timeline(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  normalize();
}

void Timeline::add(Interval iv) {
  intervals_.push_back(iv);
  normalize();
}

void Timeline::normalize() {
  std::vector<Interval> kept;
  kept.reserve(intervals_.size());
  for (const auto &iv : intervals_) {
    if (iv.offset > iv.onset) kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(), [](const Interval &a, const Interval &b) {
    return a.onset < b.onset || (a.onset == b.onset && a.offset < b.offset);
  });
  intervals_.clear();
  for (const auto &iv : kept) {
    if (!intervals_.empty() && iv.onset <= intervals_.back().offset) {
      intervals_.back().offset = std::max(intervals_.back().offset, iv.offset);
    } else {
      intervals_.push_back(iv);
    }
  }
}

double Timeline::duration() const {
  double total = 0.0;
  for (const auto &iv : intervals_) total += iv.duration();
  return total;
}

bool Timeline::contains(double t) const {
  for (const auto &iv : intervals_) {
    if (t >= iv.onset && t < iv.offset) return true;
    if (iv.onset > t) break;
  }
  return false;
}

Timeline Timeline::intersect(const Timeline &other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval &a = intervals_[i];
    const Interval &b = other.intervals_[j];
    double lo = std::max(a.onset, b.onset);
    double hi = std::min(a.offset, b.offset);
    if (hi > lo) out.push_back({lo, hi});
    if (a.offset < b.offset) {
      ++i;
    } else {
      ++j;
    }
  }
  return Timeline(std::move(out));
}

Timeline Timeline::unite(const Timeline &other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return Timeline(std::move(all));
}

Timeline Timeline::subtract(const Timeline &other) const {
  std::vector<Interval> out;
  for (const auto &iv : intervals_) {
    double cursor = iv.onset;
    for (const auto &cut : other.intervals_) {
      if (cut.offset <= cursor) continue;
      if (cut.onset >= iv.offset) break;
      if (cut.onset > cursor) out.push_back({cursor, cut.onset});
      cursor = std::max(cursor, cut.offset);
      if (cursor >= iv.offset) break;
    }
    if (cursor < iv.offset) out.push_back({cursor, iv.offset});
  }
  return Timeline(std::move(out));
}

Timeline Timeline::clip(double lo, double hi) const {
  std::vector<Interval> out;
  for (const auto &iv : intervals_) {
    double a = std::max(iv.onset, lo);
    double b = std::min(iv.offset, hi);
    if (b > a) out.push_back({a, b});
  }
  return Timeline(std::move(out));
}

void Annotation::normalize() {
  std::vector<Region> kept;
  kept.reserve(regions.size());
  for (const auto &r : regions) {
    if (r.offset > r.onset) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end(), [](const Region &a, const Region &b) {
    if (a.speaker != b.speaker) return a.speaker < b.speaker;
    return a.onset < b.onset;
  });
  std::vector<Region> merged;
  for (const auto &r : kept) {
    if (!merged.empty() && merged.back().speaker == r.speaker &&
        r.onset <= merged.back().offset) {
      merged.back().offset = std::max(merged.back().offset, r.offset);
    } else {
      merged.push_back(r);
    }
  }
  std::sort(merged.begin(), merged.end(), [](const Region &a, const Region &b) {
    if (a.onset != b.onset) return a.onset < b.onset;
    return a.speaker < b.speaker;
  });
  regions = std::move(merged);
}

Timeline Annotation::speaker_timeline(const std::string &speaker) const {
  std::vector<Interval> ivs;
  for (const auto &r : regions) {
    if (r.speaker == speaker) ivs.push_back({r.onset, r.offset});
  }
  return Timeline(std::move(ivs));
}

Timeline Annotation::support() const {
  std::vector<Interval> ivs;
  ivs.reserve(regions.size());
  for (const auto &r : regions) ivs.push_back({r.onset, r.offset});
  return Timeline(std::move(ivs));
}

std::vector<std::string> Annotation::speakers() const {
  std::set<std::string> uniq;
  for (const auto &r : regions) uniq.insert(r.speaker);
  return {uniq.begin(), uniq.end()};
}

Timeline load_overlap_timeline(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open overlap file: " + path);
  std::vector<Interval> ivs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    double onset, offset;
    if (!(ss >> onset)) continue;  // blank line
    if (!(ss >> offset)) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": expected `onset offset`");
    }
    if (offset <= onset) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": offset must exceed onset");
    }
    ivs.push_back({onset, offset});
  }
  return Timeline(std::move(ivs));
}

void save_overlap_timeline(const Timeline &timeline, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write overlap file: " + path);
  char buf[64];
  for (const auto &iv : timeline.intervals()) {
    std::snprintf(buf, sizeof(buf), "%.3f %.3f\n", iv.onset, iv.offset);
    out << buf;
  }
}

}  // namespace beamdiar
