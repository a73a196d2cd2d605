// beamdiar/error.hpp
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

#ifndef BEAMDIAR_ERROR_HPP_
#define BEAMDIAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace beamdiar {

// Base class for all beamdiar errors. CLI maps subclasses to exit codes:
// data errors -> 2, numerical failures -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed or unsupported input data (files, formats, values).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string &msg) : Error(msg) {}
};

// Shape or channel-count mismatch between operands.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string &msg) : Error(msg) {}
};

// Out-of-range interval or index.
class BoundsError : public Error {
 public:
  explicit BoundsError(const std::string &msg) : Error(msg) {}
};

// Conditioning or solver failure.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string &msg) : Error(msg) {}
};

}  // namespace beamdiar

#endif  // BEAMDIAR_ERROR_HPP_
