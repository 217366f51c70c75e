// Copyright 2026 The spurtee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPURTEE_ERRORS_HPP
#define SPURTEE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spurtee {

/// Malformed input: bad labels, shapes, non-isometries, unparsable files.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

/// A computation would exceed the configured amplitude budget.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& message) : std::runtime_error(message) {}
};

/// Two routes that must agree did not, or a numerical decomposition failed.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& message) : std::runtime_error(message) {}
};

/// Upper bound on the number of complex entries any single dense object may
/// hold. The default admits the 12-qubit ring reduction (4096 x 4096).
struct ResourceCaps {
  std::uint64_t max_amplitudes = std::uint64_t{1} << 24;

  void check(std::uint64_t entries, const std::string& what) const;
};

/// Numerical thresholds shared by the library. Defaults are the values the
/// acceptance suite pins.
struct Tolerances {
  double rank = 1e-9;         // relative singular-value cut for spans and null spaces
  double span = 1e-8;         // span containment residual
  double conditional = 1e-9;  // conditional-expectation residuals
  double saturation = 1e-8;   // entropy-equality residuals
  double cmi = 1e-9;          // CMI agreement and positivity
  double logical = 1e-8;      // least-squares residual for logical operators
};

}  // namespace spurtee

#endif  // SPURTEE_ERRORS_HPP
