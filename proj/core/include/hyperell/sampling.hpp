// Copyright 2026 The hyperell Authors
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

#ifndef HYPERELL_SAMPLING_HPP
#define HYPERELL_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hyperell/binary_form.hpp"
#include "hyperell/config_aut.hpp"
#include "hyperell/moebius.hpp"

namespace hyperell {

// Deterministic random objects for tests, benchmarks and verification runs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n);
  /// Over Q: num/den with |num| <= height and 1 <= den <= height.
  Scalar scalar(const FieldTag& field, long long height = 30);
  Scalar nonzero(const FieldTag& field, long long height = 30);
  Matrix2 invertible_matrix(const FieldTag& field, long long height = 30);
  MoebiusMap moebius(const FieldTag& field, long long height = 30) { return MoebiusMap(invertible_matrix(field, height)); }
  /// Infinity with probability about 1/16.
  ProjectivePoint point(const FieldTag& field, long long height = 30);
  std::vector<ProjectivePoint> distinct_points(const FieldTag& field, unsigned n, long long height = 30);
  PointConfiguration configuration(const FieldTag& field, unsigned n, long long height = 30) {
    return PointConfiguration(field, distinct_points(field, n, height));
  }
  BinaryForm form(unsigned g, const FieldTag& field, long long height = 30);
  /// A form with 2g+2 distinct roots over the closure and nonzero top coefficient.
  BinaryForm smooth_form(unsigned g, const FieldTag& field, long long height = 30);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hyperell

#endif  // HYPERELL_SAMPLING_HPP
