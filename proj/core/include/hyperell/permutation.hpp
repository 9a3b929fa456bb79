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

#ifndef HYPERELL_PERMUTATION_HPP
#define HYPERELL_PERMUTATION_HPP

#include <string>
#include <vector>

namespace hyperell {

// Bijection of {0, ..., n-1}; printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned n);
  /// Builds a permutation of n points from 1-based cycles such as {{1, 2}, {3, 4}}.
  static Permutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles_one_based);

  unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  const std::vector<unsigned>& images() const noexcept { return images_; }

  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  unsigned fixed_points() const;
  /// Cycle lengths in descending order, fixed points included.
  std::vector<unsigned> cycle_type() const;
  std::vector<std::vector<unsigned>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

}  // namespace hyperell

#endif  // HYPERELL_PERMUTATION_HPP
