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

#ifndef HYPERELL_CONFIG_AUT_HPP
#define HYPERELL_CONFIG_AUT_HPP

#include <optional>
#include <vector>

#include "hyperell/moebius.hpp"
#include "hyperell/permutation.hpp"

namespace hyperell {

// A set of at least three distinct points of P^1, kept sorted.
class PointConfiguration {
 public:
  PointConfiguration(FieldTag field, std::vector<ProjectivePoint> points);

  const FieldTag& field() const noexcept { return field_; }
  unsigned size() const noexcept { return static_cast<unsigned>(points_.size()); }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }

  std::optional<unsigned> index_of(const ProjectivePoint& p) const;
  bool contains(const ProjectivePoint& p) const { return index_of(p).has_value(); }
  PointConfiguration mapped(const MoebiusMap& a) const;

  friend bool operator==(const PointConfiguration& a, const PointConfiguration& b) {
    return a.field_ == b.field_ && a.points_ == b.points_;
  }

 private:
  FieldTag field_;
  std::vector<ProjectivePoint> points_;
};

struct ConfigAutGroup {
  std::vector<MoebiusMap> elements;  // sorted by normalized matrix
  std::vector<Permutation> perms;    // action on the sorted points, parallel to elements

  std::size_t order() const noexcept { return elements.size(); }
  /// Identity, closure and inverses, checked exhaustively.
  bool verify_axioms() const;
};

/// Induced permutation of the sorted points; the map must preserve the configuration.
Permutation induced_permutation(const MoebiusMap& a, const PointConfiguration& c);

/// Stabilizer of the configuration in PGL_2 of its field. Since the points are rational and a map
/// is fixed by three of them, this is also the stabilizer over any extension.
ConfigAutGroup automorphism_group(const PointConfiguration& c, unsigned jobs = 1);

/// Every map sending c1 onto c2, sorted.
std::vector<MoebiusMap> all_equivalences(const PointConfiguration& c1, const PointConfiguration& c2, unsigned jobs = 1);

std::optional<MoebiusMap> are_pgl2_equivalent(const PointConfiguration& c1, const PointConfiguration& c2,
                                              unsigned jobs = 1);

/// A fixed-point-free involution of the 2g+2 points induced by an automorphism, if any.
std::optional<Permutation> extra_involution_type(const PointConfiguration& c, unsigned jobs = 1);

/// For g >= 3: nontrivial reduced automorphism group. For g = 2: the configuration is
/// equivalent to the roots of x^6 - x, i.e. it admits an automorphism of order 5.
bool moduli_point_is_singular(const PointConfiguration& c, unsigned g, unsigned jobs = 1);

}  // namespace hyperell

#endif  // HYPERELL_CONFIG_AUT_HPP
