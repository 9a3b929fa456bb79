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

#ifndef HYPERELL_HYPERELLIPTIC_HPP
#define HYPERELL_HYPERELLIPTIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperell/binary_form.hpp"
#include "hyperell/config_aut.hpp"

namespace hyperell {

// twist * y^2 = form(x, 1). When the curve was built from a configuration containing infinity,
// `chart` is the coordinate change that moved the configuration to the affine line.
class HyperellipticCurve {
 public:
  HyperellipticCurve(BinaryForm form, Scalar twist, std::optional<MoebiusMap> chart = std::nullopt);

  const BinaryForm& form() const noexcept { return form_; }
  const Scalar& twist() const noexcept { return twist_; }
  const std::optional<MoebiusMap>& chart() const noexcept { return chart_; }
  unsigned genus() const noexcept { return form_.genus(); }
  const FieldTag& field() const noexcept { return form_.field(); }

  HyperellipticCurve with_twist(const Scalar& twist) const { return HyperellipticCurve(form_, twist, chart_); }

 private:
  BinaryForm form_;
  Scalar twist_;
  std::optional<MoebiusMap> chart_;
};

/// No repeated root in P^1; valid in every odd characteristic.
bool has_distinct_roots(const BinaryForm& f);

/// Curve whose branch points are exactly `c` (2g+2 points, g >= 2).
HyperellipticCurve curve_from_config(const PointConfiguration& c, const Scalar& twist);

/// Branch points in the original coordinates; NonSplitForm if they are not all rational.
PointConfiguration weierstrass_points(const HyperellipticCurve& c);

/// Branch points of the model a y^2 = f(x), over the smallest extension where they are rational.
PointConfiguration geometric_branch_points(const HyperellipticCurve& c);

struct ReducedAutomorphisms {
  ConfigAutGroup group;
  std::size_t full_order = 0;  // 2 |G|
  unsigned extension_degree = 1;
};

/// Automorphisms of the branch configuration over the splitting field of the form (closure group).
ReducedAutomorphisms reduced_automorphism_group(const HyperellipticCurve& c, unsigned jobs = 1);

std::optional<MoebiusMap> isomorphic_over_closure(const HyperellipticCurve& c1, const HyperellipticCurve& c2,
                                                  unsigned jobs = 1);

struct CurveIsoWitness {
  MoebiusMap moebius;   // sends the branch points of c1 to those of c2
  Scalar scale;         // nu with f2(M (X, Y)) = nu f1(X, Y)
  SquareClass scale_class;  // class of a1 a2 nu; Square for a witness
};

/// An isomorphism x -> M(x) defined over the field, or nullopt.
std::optional<CurveIsoWitness> isomorphic_over_field(const HyperellipticCurve& c1, const HyperellipticCurve& c2,
                                                     unsigned jobs = 1);

/// Partition of all q-1 twists of the form into field-isomorphism classes, in order of first twist.
std::vector<std::vector<Scalar>> twist_classes(const BinaryForm& form, unsigned jobs = 1);

/// Projective points on the smooth model over a finite field with at most 10^6 elements.
std::uint64_t count_points(const HyperellipticCurve& c);

bool tautological_family_exists(int g);

struct G12Verdict {
  bool guaranteed = false;
  std::string reason;
};

/// A global g^1_2 is guaranteed for even genus; for odd genus counterexamples exist.
G12Verdict global_g12_exists_for_even_genus(int g);

// y^2 = x^3 + t x + t.
struct EllipticCurve {
  Scalar t;
  Scalar j;
};

/// 1728 * 4 a^3 / (4 a^3 + 27 b^2) for y^2 = x^3 + a x + b.
Scalar j_invariant(const Scalar& a, const Scalar& b);

/// Member of the family y^2 = x^3 + t(x + 1) with j-invariant j0.
EllipticCurve elliptic_taut_curve(const Scalar& j0);

}  // namespace hyperell

#endif  // HYPERELL_HYPERELLIPTIC_HPP
