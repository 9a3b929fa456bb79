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

#include "hyperell/hyperelliptic.hpp"

#include <algorithm>
#include <numeric>

#include "hyperell/arith.hpp"
#include "hyperell/error.hpp"

namespace hyperell {

namespace {

BinaryForm embed_form(const BinaryForm& f, const FieldTag& field) {
  if (f.field() == field) return f;
  std::vector<Scalar> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(Scalar::embed(field, c));
  return BinaryForm(f.genus(), std::move(coeffs));
}

// The field over which all roots of every form are rational.
FieldTag common_splitting_field(const std::vector<const BinaryForm*>& forms) {
  const FieldTag& base = forms.front()->field();
  if (!base.is_finite()) return base;
  unsigned m = 1;
  for (const auto* f : forms) m = std::lcm(m, form_splitting_degree(*f));
  if (m == 1) return base;
  require(base.kind() == FieldKind::Prime, ErrorCode::UnsupportedField,
          "splitting fields are only built over prime fields");
  require(arith::checked_pow(base.characteristic(), m) != 0, ErrorCode::BoundExceeded,
          "splitting field of degree " + std::to_string(m) + " over " + base.to_string() + " exceeds 2^62 elements");
  return FieldTag::extension(base.characteristic(), m);
}

std::optional<Scalar> restrict_to(const Scalar& x, const FieldTag& base) {
  if (x.field() == base) return x;
  const auto& coords = x.as_coordinates();
  if (std::any_of(coords.begin() + 1, coords.end(), [](std::uint64_t c) { return c != 0; })) return std::nullopt;
  return Scalar(base, static_cast<long long>(coords[0]));
}

std::optional<MoebiusMap> restrict_to(const MoebiusMap& m, const FieldTag& base) {
  const Matrix2& a = m.matrix();
  auto ra = restrict_to(a.a, base);
  auto rb = restrict_to(a.b, base);
  auto rc = restrict_to(a.c, base);
  auto rd = restrict_to(a.d, base);
  if (!ra || !rb || !rc || !rd) return std::nullopt;
  return MoebiusMap(*ra, *rb, *rc, *rd);
}

struct FieldEquivalence {
  MoebiusMap moebius;
  Scalar nu;
};

// Maps over the base field sending the roots of f1 onto those of f2, with f2 o M = nu f1.
std::vector<FieldEquivalence> field_equivalences(const BinaryForm& f1, const BinaryForm& f2, unsigned jobs) {
  require(f1.field() == f2.field(), ErrorCode::FieldMismatch, "curves over different fields");
  if (f1.genus() != f2.genus()) return {};
  const FieldTag& base = f1.field();
  const FieldTag k = common_splitting_field({&f1, &f2});
  const PointConfiguration w1(k, form_roots(embed_form(f1, k)));
  const PointConfiguration w2(k, form_roots(embed_form(f2, k)));
  std::vector<FieldEquivalence> out;
  for (const auto& m : all_equivalences(w1, w2, jobs)) {
    const auto rational = restrict_to(m, base);
    if (!rational) continue;
    const auto nu = substitute(f2, rational->matrix()).ratio_to(f1);
    require(nu.has_value(), ErrorCode::InternalInconsistency, "root-matching map does not pull back f2 to a multiple of f1");
    out.push_back({*rational, *nu});
  }
  return out;
}

std::optional<CurveIsoWitness> first_witness(const std::vector<FieldEquivalence>& eqs, const Scalar& a1, const Scalar& a2) {
  for (const auto& e : eqs) {
    const SquareClass cls = square_class(a1 * a2 * e.nu);
    if (cls == SquareClass::Square) return CurveIsoWitness{e.moebius, e.nu, cls};
  }
  return std::nullopt;
}

}  // namespace

bool has_distinct_roots(const BinaryForm& f) {
  const Polynomial p = f.dehomogenize();
  if (p.degree() < static_cast<int>(f.degree()) - 1) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

HyperellipticCurve::HyperellipticCurve(BinaryForm form, Scalar twist, std::optional<MoebiusMap> chart)
    : form_(std::move(form)), twist_(std::move(twist)), chart_(std::move(chart)) {
  require(twist_.field() == form_.field(), ErrorCode::FieldMismatch, "twist and form over different fields");
  require(!twist_.is_zero(), ErrorCode::ZeroInput, "twist must be nonzero");
  require(form_.field().characteristic() != 2, ErrorCode::BadCharacteristic, "characteristic 2 is not supported");
  require(has_distinct_roots(form_), ErrorCode::DegenerateInput, "form has a repeated root");
  if (chart_) require(chart_->field() == form_.field(), ErrorCode::FieldMismatch, "chart over a different field");
}

HyperellipticCurve curve_from_config(const PointConfiguration& c, const Scalar& twist) {
  require(c.size() >= 6, ErrorCode::TooFewPoints, "a hyperelliptic curve of genus >= 2 needs at least 6 branch points");
  require(c.size() % 2 == 0, ErrorCode::WrongDegree, "the number of branch points must be even");
  const unsigned g = c.size() / 2 - 1;
  const FieldTag& field = c.field();
  if (!c[c.size() - 1].is_infinity()) return HyperellipticCurve(form_from_roots(g, c.points()), twist);
  // (x : y) -> (x : t x + y) sends infinity to 1/t; pick the least t keeping every point affine.
  for (long long t = 1;; ++t) {
    const Scalar ts(field, t);
    require(!ts.is_zero(), ErrorCode::DegenerateInput, "no shift moves infinity off the configuration");
    const bool clear = std::none_of(c.points().begin(), c.points().end(), [&](const ProjectivePoint& p) {
      return !p.is_infinity() && (ts * p.x() + p.y()).is_zero();
    });
    if (!clear) continue;
    const MoebiusMap chart(ts.one(), ts.zero(), ts, ts.one());
    return HyperellipticCurve(form_from_roots(g, c.mapped(chart).points()), twist, chart);
  }
}

PointConfiguration weierstrass_points(const HyperellipticCurve& c) {
  const PointConfiguration model(c.field(), form_roots(c.form()));
  return c.chart() ? model.mapped(c.chart()->inverse()) : model;
}

PointConfiguration geometric_branch_points(const HyperellipticCurve& c) {
  const FieldTag k = common_splitting_field({&c.form()});
  return PointConfiguration(k, form_roots(embed_form(c.form(), k)));
}

ReducedAutomorphisms reduced_automorphism_group(const HyperellipticCurve& c, unsigned jobs) {
  const PointConfiguration w = geometric_branch_points(c);
  ReducedAutomorphisms out;
  out.group = automorphism_group(w, jobs);
  out.full_order = 2 * out.group.order();
  out.extension_degree = w.field().degree() / std::max(1u, c.field().degree());
  return out;
}

std::optional<MoebiusMap> isomorphic_over_closure(const HyperellipticCurve& c1, const HyperellipticCurve& c2,
                                                  unsigned jobs) {
  require(c1.field() == c2.field(), ErrorCode::FieldMismatch, "curves over different fields");
  if (c1.genus() != c2.genus()) return std::nullopt;
  const FieldTag k = common_splitting_field({&c1.form(), &c2.form()});
  const PointConfiguration w1(k, form_roots(embed_form(c1.form(), k)));
  const PointConfiguration w2(k, form_roots(embed_form(c2.form(), k)));
  return are_pgl2_equivalent(w1, w2, jobs);
}

std::optional<CurveIsoWitness> isomorphic_over_field(const HyperellipticCurve& c1, const HyperellipticCurve& c2,
                                                     unsigned jobs) {
  return first_witness(field_equivalences(c1.form(), c2.form(), jobs), c1.twist(), c2.twist());
}

std::vector<std::vector<Scalar>> twist_classes(const BinaryForm& form, unsigned jobs) {
  const FieldTag& field = form.field();
  require(field.is_finite(), ErrorCode::NotFinite, "twist enumeration needs a finite field");
  require(has_distinct_roots(form), ErrorCode::DegenerateInput, "form has a repeated root");
  const auto eqs = field_equivalences(form, form, jobs);
  std::vector<std::vector<Scalar>> classes;
  for (std::uint64_t idx = 1; idx < field.order(); ++idx) {
    const Scalar a = field_element(field, idx);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const std::vector<Scalar>& cls) { return first_witness(eqs, cls.front(), a).has_value(); });
    if (it == classes.end()) {
      classes.push_back({a});
    } else {
      it->push_back(a);
    }
  }
  return classes;
}

std::uint64_t count_points(const HyperellipticCurve& c) {
  const FieldTag& field = c.field();
  require(field.is_finite(), ErrorCode::NotFinite, "point counting needs a finite field");
  const std::uint64_t q = field.order();
  require(q <= 1000000, ErrorCode::BoundExceeded, "point counting is limited to fields with at most 10^6 elements");
  const BinaryForm& f = c.form();
  // chi(f(x) / a) = chi(a f(x)).
  auto chi = [&](const Scalar& v) -> int {
    if (v.is_zero()) return 0;
    return square_class(v) == SquareClass::Square ? 1 : -1;
  };
  long long total = 0;
  if (field.kind() == FieldKind::Prime) {
    std::vector<signed char> table(q, -1);
    table[0] = 0;
    for (std::uint64_t x = 1; x < q; ++x) table[x * x % q] = 1;
    const std::uint64_t a = c.twist().as_residue();
    std::vector<std::uint64_t> coeffs;
    for (const auto& s : f.coeffs()) coeffs.push_back(s.as_residue());
    for (std::uint64_t x = 0; x < q; ++x) {
      std::uint64_t acc = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % q;
      total += 1 + table[acc * a % q];
    }
  } else {
    const Polynomial affine = f.dehomogenize();
    for (std::uint64_t idx = 0; idx < q; ++idx) total += 1 + chi(c.twist() * affine.eval(field_element(field, idx)));
  }
  total += f.leading().is_zero() ? 1 : 1 + chi(c.twist() * f.leading());
  return static_cast<std::uint64_t>(total);
}

bool tautological_family_exists(int g) {
  require(g >= 2, ErrorCode::PreconditionViolated, "genus must be at least 2");
  return g % 2 == 1;
}

G12Verdict global_g12_exists_for_even_genus(int g) {
  require(g >= 2, ErrorCode::PreconditionViolated, "genus must be at least 2");
  if (g % 2 == 0) return {true, "even genus: a G^1_2 is defined globally"};
  return {false, "odd genus: not guaranteed; families without a global g^1_2 exist"};
}

Scalar j_invariant(const Scalar& a, const Scalar& b) {
  const Scalar four(a.field(), 4);
  const Scalar a3 = four * a * a * a;
  const Scalar denom = a3 + Scalar(a.field(), 27) * b * b;
  require(!denom.is_zero(), ErrorCode::DegenerateInput, "singular Weierstrass equation");
  return Scalar(a.field(), 1728) * a3 / denom;
}

EllipticCurve elliptic_taut_curve(const Scalar& j0) {
  const FieldTag& field = j0.field();
  require(!char_divides(field, 6), ErrorCode::BadCharacteristic, "characteristic must not divide 6");
  const Scalar c1728(field, 1728);
  require(!j0.is_zero() && j0 != c1728, ErrorCode::ExcludedJ, "j = 0 and j = 1728 are excluded");
  const Scalar t = Scalar(field, 27) * j0 / (Scalar(field, 4) * (c1728 - j0));
  EllipticCurve curve{t, j_invariant(t, t)};
  require(curve.j == j0, ErrorCode::InternalInconsistency, "j-invariant check failed");
  return curve;
}

}  // namespace hyperell
