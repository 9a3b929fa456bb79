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

#include "hyperell/picard.hpp"

#include <algorithm>
#include <numeric>

#include "hyperell/arith.hpp"
#include "hyperell/error.hpp"

namespace hyperell {

GroupOrders group_orders(int g, std::uint64_t characteristic) {
  require(g >= 2, ErrorCode::PreconditionViolated, "genus must be at least 2");
  const auto n = static_cast<std::uint64_t>(2 * g + 2);
  require(characteristic == 0 || n % characteristic != 0, ErrorCode::BadCharacteristic,
          "characteristic divides 2g+2");
  require(!(g == 2 && characteristic == 5), ErrorCode::BadCharacteristic,
          "the genus-2 class group needs characteristic other than 5");
  const auto base = static_cast<std::uint64_t>(4 * g + 2);
  GroupOrders out;
  out.g = g;
  out.class_group_order = g == 2 ? 5 : base;
  out.stack_picard_order = g % 2 == 0 ? base : 2 * base;
  out.divisor_stack_order = base;
  out.comparison_index = out.stack_picard_order / out.divisor_stack_order;
  return out;
}

FiberCharacter stabilizer_fiber_character(const BinaryForm& f, const MoebiusMap& a) {
  const auto ratio = gl2_act(a.matrix(), f).ratio_to(f);
  require(ratio.has_value(), ErrorCode::NotInStabilizer, "map does not stabilize the form's class");
  const Scalar two(f.field(), 2);
  const auto other_lift = gl2_act(a.matrix().scaled(two), f).ratio_to(f);
  require(other_lift == ratio, ErrorCode::InternalInconsistency, "character depends on the chosen lift");

  const unsigned n = f.degree();
  const auto order = element_order(a, 2 * n * n);
  require(order.has_value(), ErrorCode::InternalInconsistency, "stabilizer element of unbounded order");
  const Scalar& c = *ratio;
  require(c.pow(static_cast<long long>(*order)).is_one(), ErrorCode::InternalInconsistency,
          "character value is not a root of unity of the element's order");

  // c lies in mu_d with d = gcd(order, |k^*|); zeta_order^(order/d) is read as zeta_d.
  const std::uint64_t units = f.field().is_finite() ? f.field().order() - 1 : 2;
  const std::uint64_t d = std::gcd<std::uint64_t>(*order, units);
  const Scalar zeta = *root_of_unity(f.field(), d);
  Scalar power = c.one();
  for (std::uint64_t e = 0; e < d; ++e, power *= zeta) {
    if (power == c) return FiberCharacter{*order, e * (*order / d), c};
  }
  fail(ErrorCode::InternalInconsistency, "character value not found among roots of unity");
}

BinaryForm cyclic_probe(unsigned g, const FieldTag& field) {
  std::vector<Scalar> coeffs(2 * g + 3, Scalar(field, 0));
  coeffs[2 * g + 1] = Scalar(field, 1);
  coeffs[0] = Scalar(field, -1);
  return BinaryForm(g, std::move(coeffs));
}

BinaryForm dihedral_probe(unsigned g, const FieldTag& field) {
  std::vector<Scalar> coeffs(2 * g + 3, Scalar(field, 0));
  coeffs[2 * g + 2] = Scalar(field, 1);
  coeffs[0] = Scalar(field, -1);
  return BinaryForm(g, std::move(coeffs));
}

FieldTag default_probe_field(unsigned g) {
  const std::uint64_t m = std::lcm<std::uint64_t>(2 * g + 1, 2 * g + 2);
  return FieldTag::prime(arith::smallest_prime_one_mod(m));
}

ProbeResult probe_descent(const std::string& name, const BinaryForm& form, unsigned jobs) {
  const unsigned g = form.genus();
  const PointConfiguration roots(form.field(), form_roots(form));
  ProbeResult result{name, form, automorphism_group(roots, jobs), {}, {}};
  for (const auto& a : result.stabilizer.elements) result.characters.push_back(stabilizer_fiber_character(form, a));
  const std::uint64_t modulus = 4 * g + 2;
  for (std::uint64_t d = 0; d < modulus; ++d) {
    const bool trivial = std::all_of(result.characters.begin(), result.characters.end(),
                                     [d](const FiberCharacter& ch) { return ch.value.pow(static_cast<long long>(d)).is_one(); });
    if (trivial) result.allowed.push_back(d);
  }
  return result;
}

DescentResult descent_subgroup(unsigned g, const std::optional<FieldTag>& field, unsigned jobs) {
  require(g >= 2, ErrorCode::PreconditionViolated, "genus must be at least 2");
  const FieldTag k = field.value_or(default_probe_field(g));
  require(!char_divides(k, 2 * g + 2) && !char_divides(k, 2 * g + 1), ErrorCode::BadCharacteristic,
          "characteristic divides 2g+2 or 2g+1");
  DescentResult out;
  out.g = g;
  out.field = k;
  out.modulus = 4 * g + 2;
  out.probes.push_back(probe_descent("cyclic", cyclic_probe(g, k), jobs));
  out.probes.push_back(probe_descent("dihedral", dihedral_probe(g, k), jobs));
  for (std::uint64_t d = 0; d < out.modulus; ++d) {
    const bool everywhere = std::all_of(out.probes.begin(), out.probes.end(), [d](const ProbeResult& p) {
      return std::binary_search(p.allowed.begin(), p.allowed.end(), d);
    });
    if (everywhere) out.subgroup.push_back(d);
  }
  return out;
}

long long m_of(long long a, long long b, long long g) {
  const long long m = (a + b) * g + (b - a);
  require(m >= 0, ErrorCode::NegativeDegree, "m(a,b) is negative");
  return m;
}

CyclicClass tab_exponent(long long a, long long b, long long g) {
  const long long m = m_of(a, b, g);
  const auto modulus = static_cast<long long>(group_orders(static_cast<int>(g)).stack_picard_order);
  long long e = m < g + 1 ? (a + b) * (m + 1) : (a + b - 1) * (m - g);
  if (g % 2 == 0) {
    require(e % 2 == 0, ErrorCode::InternalInconsistency, "odd exponent where an even one is required");
    e /= 2;
  }
  e %= modulus;
  if (e < 0) e += modulus;
  return {static_cast<std::uint64_t>(modulus), static_cast<std::uint64_t>(e)};
}

std::uint64_t hodge_index(long long g) {
  const CyclicClass h = tab_exponent(1, 0, g);
  return std::gcd(h.residue, h.modulus);
}

long long pushforward_rank(long long a, long long b, long long g) { return m_of(a, b, g) + 1; }

std::string generator_descriptor(unsigned g) {
  return "pi_*(omega^" + std::to_string(g + 1) + "(-" + std::to_string(g - 1) + "W))";
}

PicardReport picard_report(unsigned g, const std::optional<FieldTag>& field, unsigned jobs) {
  PicardReport report;
  const FieldTag k = field.value_or(default_probe_field(g));
  report.orders = group_orders(static_cast<int>(g), k.characteristic());
  report.descent = descent_subgroup(g, k, jobs);
  report.descent_subgroup_order = report.descent.subgroup.size();
  report.hodge_exponent = tab_exponent(1, 0, g);
  report.hodge_index = hodge_index(g);
  report.generator = generator_descriptor(g);
  return report;
}

}  // namespace hyperell
