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

#include <numeric>
#include <set>

#include "hyperell/arith.hpp"
#include "hyperell/config_aut.hpp"
#include "hyperell/sampling.hpp"
#include "test_support.hpp"

using namespace hyperell;
using testing::fp;
using testing::inf;
using testing::pt;
using testing::roots_of_unity_points;

namespace {

// Every element of PGL_2(F_p) preserving the set, by exhaustive enumeration of normalized matrices.
std::set<MoebiusMap> brute_force_stabilizer(const PointConfiguration& c) {
  const FieldTag& f = c.field();
  const auto p = static_cast<long long>(f.characteristic());
  std::set<MoebiusMap> out;
  auto consider = [&](long long a, long long b, long long cc, long long d) {
    const Matrix2 m{Scalar(f, a), Scalar(f, b), Scalar(f, cc), Scalar(f, d)};
    if (m.det().is_zero()) return;
    const MoebiusMap map(m);
    for (const auto& q : c.points()) {
      if (!c.contains(map.apply(q))) return;
    }
    out.insert(map);
  };
  for (long long b = 0; b < p; ++b) {
    for (long long cc = 0; cc < p; ++cc) {
      for (long long d = 0; d < p; ++d) consider(1, b, cc, d);
    }
  }
  for (long long cc = 0; cc < p; ++cc) {
    for (long long d = 0; d < p; ++d) consider(0, 1, cc, d);
  }
  return out;
}

PointConfiguration mu_config(const FieldTag& f, unsigned n, bool with_infinity) {
  auto pts = roots_of_unity_points(f, n);
  if (with_infinity) pts.push_back(inf(f));
  return PointConfiguration(f, pts);
}

}  // namespace

TEST_CASE("configuration invariants") {
  const FieldTag f = fp(7);
  CHECK_ERROR_CODE(PointConfiguration(f, {pt(f, 1), pt(f, 2)}), ErrorCode::TooFewPoints);
  CHECK_ERROR_CODE(PointConfiguration(f, {pt(f, 1), pt(f, 2), pt(f, 1)}), ErrorCode::DuplicatePoint);
  const PointConfiguration c(f, {inf(f), pt(f, 3), pt(f, 1)});
  CHECK(c[0] == pt(f, 1));
  CHECK(c[2] == inf(f));
}

TEST_CASE("automorphism groups match exhaustive PGL2 enumeration") {
  Sampler rng(1);
  for (std::uint64_t p : {7, 11, 13}) {
    const FieldTag f = fp(p);
    std::vector<PointConfiguration> corpus;
    for (int i = 0; i < 4; ++i) corpus.push_back(rng.configuration(f, 6));
    corpus.push_back(rng.configuration(f, 4));
    if ((p - 1) % 6 == 0) corpus.push_back(mu_config(f, 6, false));
    if ((p - 1) % 5 == 0) corpus.push_back(mu_config(f, 5, true));
    if ((p - 1) % 4 == 0) corpus.push_back(mu_config(f, 4, false));
    for (const auto& c : corpus) {
      const ConfigAutGroup g = automorphism_group(c);
      const auto oracle = brute_force_stabilizer(c);
      CHECK(std::set<MoebiusMap>(g.elements.begin(), g.elements.end()) == oracle);
      CHECK(g.verify_axioms());
    }
  }
}

TEST_CASE("stabilizer orders of the probe configurations") {
  CHECK(automorphism_group(mu_config(fp(7), 6, false)).order() == 12);
  CHECK(automorphism_group(mu_config(fp(11), 5, true)).order() == 5);
  for (unsigned g = 2; g <= 6; ++g) {
    const FieldTag f = fp(arith::smallest_prime_one_mod(std::lcm<std::uint64_t>(2 * g + 1, 2 * g + 2)));
    CHECK(automorphism_group(mu_config(f, 2 * g + 2, false)).order() == 4 * g + 4);
    CHECK(automorphism_group(mu_config(f, 2 * g + 1, true)).order() == 2 * g + 1);
  }
}

TEST_CASE("random configurations over a large field are automorphism-free") {
  Sampler rng(2);
  for (int i = 0; i < 5; ++i) {
    const ConfigAutGroup g = automorphism_group(rng.configuration(fp(1000003), 6));
    CHECK(g.order() == 1);
    CHECK(g.elements.front().is_identity());
  }
}

TEST_CASE("permutation representation is a faithful homomorphism") {
  const PointConfiguration c = mu_config(fp(13), 6, false);
  const ConfigAutGroup g = automorphism_group(c);
  std::set<Permutation> images(g.perms.begin(), g.perms.end());
  CHECK(images.size() == g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      CHECK(induced_permutation(g.elements[i] * g.elements[j], c) == g.perms[i] * g.perms[j]);
    }
  }
}

TEST_CASE("automorphism groups are equivariant") {
  Sampler rng(3);
  const FieldTag f = fp(31);
  std::vector<PointConfiguration> corpus{mu_config(f, 6, false), mu_config(f, 5, true), rng.configuration(f, 6)};
  for (const auto& c : corpus) {
    const MoebiusMap a = rng.moebius(f);
    const auto g1 = automorphism_group(c.mapped(a));
    std::set<MoebiusMap> conj;
    for (const auto& b : automorphism_group(c).elements) conj.insert(a * b * a.inverse());
    CHECK(std::set<MoebiusMap>(g1.elements.begin(), g1.elements.end()) == conj);
  }
}

TEST_CASE("parallel search gives the same group") {
  const PointConfiguration c = mu_config(fp(113), 8, false);
  CHECK(automorphism_group(c, 1).elements == automorphism_group(c, 3).elements);
}

TEST_CASE("equivalence examples and relation properties") {
  Sampler rng(4);
  const FieldTag f = fp(31);
  const PointConfiguration mu6 = mu_config(f, 6, false);
  const PointConfiguration inf_mu5 = mu_config(f, 5, true);
  CHECK_FALSE(are_pgl2_equivalent(mu6, inf_mu5).has_value());
  const auto self = all_equivalences(mu6, mu6);
  CHECK(std::any_of(self.begin(), self.end(), [](const MoebiusMap& m) { return m.is_identity(); }));
  for (int i = 0; i < 10; ++i) {
    const PointConfiguration c = rng.configuration(f, 6);
    const MoebiusMap a = rng.moebius(f), b = rng.moebius(f);
    const PointConfiguration ca = c.mapped(a), cb = ca.mapped(b);
    const auto w1 = are_pgl2_equivalent(c, ca);
    REQUIRE(w1.has_value());
    CHECK(c.mapped(*w1) == ca);
    const auto w2 = are_pgl2_equivalent(ca, c);
    REQUIRE(w2.has_value());
    CHECK(ca.mapped(*w2) == c);
    const auto w3 = are_pgl2_equivalent(ca, cb);
    REQUIRE(w3.has_value());
    CHECK(c.mapped(*w3 * *w1) == cb);
  }
  CHECK_FALSE(are_pgl2_equivalent(mu6, rng.configuration(f, 8)).has_value());
}

TEST_CASE("extra involutions") {
  const auto inv = extra_involution_type(mu_config(fp(7), 6, false));
  REQUIRE(inv.has_value());
  CHECK(inv->cycle_type() == std::vector<unsigned>{2, 2, 2});
  Sampler rng(5);
  CHECK_FALSE(extra_involution_type(rng.configuration(fp(1000003), 8)).has_value());
  CHECK_FALSE(extra_involution_type(mu_config(fp(11), 5, true)).has_value());
  CHECK_ERROR_CODE(extra_involution_type(rng.configuration(fp(101), 5)), ErrorCode::PreconditionViolated);
}

TEST_CASE("singular points of the moduli space") {
  const FieldTag f = fp(31);
  std::vector<ProjectivePoint> zero_mu5 = roots_of_unity_points(f, 5);
  zero_mu5.push_back(pt(f, 0));
  CHECK(moduli_point_is_singular(PointConfiguration(f, zero_mu5), 2));
  CHECK_FALSE(moduli_point_is_singular(mu_config(f, 6, false), 2));
  Sampler rng(6);
  CHECK_FALSE(moduli_point_is_singular(rng.configuration(fp(1009), 8), 3));
  CHECK(moduli_point_is_singular(mu_config(fp(113), 8, false), 3));
  CHECK_ERROR_CODE(moduli_point_is_singular(PointConfiguration(fp(5), {pt(fp(5), 0), pt(fp(5), 1), pt(fp(5), 2),
                                                                       pt(fp(5), 3), pt(fp(5), 4), inf(fp(5))}),
                                            2),
                   ErrorCode::BadCharacteristic);
}
