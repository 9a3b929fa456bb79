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

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperell/arith.hpp"
#include "hyperell/sampling.hpp"
#include "hyperell/strata.hpp"
#include "test_support.hpp"

using namespace hyperell;

namespace {

// |N ∩ rho(N)| with explicit sets.
unsigned overlap_oracle(const Permutation& rho, const std::array<unsigned, 4>& subset) {
  std::set<unsigned> n(subset.begin(), subset.end());
  std::set<unsigned> image;
  for (unsigned v : subset) image.insert(rho(v));
  std::vector<unsigned> common;
  std::set_intersection(n.begin(), n.end(), image.begin(), image.end(), std::back_inserter(common));
  return static_cast<unsigned>(common.size());
}

void check_witness(const Permutation& rho, const FourTuplePair& w) {
  CHECK(overlap_oracle(rho, w.n1) == w.k1);
  CHECK(overlap_oracle(rho, w.n2) == w.k2);
  CHECK(subset_overlap(rho, w.n1) == w.k1);
  CHECK(w.k1 != w.k2);
  CHECK(w.k1 < 4);
  CHECK(w.k2 < 4);
}

Permutation random_permutation(Sampler& rng, unsigned n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng.engine());
  return Permutation(images);
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation rho = Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(rho.cycle_type() == std::vector<unsigned>{2, 2, 2});
  CHECK(rho.to_string() == "(1 2)(3 4)(5 6)");
  CHECK((rho * rho) == Permutation::identity(6));
  const Permutation c = Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}});
  CHECK((c * c.inverse()) == Permutation::identity(6));
  CHECK(c.fixed_points() == 0);
  CHECK_ERROR_CODE(Permutation(std::vector<unsigned>{0, 0, 1}), ErrorCode::PreconditionViolated);
}

TEST_CASE("lemma pairs examples") {
  const Permutation six_cycle = Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}});
  const auto w = find_lemma_pairs(six_cycle);
  REQUIRE(w.has_value());
  check_witness(six_cycle, *w);
  CHECK_FALSE(find_lemma_pairs(Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}})).has_value());
  CHECK_ERROR_CODE(find_lemma_pairs(Permutation::identity(6)), ErrorCode::PreconditionViolated);
  CHECK_ERROR_CODE(find_lemma_pairs(Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})), ErrorCode::PreconditionViolated);
}

TEST_CASE("every type-(2,2,2) subset overlap is 2 or 4") {
  const Permutation rho = Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}});
  for (unsigned a = 0; a < 6; ++a)
    for (unsigned b = a + 1; b < 6; ++b)
      for (unsigned c = b + 1; c < 6; ++c)
        for (unsigned d = c + 1; d < 6; ++d) {
          const unsigned k = overlap_oracle(rho, {a, b, c, d});
          CHECK((k == 2 || k == 4));
        }
}

TEST_CASE("witnesses re-verify for random admissible permutations") {
  Sampler rng(1);
  for (unsigned n = 6; n <= 8; ++n) {
    int checked = 0;
    while (checked < 200) {
      const Permutation rho = random_permutation(rng, n);
      if (rho.fixed_points() > 2) continue;
      ++checked;
      const auto w = find_lemma_pairs(rho);
      if (n == 6 && rho.cycle_type() == std::vector<unsigned>{2, 2, 2}) {
        CHECK_FALSE(w.has_value());
        continue;
      }
      REQUIRE(w.has_value());
      check_witness(rho, *w);
    }
  }
}

TEST_CASE("lemma search is conjugation invariant") {
  Sampler rng(2);
  for (int i = 0; i < 200; ++i) {
    const Permutation rho = random_permutation(rng, 6);
    if (rho.fixed_points() > 2) continue;
    const Permutation sigma = random_permutation(rng, 6);
    const Permutation conj = sigma * rho * sigma.inverse();
    const auto w = find_lemma_pairs(rho);
    CHECK(w.has_value() == find_lemma_pairs(conj).has_value());
    if (!w) continue;
    // Transport the witness through sigma.
    std::array<unsigned, 4> n1{}, n2{};
    for (int k = 0; k < 4; ++k) {
      n1[k] = sigma(w->n1[k]);
      n2[k] = sigma(w->n2[k]);
    }
    CHECK(overlap_oracle(conj, n1) == w->k1);
    CHECK(overlap_oracle(conj, n2) == w->k2);
  }
}

TEST_CASE("triple transposition class has 15 elements") {
  std::vector<unsigned> images(6);
  std::iota(images.begin(), images.end(), 0u);
  int count = 0;
  do {
    count += is_triple_transposition_class(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(count == 15);
  CHECK(count == 720 / (8 * 6));
  CHECK_FALSE(is_triple_transposition_class(Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})));
  CHECK_ERROR_CODE(is_triple_transposition_class(Permutation::identity(7)), ErrorCode::WrongDegree);
}

TEST_CASE("exhaustive lemma verification") {
  const LemmaCombinReport r = verify_lemma_combin(7);
  CHECK(r.failures(6) == 15);
  CHECK(r.failures(7) == 0);
  CHECK(r.failures_only_in_excluded_class());
  // Admissible permutations of 6 points, counted directly.
  std::vector<unsigned> images(6);
  std::iota(images.begin(), images.end(), 0u);
  std::uint64_t admissible = 0;
  do {
    admissible += Permutation(images).fixed_points() <= 2;
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(r.tested(6) == admissible);
  CHECK(verify_lemma_combin(7, 3).rows.size() == r.rows.size());
  CHECK_ERROR_CODE(verify_lemma_combin(5), ErrorCode::PreconditionViolated);
  CHECK_ERROR_CODE(verify_lemma_combin(10), ErrorCode::PreconditionViolated);
}

TEST_CASE("stratum dimensions") {
  CHECK(stratum_dimension(2, 2, 0) == 2);
  CHECK(stratum_dimension(2, 3, 0) == 1);
  CHECK(stratum_dimension(2, 5, 1) == 0);
  CHECK_ERROR_CODE(stratum_dimension(2, 2, 1), ErrorCode::ImpossibleCase);
  CHECK_ERROR_CODE(stratum_dimension(2, 5, 0), ErrorCode::NotDivisible);
  CHECK_ERROR_CODE(stratum_dimension(2, 4, 0), ErrorCode::PreconditionViolated);
  CHECK(max_aut_locus_dimension(2) == 2);
  CHECK(max_aut_locus_dimension(3) == 3);
  for (const auto& s : admissible_strata(5)) {
    if (s.p != 2 || s.i != 0) CHECK(s.dimension < 5);
  }
  for (int g = 2; g <= 50; ++g) {
    CHECK(stratum_dimension(g, 2, 0) == g);
    for (int p = 2; p <= 2 * g + 2; ++p) {
      if (!arith::is_prime(static_cast<std::uint64_t>(p))) continue;
      for (int i = 0; i <= 2; ++i) {
        if ((p == 2 && i == 1) || (2 * g + 2 - i) % p != 0 || (p == 2 && i == 0)) continue;
        CHECK(stratum_dimension(g, p, i) <= g - 1);
      }
    }
  }
}
