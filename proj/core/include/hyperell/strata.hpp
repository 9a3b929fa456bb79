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

#ifndef HYPERELL_STRATA_HPP
#define HYPERELL_STRATA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperell/permutation.hpp"

namespace hyperell {

// Two 4-subsets whose overlaps |N ∩ rho(N)| differ and are both below 4. Points are 0-based.
struct FourTuplePair {
  std::array<unsigned, 4> n1{};
  std::array<unsigned, 4> n2{};
  unsigned k1 = 0;
  unsigned k2 = 0;
};

/// |N ∩ rho(N)|.
unsigned subset_overlap(const Permutation& rho, const std::array<unsigned, 4>& subset);

/// Exhaustive search over pairs of 4-subsets. Requires at least 6 points and at most 2 fixed points.
std::optional<FourTuplePair> find_lemma_pairs(const Permutation& rho);

struct LemmaCombinRow {
  unsigned n = 0;
  std::vector<unsigned> cycle_type;
  std::uint64_t tested = 0;
  std::uint64_t witnesses_found = 0;
  std::uint64_t failures = 0;
};

struct LemmaCombinReport {
  unsigned n_max = 0;
  std::vector<LemmaCombinRow> rows;  // sorted by (n, cycle type)

  std::uint64_t failures(unsigned n) const;
  std::uint64_t tested(unsigned n) const;
  /// Every failure has 6 points and cycle type (2,2,2).
  bool failures_only_in_excluded_class() const;
};

/// Runs find_lemma_pairs on every admissible permutation of 6..n_max points (6 <= n_max <= 9).
LemmaCombinReport verify_lemma_combin(unsigned n_max, unsigned jobs = 1);

/// Cycle type (2,2,2) on 6 points; WrongDegree otherwise.
bool is_triple_transposition_class(const Permutation& rho);

/// (2g+2-i)/p - 1 for the locus with an order-p automorphism fixing i of the points.
int stratum_dimension(int g, int p, int i);

struct StratumEntry {
  int p = 0;
  int i = 0;
  int dimension = 0;
};

/// All (p, i) with p prime, i in {0, 1, 2} and a well-defined stratum, sorted by (p, i).
std::vector<StratumEntry> admissible_strata(int g);

/// g, after checking that only (p, i) = (2, 0) reaches it.
int max_aut_locus_dimension(int g);

}  // namespace hyperell

#endif  // HYPERELL_STRATA_HPP
