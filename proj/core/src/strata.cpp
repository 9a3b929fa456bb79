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

#include "hyperell/strata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <thread>

#include "hyperell/arith.hpp"
#include "hyperell/error.hpp"

namespace hyperell {

namespace {

std::vector<std::uint32_t> four_subsets(unsigned n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == 4) out.push_back(mask);
  }
  return out;
}

std::uint32_t image_mask(const std::vector<unsigned>& images, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < images.size(); ++i) {
    if (mask >> i & 1u) out |= 1u << images[i];
  }
  return out;
}

std::array<unsigned, 4> mask_to_subset(std::uint32_t mask) {
  std::array<unsigned, 4> out{};
  std::size_t k = 0;
  for (unsigned i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out[k++] = i;
  }
  return out;
}

std::optional<FourTuplePair> search(const std::vector<unsigned>& images, const std::vector<std::uint32_t>& subsets) {
  std::array<std::optional<std::uint32_t>, 4> first_with_overlap{};
  for (std::uint32_t mask : subsets) {
    const auto k = static_cast<unsigned>(std::popcount(mask & image_mask(images, mask)));
    if (k >= 4 || first_with_overlap[k]) continue;
    first_with_overlap[k] = mask;
    for (unsigned other = 0; other < 4; ++other) {
      if (other != k && first_with_overlap[other]) {
        return FourTuplePair{mask_to_subset(*first_with_overlap[other]), mask_to_subset(mask), other, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

unsigned subset_overlap(const Permutation& rho, const std::array<unsigned, 4>& subset) {
  unsigned count = 0;
  for (unsigned a : subset) {
    for (unsigned b : subset) count += rho(b) == a;
  }
  return count;
}

std::optional<FourTuplePair> find_lemma_pairs(const Permutation& rho) {
  require(rho.size() >= 6, ErrorCode::PreconditionViolated, "the lemma needs at least 6 points");
  require(rho.size() <= 24, ErrorCode::BoundExceeded, "at most 24 points are supported");
  require(rho.fixed_points() <= 2, ErrorCode::PreconditionViolated, "permutation has more than two fixed points");
  return search(rho.images(), four_subsets(rho.size()));
}

std::uint64_t LemmaCombinReport::failures(unsigned n) const {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.n == n ? row.failures : 0;
  return total;
}

std::uint64_t LemmaCombinReport::tested(unsigned n) const {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.n == n ? row.tested : 0;
  return total;
}

bool LemmaCombinReport::failures_only_in_excluded_class() const {
  const std::vector<unsigned> excluded{2, 2, 2};
  return std::all_of(rows.begin(), rows.end(), [&](const LemmaCombinRow& row) {
    return row.failures == 0 || (row.n == 6 && row.cycle_type == excluded);
  });
}

LemmaCombinReport verify_lemma_combin(unsigned n_max, unsigned jobs) {
  require(n_max >= 6 && n_max <= 9, ErrorCode::PreconditionViolated, "n_max must lie in 6..9");
  jobs = std::max(jobs, 1u);
  LemmaCombinReport report;
  report.n_max = n_max;
  for (unsigned n = 6; n <= n_max; ++n) {
    const auto subsets = four_subsets(n);
    using Key = std::vector<unsigned>;
    std::vector<std::map<Key, LemmaCombinRow>> partial(jobs);
    auto work = [&](unsigned shard) {
      std::vector<unsigned> images(n);
      std::iota(images.begin(), images.end(), 0u);
      std::uint64_t index = 0;
      do {
        if (index++ % jobs != shard) continue;
        unsigned fixed = 0;
        for (unsigned i = 0; i < n; ++i) fixed += images[i] == i;
        if (fixed > 2) continue;
        const Key type = Permutation(images).cycle_type();
        auto& row = partial[shard][type];
        row.n = n;
        row.cycle_type = type;
        ++row.tested;
        if (search(images, subsets)) {
          ++row.witnesses_found;
        } else {
          ++row.failures;
        }
      } while (std::next_permutation(images.begin(), images.end()));
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(work, t);
    }
    std::map<Key, LemmaCombinRow> merged;
    for (const auto& part : partial) {
      for (const auto& [type, row] : part) {
        auto& dst = merged[type];
        dst.n = n;
        dst.cycle_type = type;
        dst.tested += row.tested;
        dst.witnesses_found += row.witnesses_found;
        dst.failures += row.failures;
      }
    }
    for (auto& [type, row] : merged) report.rows.push_back(std::move(row));
  }
  return report;
}

bool is_triple_transposition_class(const Permutation& rho) {
  require(rho.size() == 6, ErrorCode::WrongDegree, "expected a permutation of 6 points");
  return rho.cycle_type() == std::vector<unsigned>{2, 2, 2};
}

int stratum_dimension(int g, int p, int i) {
  require(g >= 2, ErrorCode::PreconditionViolated, "genus must be at least 2");
  require(i >= 0 && i <= 2, ErrorCode::PreconditionViolated, "number of fixed points must be 0, 1 or 2");
  require(p >= 2 && p <= 2 * g + 2 && arith::is_prime(static_cast<std::uint64_t>(p)), ErrorCode::PreconditionViolated,
          "p must be a prime at most 2g+2");
  require(!(p == 2 && i == 1), ErrorCode::ImpossibleCase, "an involution cannot fix exactly one of 2g+2 points");
  require((2 * g + 2 - i) % p == 0, ErrorCode::NotDivisible, "p does not divide 2g+2-i");
  return (2 * g + 2 - i) / p - 1;
}

std::vector<StratumEntry> admissible_strata(int g) {
  require(g >= 2, ErrorCode::PreconditionViolated, "genus must be at least 2");
  std::vector<StratumEntry> out;
  for (int p = 2; p <= 2 * g + 2; ++p) {
    if (!arith::is_prime(static_cast<std::uint64_t>(p))) continue;
    for (int i = 0; i <= 2; ++i) {
      if ((p == 2 && i == 1) || (2 * g + 2 - i) % p != 0) continue;
      out.push_back({p, i, stratum_dimension(g, p, i)});
    }
  }
  return out;
}

int max_aut_locus_dimension(int g) {
  int best = -1;
  for (const auto& s : admissible_strata(g)) {
    const bool top = s.p == 2 && s.i == 0;
    require(top ? s.dimension == g : s.dimension <= g - 1, ErrorCode::InternalInconsistency,
            "stratum (" + std::to_string(s.p) + "," + std::to_string(s.i) + ") breaks the dimension bound");
    best = std::max(best, s.dimension);
  }
  require(best == g, ErrorCode::InternalInconsistency, "maximal stratum dimension differs from g");
  return g;
}

}  // namespace hyperell
