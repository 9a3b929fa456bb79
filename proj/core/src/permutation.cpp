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

#include "hyperell/permutation.hpp"

#include <algorithm>
#include <functional>

#include "hyperell/error.hpp"

namespace hyperell {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    require(v < images_.size() && !seen[v], ErrorCode::PreconditionViolated, "images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles_one_based) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  for (const auto& cycle : cycles_one_based) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const unsigned from = cycle[k];
      const unsigned to = cycle[(k + 1) % cycle.size()];
      require(from >= 1 && from <= n && to >= 1 && to <= n, ErrorCode::PreconditionViolated, "cycle entry out of range");
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  require(size() == other.size(), ErrorCode::PreconditionViolated, "permutations of different degrees");
  std::vector<unsigned> out(size());
  for (unsigned i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> out(size());
  for (unsigned i = 0; i < size(); ++i) out[images_[i]] = i;
  return Permutation(std::move(out));
}

unsigned Permutation::fixed_points() const {
  unsigned count = 0;
  for (unsigned i = 0; i < size(); ++i) count += images_[i] == i;
  return count;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(size(), false);
  for (unsigned start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<unsigned> cycle;
    for (unsigned i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<unsigned> Permutation::cycle_type() const {
  std::vector<unsigned> type;
  for (const auto& c : cycles()) type.push_back(static_cast<unsigned>(c.size()));
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace hyperell
