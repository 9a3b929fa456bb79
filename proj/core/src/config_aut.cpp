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

#include "hyperell/config_aut.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "hyperell/error.hpp"

namespace hyperell {

PointConfiguration::PointConfiguration(FieldTag field, std::vector<ProjectivePoint> points)
    : field_(std::move(field)), points_(std::move(points)) {
  require(points_.size() >= 3, ErrorCode::TooFewPoints, "a configuration needs at least three points");
  for (const auto& p : points_) {
    require(p.field() == field_, ErrorCode::FieldMismatch, "point outside the configuration's field");
  }
  std::sort(points_.begin(), points_.end());
  const auto dup = std::adjacent_find(points_.begin(), points_.end());
  require(dup == points_.end(), ErrorCode::DuplicatePoint, dup == points_.end() ? "" : "repeated point " + dup->to_string());
}

std::optional<unsigned> PointConfiguration::index_of(const ProjectivePoint& p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || !(*it == p)) return std::nullopt;
  return static_cast<unsigned>(it - points_.begin());
}

PointConfiguration PointConfiguration::mapped(const MoebiusMap& a) const {
  std::vector<ProjectivePoint> image;
  image.reserve(points_.size());
  for (const auto& p : points_) image.push_back(a.apply(p));
  return PointConfiguration(field_, std::move(image));
}

bool ConfigAutGroup::verify_axioms() const {
  if (elements.empty()) return false;
  const std::set<MoebiusMap> members(elements.begin(), elements.end());
  if (members.size() != elements.size()) return false;
  if (!members.contains(MoebiusMap::identity(elements.front().field()))) return false;
  for (const auto& a : elements) {
    if (!members.contains(a.inverse())) return false;
    for (const auto& b : elements) {
      if (!members.contains(a * b)) return false;
    }
  }
  return true;
}

Permutation induced_permutation(const MoebiusMap& a, const PointConfiguration& c) {
  std::vector<unsigned> images;
  images.reserve(c.size());
  for (const auto& p : c.points()) {
    const auto idx = c.index_of(a.apply(p));
    require(idx.has_value(), ErrorCode::NotInStabilizer, "map does not preserve the configuration");
    images.push_back(*idx);
  }
  return Permutation(std::move(images));
}

namespace {

bool sends_onto(const MoebiusMap& a, const PointConfiguration& src, const PointConfiguration& dst) {
  for (std::size_t i = 3; i < src.size(); ++i) {
    if (!dst.contains(a.apply(src[i]))) return false;
  }
  return true;
}

void search_shard(const PointConfiguration& c1, const PointConfiguration& c2, unsigned shard, unsigned shards,
                  std::vector<MoebiusMap>& out) {
  const std::array<ProjectivePoint, 3> base{c1[0], c1[1], c1[2]};
  const unsigned n = c2.size();
  for (unsigned i = shard; i < n; i += shards) {
    for (unsigned j = 0; j < n; ++j) {
      if (j == i) continue;
      for (unsigned k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const MoebiusMap a = from_three_points(base, {c2[i], c2[j], c2[k]});
        if (sends_onto(a, c1, c2)) out.push_back(a);
      }
    }
  }
}

}  // namespace

std::vector<MoebiusMap> all_equivalences(const PointConfiguration& c1, const PointConfiguration& c2, unsigned jobs) {
  if (!(c1.field() == c2.field()) || c1.size() != c2.size()) return {};
  jobs = std::clamp(jobs, 1u, c2.size());
  std::vector<std::vector<MoebiusMap>> found(jobs);
  if (jobs == 1) {
    search_shard(c1, c2, 0, 1, found[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] { search_shard(c1, c2, t, jobs, found[t]); });
    }
  }
  std::vector<MoebiusMap> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MoebiusMap> are_pgl2_equivalent(const PointConfiguration& c1, const PointConfiguration& c2,
                                              unsigned jobs) {
  auto maps = all_equivalences(c1, c2, jobs);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

ConfigAutGroup automorphism_group(const PointConfiguration& c, unsigned jobs) {
  ConfigAutGroup group;
  group.elements = all_equivalences(c, c, jobs);
  for (const auto& a : group.elements) group.perms.push_back(induced_permutation(a, c));
  return group;
}

std::optional<Permutation> extra_involution_type(const PointConfiguration& c, unsigned jobs) {
  require(c.size() >= 6 && c.size() % 2 == 0, ErrorCode::PreconditionViolated,
          "expected 2g+2 points with g >= 2");
  const ConfigAutGroup group = automorphism_group(c, jobs);
  for (std::size_t i = 0; i < group.order(); ++i) {
    const Permutation& perm = group.perms[i];
    if (!group.elements[i].is_identity() && perm.fixed_points() == 0 && (perm * perm).fixed_points() == perm.size()) {
      return perm;
    }
  }
  return std::nullopt;
}

bool moduli_point_is_singular(const PointConfiguration& c, unsigned g, unsigned jobs) {
  require(g >= 2 && c.size() == 2 * g + 2, ErrorCode::PreconditionViolated, "expected 2g+2 points with g >= 2");
  if (g == 2) {
    require(c.field().characteristic() != 5, ErrorCode::BadCharacteristic, "genus 2 requires characteristic other than 5");
    return automorphism_group(c, jobs).order() % 5 == 0;
  }
  return automorphism_group(c, jobs).order() > 1;
}

}  // namespace hyperell
