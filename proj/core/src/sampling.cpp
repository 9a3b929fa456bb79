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

#include "hyperell/sampling.hpp"

#include <algorithm>

#include "hyperell/hyperelliptic.hpp"

namespace hyperell {

std::uint64_t Sampler::below(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
}

Scalar Sampler::scalar(const FieldTag& field, long long height) {
  if (field.is_finite()) return field_element(field, below(field.order()));
  const auto num = static_cast<long long>(below(2 * height + 1)) - height;
  const auto den = static_cast<long long>(below(height)) + 1;
  return Scalar::rational(num, den);
}

Scalar Sampler::nonzero(const FieldTag& field, long long height) {
  for (;;) {
    Scalar s = scalar(field, height);
    if (!s.is_zero()) return s;
  }
}

Matrix2 Sampler::invertible_matrix(const FieldTag& field, long long height) {
  for (;;) {
    Matrix2 m{scalar(field, height), scalar(field, height), scalar(field, height), scalar(field, height)};
    if (!m.det().is_zero()) return m;
  }
}

ProjectivePoint Sampler::point(const FieldTag& field, long long height) {
  if (below(16) == 0) return ProjectivePoint::infinity(field);
  return ProjectivePoint::affine(scalar(field, height));
}

std::vector<ProjectivePoint> Sampler::distinct_points(const FieldTag& field, unsigned n, long long height) {
  std::vector<ProjectivePoint> out;
  while (out.size() < n) {
    ProjectivePoint p = point(field, height);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

BinaryForm Sampler::form(unsigned g, const FieldTag& field, long long height) {
  for (;;) {
    std::vector<Scalar> coeffs;
    for (unsigned i = 0; i < 2 * g + 3; ++i) coeffs.push_back(scalar(field, height));
    if (std::any_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return !c.is_zero(); })) {
      return BinaryForm(g, std::move(coeffs));
    }
  }
}

BinaryForm Sampler::smooth_form(unsigned g, const FieldTag& field, long long height) {
  for (;;) {
    BinaryForm f = form(g, field, height);
    if (!f.leading().is_zero() && has_distinct_roots(f)) return f;
  }
}

}  // namespace hyperell
