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

#ifndef HYPERELL_TESTS_SUPPORT_HPP
#define HYPERELL_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "doctest.h"
#include "hyperell/error.hpp"
#include "hyperell/moebius.hpp"
#include "hyperell/scalar.hpp"

// Expects `expr` to throw hyperell::Error carrying `expected`.
#define CHECK_ERROR_CODE(expr, expected)                                              \
  do {                                                                                \
    bool thrown_ = false;                                                             \
    try {                                                                             \
      (void)(expr);                                                                   \
    } catch (const hyperell::Error& e_) {                                             \
      thrown_ = true;                                                                 \
      CHECK_MESSAGE(e_.code() == (expected), "got ", hyperell::error_code_name(e_.code())); \
    }                                                                                 \
    CHECK_MESSAGE(thrown_, "expected ", hyperell::error_code_name(expected));         \
  } while (0)

namespace testing {

inline hyperell::FieldTag fp(std::uint64_t p) { return hyperell::FieldTag::prime(p); }
inline hyperell::FieldTag rationals() { return hyperell::FieldTag::rational(); }

inline hyperell::Scalar s(const hyperell::FieldTag& f, long long v) { return hyperell::Scalar(f, v); }

inline hyperell::ProjectivePoint pt(const hyperell::FieldTag& f, long long x) {
  return hyperell::ProjectivePoint::affine(hyperell::Scalar(f, x));
}

inline hyperell::ProjectivePoint inf(const hyperell::FieldTag& f) { return hyperell::ProjectivePoint::infinity(f); }

// All d-th roots of unity in the field as affine points.
inline std::vector<hyperell::ProjectivePoint> roots_of_unity_points(const hyperell::FieldTag& f, std::uint64_t d) {
  const auto root = hyperell::root_of_unity(f, d);
  REQUIRE_MESSAGE(root.has_value(), "no primitive root of unity of order ", d, " in ", f.to_string());
  const hyperell::Scalar zeta = *root;
  std::vector<hyperell::ProjectivePoint> out;
  hyperell::Scalar z = zeta.one();
  for (std::uint64_t k = 0; k < d; ++k, z *= zeta) out.push_back(hyperell::ProjectivePoint::affine(z));
  return out;
}

}  // namespace testing

#endif  // HYPERELL_TESTS_SUPPORT_HPP
