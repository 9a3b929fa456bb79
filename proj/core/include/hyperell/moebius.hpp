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

#ifndef HYPERELL_MOEBIUS_HPP
#define HYPERELL_MOEBIUS_HPP

#include <array>
#include <optional>
#include <string>

#include "hyperell/scalar.hpp"

namespace hyperell {

struct Matrix2 {
  Scalar a, b, c, d;

  static Matrix2 identity(const FieldTag& field);
  const FieldTag& field() const noexcept { return a.field(); }
  Scalar det() const { return a * d - b * c; }
  Matrix2 adjugate() const { return {d, -b, -c, a}; }
  /// Throws SingularMatrix when det = 0.
  Matrix2 inverse() const;
  Matrix2 operator*(const Matrix2& rhs) const;
  Matrix2 scaled(const Scalar& s) const { return {a * s, b * s, c * s, d * s}; }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// Point of P^1, normalized to (x:1) or (1:0).
class ProjectivePoint {
 public:
  ProjectivePoint(const Scalar& x, const Scalar& y);
  static ProjectivePoint affine(const Scalar& x);
  static ProjectivePoint infinity(const FieldTag& field);

  const Scalar& x() const noexcept { return x_; }
  const Scalar& y() const noexcept { return y_; }
  const FieldTag& field() const noexcept { return x_.field(); }
  bool is_infinity() const noexcept { return y_.is_zero(); }

  /// Affine points by coordinate, infinity last.
  friend bool operator<(const ProjectivePoint& p, const ProjectivePoint& q);
  friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) { return p.x_ == q.x_ && p.y_ == q.y_; }

  std::string to_string() const;

 private:
  Scalar x_;
  Scalar y_;
};

// Element of PGL_2(k), stored with its first nonzero row-major entry equal to 1.
class MoebiusMap {
 public:
  explicit MoebiusMap(const Matrix2& m);
  MoebiusMap(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) : MoebiusMap(Matrix2{a, b, c, d}) {}
  static MoebiusMap identity(const FieldTag& field) { return MoebiusMap(Matrix2::identity(field)); }

  const Matrix2& matrix() const noexcept { return m_; }
  const FieldTag& field() const noexcept { return m_.field(); }

  ProjectivePoint apply(const ProjectivePoint& p) const;
  MoebiusMap operator*(const MoebiusMap& rhs) const { return MoebiusMap(m_ * rhs.m_); }
  MoebiusMap inverse() const { return MoebiusMap(m_.adjugate()); }
  bool is_identity() const;

  friend bool operator==(const MoebiusMap& p, const MoebiusMap& q) { return p.m_ == q.m_; }
  /// Lexicographic on the normalized entries.
  friend bool operator<(const MoebiusMap& p, const MoebiusMap& q);

  std::string to_string() const;

 private:
  Matrix2 m_;
};

/// The unique map with src[i] -> dst[i]; DegenerateTriple on repeated points.
MoebiusMap from_three_points(const std::array<ProjectivePoint, 3>& src, const std::array<ProjectivePoint, 3>& dst);

/// Least n <= bound with A^n = 1, or nullopt.
std::optional<unsigned> element_order(const MoebiusMap& a, unsigned bound);

/// The involution with A(P1) = P2 and A(P3) = P4.
MoebiusMap solve_pairing_involution(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3,
                                    const ProjectivePoint& p4);

}  // namespace hyperell

#endif  // HYPERELL_MOEBIUS_HPP
