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

#include "hyperell/moebius.hpp"

#include "hyperell/error.hpp"

namespace hyperell {

Matrix2 Matrix2::identity(const FieldTag& field) {
  const Scalar one(field, 1);
  const Scalar zero(field, 0);
  return {one, zero, zero, one};
}

Matrix2 Matrix2::inverse() const {
  const Scalar dt = det();
  require(!dt.is_zero(), ErrorCode::SingularMatrix, "matrix is singular");
  return adjugate().scaled(dt.inverse());
}

Matrix2 Matrix2::operator*(const Matrix2& r) const {
  return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
}

ProjectivePoint::ProjectivePoint(const Scalar& x, const Scalar& y) {
  require(x.field() == y.field(), ErrorCode::FieldMismatch, "point coordinates in different fields");
  require(!(x.is_zero() && y.is_zero()), ErrorCode::DegenerateInput, "(0:0) is not a point of P^1");
  if (y.is_zero()) {
    x_ = x.one();
    y_ = y;
  } else {
    x_ = x / y;
    y_ = y.one();
  }
}

ProjectivePoint ProjectivePoint::affine(const Scalar& x) { return ProjectivePoint(x, x.one()); }

ProjectivePoint ProjectivePoint::infinity(const FieldTag& field) {
  return ProjectivePoint(Scalar(field, 1), Scalar(field, 0));
}

bool operator<(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.is_infinity() != q.is_infinity()) return q.is_infinity();
  return p.x_ < q.x_;
}

std::string ProjectivePoint::to_string() const {
  return "(" + x_.to_string() + ":" + y_.to_string() + ")";
}

MoebiusMap::MoebiusMap(const Matrix2& m) {
  require(!m.det().is_zero(), ErrorCode::SingularMatrix, "matrix is singular");
  const Scalar& lead = !m.a.is_zero() ? m.a : m.b;
  m_ = lead.is_one() ? m : m.scaled(lead.inverse());
}

ProjectivePoint MoebiusMap::apply(const ProjectivePoint& p) const {
  return ProjectivePoint(m_.a * p.x() + m_.b * p.y(), m_.c * p.x() + m_.d * p.y());
}

bool MoebiusMap::is_identity() const {
  return m_.a.is_one() && m_.b.is_zero() && m_.c.is_zero() && m_.d.is_one();
}

bool operator<(const MoebiusMap& p, const MoebiusMap& q) {
  const std::array<const Scalar*, 4> u{&p.m_.a, &p.m_.b, &p.m_.c, &p.m_.d};
  const std::array<const Scalar*, 4> v{&q.m_.a, &q.m_.b, &q.m_.c, &q.m_.d};
  for (std::size_t i = 0; i < 4; ++i) {
    const int c = u[i]->compare(*v[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string MoebiusMap::to_string() const {
  return "[[" + m_.a.to_string() + "," + m_.b.to_string() + "],[" + m_.c.to_string() + "," + m_.d.to_string() + "]]";
}

namespace {

Scalar cross(const ProjectivePoint& p, const ProjectivePoint& q) { return p.x() * q.y() - p.y() * q.x(); }

// Columns alpha*v1, beta*v2 with alpha*v1 + beta*v2 = v3: sends (1:0), (0:1), (1:1) to the triple.
Matrix2 frame(const std::array<ProjectivePoint, 3>& t) {
  const Scalar d12 = cross(t[0], t[1]);
  const Scalar d32 = cross(t[2], t[1]);
  const Scalar d13 = cross(t[0], t[2]);
  require(!d12.is_zero() && !d32.is_zero() && !d13.is_zero(), ErrorCode::DegenerateTriple,
          "triple contains a repeated point");
  const Scalar alpha = d32 / d12;
  const Scalar beta = d13 / d12;
  return {alpha * t[0].x(), beta * t[1].x(), alpha * t[0].y(), beta * t[1].y()};
}

}  // namespace

MoebiusMap from_three_points(const std::array<ProjectivePoint, 3>& src, const std::array<ProjectivePoint, 3>& dst) {
  return MoebiusMap(frame(dst) * frame(src).adjugate());
}

std::optional<unsigned> element_order(const MoebiusMap& a, unsigned bound) {
  require(bound >= 1, ErrorCode::PreconditionViolated, "order bound must be positive");
  MoebiusMap power = a;
  for (unsigned n = 1; n <= bound; ++n) {
    if (power.is_identity()) return n;
    power = power * a;
  }
  return std::nullopt;
}

MoebiusMap solve_pairing_involution(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3,
                                    const ProjectivePoint& p4) {
  const FieldTag& field = p1.field();
  const Scalar zero(field, 0);
  const Scalar one(field, 1);
  std::optional<MoebiusMap> to_standard;
  try {
    to_standard = from_three_points({p1, p2, p3}, {ProjectivePoint(one, zero), ProjectivePoint(one, one),
                                                   ProjectivePoint(zero, one)});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateTriple) throw;
    fail(ErrorCode::DegenerateConfiguration, "P1, P2, P3 must be distinct");
  }
  const ProjectivePoint q4 = to_standard->apply(p4);
  const Scalar& c = q4.x();
  const Scalar& d = q4.y();
  require(!c.is_zero() && !d.is_zero() && c != d, ErrorCode::DegenerateConfiguration,
          "fourth point coincides with one of the first three");
  const Scalar lambda = -d.inverse();
  const MoebiusMap standard(one, lambda * c, one, lambda * d);
  return to_standard->inverse() * standard * *to_standard;
}

}  // namespace hyperell
