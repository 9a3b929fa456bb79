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

#include "hyperell/binary_form.hpp"

#include <algorithm>

#include "hyperell/error.hpp"

namespace hyperell {

namespace {

// Product of homogeneous coefficient vectors (ascending in X).
std::vector<Scalar> multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(u.size() + v.size() - 1, u.front().zero());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
  }
  return out;
}

// Powers 0..n of the linear form p X + q Y.
std::vector<std::vector<Scalar>> linear_powers(const Scalar& p, const Scalar& q, unsigned n) {
  std::vector<std::vector<Scalar>> out{{p.one()}};
  const std::vector<Scalar> linear{q, p};
  for (unsigned k = 1; k <= n; ++k) out.push_back(multiply(out.back(), linear));
  return out;
}

}  // namespace

BinaryForm::BinaryForm(unsigned genus, std::vector<Scalar> coeffs) : genus_(genus), coeffs_(std::move(coeffs)) {
  require(genus >= 2, ErrorCode::WrongDegree, "genus must be at least 2");
  require(coeffs_.size() == 2 * genus + 3, ErrorCode::WrongDegree,
          "a genus-" + std::to_string(genus) + " form needs " + std::to_string(2 * genus + 3) + " coefficients");
  for (const auto& c : coeffs_) {
    require(c.field() == coeffs_.front().field(), ErrorCode::FieldMismatch, "coefficients in different fields");
  }
  require(std::any_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return !c.is_zero(); }),
          ErrorCode::ZeroInput, "the zero form is not allowed");
}

BinaryForm BinaryForm::from_polynomial(unsigned genus, const Polynomial& f) {
  require(f.degree() <= static_cast<int>(2 * genus + 2), ErrorCode::WrongDegree, "polynomial degree exceeds 2g+2");
  std::vector<Scalar> coeffs;
  for (unsigned i = 0; i <= 2 * genus + 2; ++i) coeffs.push_back(f.coeff(i));
  return BinaryForm(genus, std::move(coeffs));
}

Polynomial BinaryForm::dehomogenize() const { return Polynomial(field(), coeffs_); }

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar acc = x.zero();
  Scalar ypow = x.one();
  // Horner in x with y-powers accumulated from the top degree down.
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i] * ypow;
    ypow *= y;
  }
  return acc;
}

BinaryForm BinaryForm::scaled(const Scalar& s) const {
  std::vector<Scalar> out;
  for (const auto& c : coeffs_) out.push_back(c * s);
  return BinaryForm(genus_, std::move(out));
}

std::optional<Scalar> BinaryForm::ratio_to(const BinaryForm& other) const {
  if (genus_ != other.genus_ || !(field() == other.field())) return std::nullopt;
  std::size_t i = 0;
  while (other.coeffs_[i].is_zero()) ++i;
  const Scalar s = coeffs_[i] / other.coeffs_[i];
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != s * other.coeffs_[j]) return std::nullopt;
  }
  return s;
}

std::string BinaryForm::to_string() const {
  std::string out;
  const unsigned n = degree();
  for (unsigned i = n + 1; i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i > 0) out += "*X^" + std::to_string(i);
    if (i < n) out += "*Y^" + std::to_string(n - i);
  }
  return out;
}

Scalar sylvester_resultant(const Polynomial& f, const Polynomial& h) {
  require(!f.is_zero() && !h.is_zero(), ErrorCode::DegenerateInput, "resultant of a zero polynomial");
  require(f.field() == h.field(), ErrorCode::FieldMismatch, "polynomials over different fields");
  const int m = f.degree();
  const int r = h.degree();
  if (r == 0) return h.coeff(0).pow(m);
  if (m == 0) return f.coeff(0).pow(r);
  const int size = m + r;
  const Scalar zero = f.coeff(0).zero();
  std::vector<std::vector<Scalar>> rows(size, std::vector<Scalar>(size, zero));
  // h rows first, so that Res(f, h) = lead(h)^m prod f(beta).
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= r; ++k) rows[i][i + k] = h.coeff(r - k);
  }
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k <= m; ++k) rows[m + i][i + k] = f.coeff(m - k);
  }
  return determinant(std::move(rows));
}

Scalar polynomial_discriminant(const Polynomial& f) {
  const int n = f.degree();
  require(n >= 1, ErrorCode::DegenerateInput, "discriminant needs a nonconstant polynomial");
  const Scalar res = sylvester_resultant(f, f.derivative());
  const bool negate = (static_cast<long long>(n) * (n - 1) / 2) % 2 != 0;
  const Scalar d = res / f.leading();
  return negate ? -d : d;
}

Scalar discriminant(const BinaryForm& f) {
  require(!char_divides(f.field(), f.degree()), ErrorCode::BadCharacteristic,
          "characteristic divides the degree " + std::to_string(f.degree()));
  if (!f.leading().is_zero()) return polynomial_discriminant(f.dehomogenize());
  // Y -> Y + tX has determinant 1 and leaves the discriminant unchanged.
  const FieldTag& field = f.field();
  for (long long t = 1; t <= static_cast<long long>(f.degree()) + 1; ++t) {
    const Scalar ts(field, t);
    if (t > 1 && ts.is_zero()) break;
    const Scalar one = ts.one();
    const BinaryForm shifted = substitute(f, Matrix2{one, one.zero(), ts, one});
    if (!shifted.leading().is_zero()) return polynomial_discriminant(shifted.dehomogenize());
  }
  fail(ErrorCode::DegenerateInput, "no coordinate shift moves infinity off the roots");
}

bool is_smooth(const BinaryForm& f) { return !discriminant(f).is_zero(); }

BinaryForm substitute(const BinaryForm& f, const Matrix2& m) {
  require(f.field() == m.field(), ErrorCode::FieldMismatch, "matrix and form over different fields");
  const unsigned n = f.degree();
  const auto xs = linear_powers(m.a, m.b, n);
  const auto ys = linear_powers(m.c, m.d, n);
  std::vector<Scalar> out(n + 1, f.coeff(0).zero());
  for (unsigned i = 0; i <= n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    const auto term = multiply(xs[i], ys[n - i]);
    for (unsigned k = 0; k <= n; ++k) out[k] += f.coeff(i) * term[k];
  }
  return BinaryForm(f.genus(), std::move(out));
}

BinaryForm gl2_act(const Matrix2& a, const BinaryForm& f) {
  const Scalar det = a.det();
  require(!det.is_zero(), ErrorCode::SingularMatrix, "matrix is singular");
  return substitute(f, a.adjugate()).scaled(det.pow(-static_cast<long long>(f.genus() + 1)));
}

std::vector<ProjectivePoint> rational_form_roots(const BinaryForm& f) {
  std::vector<ProjectivePoint> out;
  const Polynomial affine = f.dehomogenize();
  if (affine.degree() > 0) {
    for (const Scalar& r : distinct_roots(affine)) out.push_back(ProjectivePoint::affine(r));
  }
  if (f.leading().is_zero()) out.push_back(ProjectivePoint::infinity(f.field()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjectivePoint> form_roots(const BinaryForm& f) {
  auto roots = rational_form_roots(f);
  if (roots.size() == f.degree()) return roots;
  Polynomial cofactor = f.dehomogenize();
  for (const auto& r : roots) {
    if (r.is_infinity()) continue;
    const Polynomial linear = Polynomial::x(f.field()) - Polynomial::constant(r.x());
    while (cofactor.degree() > 0 && (cofactor % linear).is_zero()) cofactor = cofactor / linear;
  }
  fail(ErrorCode::NonSplitForm, "form does not split into distinct rational roots; unsplit factor " + cofactor.to_string());
}

unsigned form_splitting_degree(const BinaryForm& f) {
  const Polynomial affine = f.dehomogenize();
  return affine.degree() <= 1 ? 1 : splitting_degree(affine);
}

BinaryForm form_from_roots(unsigned genus, const std::vector<ProjectivePoint>& points) {
  require(points.size() == 2 * genus + 2, ErrorCode::WrongDegree, "need exactly 2g+2 roots");
  std::vector<Scalar> acc{points.front().x().one()};
  for (const auto& p : points) {
    // y X - x Y vanishes at (x:y); infinity contributes Y.
    const std::vector<Scalar> linear =
        p.is_infinity() ? std::vector<Scalar>{p.x(), p.y()} : std::vector<Scalar>{-p.x(), p.y()};
    acc = multiply(acc, linear);
  }
  return BinaryForm(genus, std::move(acc));
}

}  // namespace hyperell
