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

#ifndef HYPERELL_BINARY_FORM_HPP
#define HYPERELL_BINARY_FORM_HPP

#include <optional>
#include <vector>

#include "hyperell/moebius.hpp"
#include "hyperell/polynomial.hpp"
#include "hyperell/scalar.hpp"

namespace hyperell {

// f(X, Y) = sum c_i X^i Y^(2g+2-i), coefficients ascending in X.
class BinaryForm {
 public:
  BinaryForm(unsigned genus, std::vector<Scalar> coeffs);
  /// Homogenizes a polynomial of degree <= 2g+2.
  static BinaryForm from_polynomial(unsigned genus, const Polynomial& f);

  unsigned genus() const noexcept { return genus_; }
  unsigned degree() const noexcept { return 2 * genus_ + 2; }
  const FieldTag& field() const noexcept { return coeffs_.front().field(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& coeff(std::size_t i) const { return coeffs_.at(i); }
  const Scalar& leading() const { return coeffs_.back(); }

  /// f(x, 1).
  Polynomial dehomogenize() const;
  Scalar evaluate(const Scalar& x, const Scalar& y) const;
  BinaryForm scaled(const Scalar& s) const;
  /// The scalar s with *this = s * other, if any.
  std::optional<Scalar> ratio_to(const BinaryForm& other) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.genus_ == b.genus_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  unsigned genus_;
  std::vector<Scalar> coeffs_;
};

/// Determinant of the Sylvester matrix; equals lead(h)^deg f * prod f(beta) over roots of h.
Scalar sylvester_resultant(const Polynomial& f, const Polynomial& h);

/// (-1)^(n(n-1)/2) Res(f, f') / lead(f) for a polynomial of exact degree n >= 1.
Scalar polynomial_discriminant(const Polynomial& f);

/// Discriminant of a degree-(2g+2) form; a root at infinity is first moved by Y -> Y + tX.
Scalar discriminant(const BinaryForm& f);

bool is_smooth(const BinaryForm& f);

/// f(M (X, Y)) without any determinant twist.
BinaryForm substitute(const BinaryForm& f, const Matrix2& m);

/// det(A)^(g+1) f(A^-1 (X, Y)).
BinaryForm gl2_act(const Matrix2& a, const BinaryForm& f);

/// Roots of the form in P^1 (infinity when the top coefficient vanishes), sorted.
/// Throws NonSplitForm naming the unsplit cofactor when fewer than 2g+2 distinct roots are rational.
std::vector<ProjectivePoint> form_roots(const BinaryForm& f);

/// Distinct roots in P^1 that are rational over the field, sorted.
std::vector<ProjectivePoint> rational_form_roots(const BinaryForm& f);

/// Degree of the extension of the field over which all roots of the form are rational.
unsigned form_splitting_degree(const BinaryForm& f);

/// prod over points of (y_i X - x_i Y), with (1:0) contributing Y.
BinaryForm form_from_roots(unsigned genus, const std::vector<ProjectivePoint>& points);

}  // namespace hyperell

#endif  // HYPERELL_BINARY_FORM_HPP
