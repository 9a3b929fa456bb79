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

#ifndef HYPERELL_POLYNOMIAL_HPP
#define HYPERELL_POLYNOMIAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperell/scalar.hpp"

namespace hyperell {

// Univariate polynomial over a FieldTag, coefficients ascending and trimmed.
class Polynomial {
 public:
  explicit Polynomial(FieldTag field = {}) : field_(std::move(field)) {}
  Polynomial(FieldTag field, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial x(const FieldTag& field);
  /// c * x^k
  static Polynomial monomial(const Scalar& c, unsigned k);

  const FieldTag& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Polynomial derivative() const;
  Scalar eval(const Scalar& x) const;
  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator%(const Polynomial& rhs) const { return divmod(rhs).second; }
  Polynomial operator/(const Polynomial& rhs) const { return divmod(rhs).first; }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  FieldTag field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// base^exp mod modulus.
Polynomial powmod(const Polynomial& base, std::uint64_t exp, const Polynomial& modulus);

/// Determinant by Gaussian elimination over the entries' field.
Scalar determinant(std::vector<std::vector<Scalar>> rows);

/// Distinct roots in the coefficient field, sorted canonically.
/// Over Q the rational root test needs the extreme coefficients factored; integer
/// parts with a composite cofactor beyond 10^12 raise BoundExceeded.
std::vector<Scalar> distinct_roots(const Polynomial& f);

/// Degree of the splitting field of a nonzero polynomial over a finite field.
unsigned splitting_degree(const Polynomial& f);

}  // namespace hyperell

#endif  // HYPERELL_POLYNOMIAL_HPP
