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

#ifndef HYPERELL_SCALAR_HPP
#define HYPERELL_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperell {

enum class FieldKind { Rational, Prime, Extension };

struct FiniteFieldInfo;

/// Identifies the field a Scalar lives in: Q, F_p (p odd prime), or F_{p^m}.
///
/// Extension fields are represented as F_p[t]/(m(t)) where m(t) is the
/// lexicographically least monic irreducible polynomial of the requested
/// degree, so two tags with equal (p, m) always describe the same model.
class FieldTag {
 public:
  FieldTag() = default;  // Q

  static FieldTag rational() { return FieldTag(); }
  static FieldTag prime(std::uint64_t p);
  /// F_{p^degree}; degree 1 yields the prime field.
  static FieldTag extension(std::uint64_t p, unsigned degree);
  /// Parses "Q", "Fp:7" or "Fp:7^2".
  static FieldTag parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != FieldKind::Rational; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// Degree over the prime field (1 for F_p and for Q).
  unsigned degree() const noexcept { return m_; }
  /// Number of elements; 0 for Q.
  std::uint64_t order() const noexcept;
  /// Monic defining polynomial of an extension field, ascending coefficients.
  const std::vector<std::uint64_t>& modulus() const;
  /// Underlying prime field of a finite field; Q for Q.
  FieldTag prime_subfield() const;

  std::string to_string() const;

  friend bool operator==(const FieldTag& a, const FieldTag& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  friend class Scalar;
  friend const FiniteFieldInfo& field_info(const FieldTag&);

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t p_ = 0;
  unsigned m_ = 1;
  std::shared_ptr<const FiniteFieldInfo> info_;
};

enum class SquareClass { Square, NonSquare };

/// Group law on k*/(k*)^2 for fields with exactly two square classes.
constexpr SquareClass operator*(SquareClass a, SquareClass b) noexcept {
  return a == b ? SquareClass::Square : SquareClass::NonSquare;
}

std::string_view to_string(SquareClass c) noexcept;

/// An exact element of Q, F_p or F_{p^m}. Values are immutable once built;
/// arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  using Residues = std::vector<std::uint64_t>;

  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldTag& field, long long value);
  Scalar(const FieldTag& field, const mpz_class& value);
  explicit Scalar(const mpq_class& value);

  static Scalar rational(long long num, long long den = 1);
  /// Element of an extension field from its coordinates in the power basis.
  static Scalar from_coordinates(const FieldTag& field, Residues coords);
  /// Accepts "3/4", "-2" (any field, reduced as needed) and "[c0,c1,..]" for extensions.
  static Scalar parse(const FieldTag& field, std::string_view text);
  /// Embeds a value of the prime field (or Q into Q) into `field`.
  static Scalar embed(const FieldTag& field, const Scalar& value);

  const FieldTag& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar zero() const { return Scalar(field_, 0); }
  Scalar one() const { return Scalar(field_, 1); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  Scalar inverse() const;
  /// Negative exponents invert first.
  Scalar pow(long long exponent) const;
  Scalar pow(const mpz_class& exponent) const;

  /// Canonical total order: rationals by value, residues by representative in
  /// [0, p), extension elements by coordinates from the top degree down.
  int compare(const Scalar& rhs) const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }

  std::string to_string() const;
  std::size_t hash() const noexcept;

  const mpq_class& as_rational() const;
  std::uint64_t as_residue() const;
  const Residues& as_coordinates() const;

 private:
  struct Raw {};
  Scalar(Raw, FieldTag field, std::uint64_t residue);
  Scalar(Raw, FieldTag field, Residues coords);
  void check_same_field(const Scalar& rhs) const;

  FieldTag field_;
  std::variant<mpq_class, std::uint64_t, Residues> value_;
};

/// Square class of a nonzero scalar. Over Q the answer is exact (a perfect
/// square test on numerator and denominator); over finite fields it uses
/// Euler's criterion. Zero throws ZeroInput.
SquareClass square_class(const Scalar& a);

/// True iff char(k) is positive and divides n.
bool char_divides(const FieldTag& field, long long n);

/// Canonical primitive `order`-th root of unity: g^((q-1)/order) for the least
/// primitive element g of a finite field, and +-1 over Q. Empty if the field
/// has none.
std::optional<Scalar> root_of_unity(const FieldTag& field, std::uint64_t order);

/// Least generator of the multiplicative group of a finite field.
Scalar primitive_element(const FieldTag& field);

/// The index-th element of a finite field in canonical enumeration order
/// (base-p digits of the index as power-basis coordinates).
Scalar field_element(const FieldTag& field, std::uint64_t index);

}  // namespace hyperell

template <>
struct std::hash<hyperell::Scalar> {
  std::size_t operator()(const hyperell::Scalar& s) const noexcept { return s.hash(); }
};

#endif  // HYPERELL_SCALAR_HPP
