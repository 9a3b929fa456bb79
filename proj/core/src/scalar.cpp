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

#include "hyperell/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>

#include "hyperell/arith.hpp"
#include "hyperell/error.hpp"

namespace hyperell {

struct FiniteFieldInfo {
  std::uint64_t p = 0;
  unsigned m = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // monic, size m + 1; empty for prime fields

  mutable std::once_flag generator_once;
  mutable std::uint64_t generator_index = 0;
};

const FiniteFieldInfo& field_info(const FieldTag& field) {
  require(field.is_finite(), ErrorCode::NotFinite, "operation requires a finite field");
  return *field.info_;
}

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = arith::add_mod(out[i + j], arith::mul_mod(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

// Remainder of a modulo a nonzero b.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = arith::inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t t = arith::mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = arith::sub_mod(a[shift + j], arith::mul_mod(t, b[j], p), p);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& mod, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(base, mod, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mod(poly_mul(result, base, p), mod, p);
    base = poly_mod(poly_mul(base, base, p), mod, p);
    exp >>= 1;
  }
  return result;
}

// x^(p^k) mod f.
Poly frobenius_x(unsigned k, const Poly& f, std::uint64_t p) {
  Poly h{0, 1};
  h = poly_mod(h, f, p);
  for (unsigned i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

// Rabin's irreducibility test for a monic polynomial of degree m.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  Poly x{0, 1};
  if (frobenius_x(m, f, p) != poly_mod(x, f, p)) return false;
  for (auto [r, e] : arith::factor(m)) {
    (void)e;
    Poly h = frobenius_x(m / static_cast<unsigned>(r), f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = arith::sub_mod(h[1], 1, p);
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly least_irreducible(std::uint64_t p, unsigned m) {
  const std::uint64_t count = arith::checked_pow(p, m);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Poly f(m + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

std::shared_ptr<const FiniteFieldInfo> make_info(std::uint64_t p, unsigned m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FiniteFieldInfo>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(p, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto info = std::make_shared<FiniteFieldInfo>();
  info->p = p;
  info->m = m;
  info->q = arith::checked_pow(p, m);
  if (m > 1) info->modulus = least_irreducible(p, m);
  cache.emplace(key, info);
  return info;
}

std::uint64_t residue_of(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

std::uint64_t residue_of(const mpq_class& value, std::uint64_t p) {
  const std::uint64_t den = residue_of(value.get_den(), p);
  require(den != 0, ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
  return arith::mul_mod(residue_of(value.get_num(), p), arith::inv_mod(den, p), p);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    fail(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
  }
  require(value.get_den() != 0, ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

}  // namespace

// ---------------------------------------------------------------- FieldTag

FieldTag FieldTag::prime(std::uint64_t p) { return extension(p, 1); }

FieldTag FieldTag::extension(std::uint64_t p, unsigned degree) {
  require(p != 2, ErrorCode::BadCharacteristic, "characteristic 2 is not supported");
  require(arith::is_prime(p), ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  require(degree >= 1, ErrorCode::InvalidField, "extension degree must be positive");
  require(arith::checked_pow(p, degree) != 0, ErrorCode::InvalidField, "field too large");
  FieldTag tag;
  tag.kind_ = degree == 1 ? FieldKind::Prime : FieldKind::Extension;
  tag.p_ = p;
  tag.m_ = degree;
  tag.info_ = make_info(p, degree);
  return tag;
}

FieldTag FieldTag::parse(std::string_view text) {
  if (text == "Q") return rational();
  if (text.substr(0, 3) != "Fp:") fail(ErrorCode::ParseError, "unknown field '" + std::string(text) + "'");
  std::string_view rest = text.substr(3);
  std::uint64_t p = 0;
  unsigned m = 1;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
  if (ec != std::errc{}) fail(ErrorCode::ParseError, "malformed field '" + std::string(text) + "'");
  if (ptr != rest.data() + rest.size()) {
    if (*ptr != '^') fail(ErrorCode::ParseError, "malformed field '" + std::string(text) + "'");
    auto [ptr2, ec2] = std::from_chars(ptr + 1, rest.data() + rest.size(), m);
    if (ec2 != std::errc{} || ptr2 != rest.data() + rest.size()) {
      fail(ErrorCode::ParseError, "malformed field '" + std::string(text) + "'");
    }
  }
  return extension(p, m);
}

std::uint64_t FieldTag::order() const noexcept { return info_ ? info_->q : 0; }

const std::vector<std::uint64_t>& FieldTag::modulus() const {
  require(kind_ == FieldKind::Extension, ErrorCode::UnsupportedField, "not an extension field");
  return info_->modulus;
}

FieldTag FieldTag::prime_subfield() const {
  return kind_ == FieldKind::Extension ? prime(p_) : *this;
}

std::string FieldTag::to_string() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "Fp:" + std::to_string(p_);
    case FieldKind::Extension: return "Fp:" + std::to_string(p_) + "^" + std::to_string(m_);
  }
  return "?";
}

std::string_view to_string(SquareClass c) noexcept {
  return c == SquareClass::Square ? "Square" : "NonSquare";
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(Raw, FieldTag field, std::uint64_t residue) : field_(std::move(field)), value_(residue) {}

Scalar::Scalar(Raw, FieldTag field, Residues coords) : field_(std::move(field)), value_(std::move(coords)) {}

Scalar::Scalar(const FieldTag& field, long long value) : Scalar(field, mpz_class(std::to_string(value))) {}

Scalar::Scalar(const FieldTag& field, const mpz_class& value) : field_(field) {
  switch (field.kind()) {
    case FieldKind::Rational:
      value_ = mpq_class(value);
      break;
    case FieldKind::Prime:
      value_ = residue_of(value, field.characteristic());
      break;
    case FieldKind::Extension: {
      Residues coords(field.degree(), 0);
      coords[0] = residue_of(value, field.characteristic());
      value_ = std::move(coords);
      break;
    }
  }
}

Scalar::Scalar(const mpq_class& value) : value_(value) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(long long num, long long den) {
  require(den != 0, ErrorCode::DivisionByZero, "zero denominator");
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  return Scalar(q);
}

Scalar Scalar::from_coordinates(const FieldTag& field, Residues coords) {
  require(field.kind() == FieldKind::Extension, ErrorCode::UnsupportedField, "coordinates need an extension field");
  require(coords.size() <= field.degree(), ErrorCode::ParseError, "too many coordinates");
  coords.resize(field.degree(), 0);
  for (auto& c : coords) c %= field.characteristic();
  return Scalar(Raw{}, field, std::move(coords));
}

Scalar Scalar::parse(const FieldTag& field, std::string_view text) {
  if (field.kind() == FieldKind::Extension && !text.empty() && text.front() == '[') {
    require(text.back() == ']', ErrorCode::ParseError, "malformed coordinates '" + std::string(text) + "'");
    Residues coords;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      coords.push_back(residue_of(parse_rational(item), field.characteristic()));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return from_coordinates(field, std::move(coords));
  }
  const mpq_class q = parse_rational(text);
  switch (field.kind()) {
    case FieldKind::Rational:
      return Scalar(q);
    case FieldKind::Prime:
      return Scalar(Raw{}, field, residue_of(q, field.characteristic()));
    case FieldKind::Extension: {
      Residues coords(field.degree(), 0);
      coords[0] = residue_of(q, field.characteristic());
      return Scalar(Raw{}, field, std::move(coords));
    }
  }
  return {};
}

Scalar Scalar::embed(const FieldTag& field, const Scalar& value) {
  if (value.field() == field) return value;
  require(value.field().kind() == FieldKind::Prime && field.is_finite() &&
              field.characteristic() == value.field().characteristic(),
          ErrorCode::FieldMismatch, "cannot embed " + value.field().to_string() + " into " + field.to_string());
  Residues coords(field.degree(), 0);
  coords[0] = value.as_residue();
  return Scalar(Raw{}, field, std::move(coords));
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    fail(ErrorCode::FieldMismatch, "mixed fields " + field_.to_string() + " and " + rhs.field_.to_string());
  }
}

bool Scalar::is_zero() const noexcept {
  switch (field_.kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(value_) == 0;
    case FieldKind::Prime: return std::get<std::uint64_t>(value_) == 0;
    case FieldKind::Extension: {
      const auto& c = std::get<Residues>(value_);
      return std::all_of(c.begin(), c.end(), [](std::uint64_t v) { return v == 0; });
    }
  }
  return false;
}

bool Scalar::is_one() const noexcept {
  switch (field_.kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(value_) == 1;
    case FieldKind::Prime: return std::get<std::uint64_t>(value_) == 1;
    case FieldKind::Extension: {
      const auto& c = std::get<Residues>(value_);
      return c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](std::uint64_t v) { return v == 0; });
    }
  }
  return false;
}

Scalar Scalar::operator-() const {
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::Rational: return Scalar(mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::Prime: return Scalar(Raw{}, field_, arith::sub_mod(0, std::get<std::uint64_t>(value_), p));
    case FieldKind::Extension: {
      Residues c = std::get<Residues>(value_);
      for (auto& v : c) v = arith::sub_mod(0, v, p);
      return Scalar(Raw{}, field_, std::move(c));
    }
  }
  return {};
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_same_field(rhs);
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::Rational:
      return Scalar(mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_)));
    case FieldKind::Prime:
      return Scalar(Raw{}, field_, arith::add_mod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(rhs.value_), p));
    case FieldKind::Extension: {
      Residues c = std::get<Residues>(value_);
      const auto& d = std::get<Residues>(rhs.value_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = arith::add_mod(c[i], d[i], p);
      return Scalar(Raw{}, field_, std::move(c));
    }
  }
  return {};
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_same_field(rhs);
  const std::uint64_t p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::Rational:
      return Scalar(mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_)));
    case FieldKind::Prime:
      return Scalar(Raw{}, field_, arith::mul_mod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(rhs.value_), p));
    case FieldKind::Extension: {
      const auto& mod = field_.modulus();
      const unsigned m = field_.degree();
      const auto& a = std::get<Residues>(value_);
      const auto& b = std::get<Residues>(rhs.value_);
      Residues prod(2 * m - 1, 0);
      for (unsigned i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
          prod[i + j] = arith::add_mod(prod[i + j], arith::mul_mod(a[i], b[j], p), p);
        }
      }
      for (unsigned k = 2 * m - 2; k >= m; --k) {
        const std::uint64_t t = prod[k];
        if (t == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
          prod[k - m + j] = arith::sub_mod(prod[k - m + j], arith::mul_mod(t, mod[j], p), p);
        }
        prod[k] = 0;
      }
      prod.resize(m);
      return Scalar(Raw{}, field_, std::move(prod));
    }
  }
  return {};
}

Scalar Scalar::inverse() const {
  require(!is_zero(), ErrorCode::DivisionByZero, "division by zero");
  switch (field_.kind()) {
    case FieldKind::Rational: return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
    case FieldKind::Prime:
      return Scalar(Raw{}, field_, arith::inv_mod(std::get<std::uint64_t>(value_), field_.characteristic()));
    case FieldKind::Extension: {
      const std::uint64_t q = field_.order();
      return pow(static_cast<long long>(q - 2));
    }
  }
  return {};
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  check_same_field(rhs);
  return *this * rhs.inverse();
}

Scalar Scalar::pow(long long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  if (field_.kind() == FieldKind::Rational) {
    const auto& v = std::get<mpq_class>(value_);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Scalar(mpq_class(num, den));
  }
  if (field_.kind() == FieldKind::Prime) {
    return Scalar(Raw{}, field_, arith::pow_mod(std::get<std::uint64_t>(value_), static_cast<std::uint64_t>(exponent),
                                         field_.characteristic()));
  }
  Scalar result = one();
  Scalar base = *this;
  auto e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::pow(const mpz_class& exponent) const {
  if (field_.is_finite()) {
    if (is_zero()) {
      require(exponent >= 0, ErrorCode::DivisionByZero, "zero to a negative power");
      return exponent == 0 ? one() : zero();
    }
    const mpz_class group(std::to_string(field_.order() - 1));
    mpz_class e = exponent % group;
    if (e < 0) e += group;
    return pow(static_cast<long long>(std::stoull(e.get_str())));
  }
  require(exponent.fits_slong_p(), ErrorCode::BoundExceeded, "exponent too large for a rational power");
  return pow(static_cast<long long>(exponent.get_si()));
}

int Scalar::compare(const Scalar& rhs) const {
  check_same_field(rhs);
  switch (field_.kind()) {
    case FieldKind::Rational: {
      const int c = cmp(std::get<mpq_class>(value_), std::get<mpq_class>(rhs.value_));
      return (c > 0) - (c < 0);
    }
    case FieldKind::Prime: {
      const auto a = std::get<std::uint64_t>(value_);
      const auto b = std::get<std::uint64_t>(rhs.value_);
      return (a > b) - (a < b);
    }
    case FieldKind::Extension: {
      const auto& a = std::get<Residues>(value_);
      const auto& b = std::get<Residues>(rhs.value_);
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(value_).get_str();
    case FieldKind::Prime: return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::Extension: {
      const auto& c = std::get<Residues>(value_);
      std::string out = "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
      }
      return out + "]";
    }
  }
  return {};
}

std::size_t Scalar::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(field_.characteristic());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  switch (field_.kind()) {
    case FieldKind::Rational: mix(std::hash<std::string>{}(std::get<mpq_class>(value_).get_str())); break;
    case FieldKind::Prime: mix(std::get<std::uint64_t>(value_)); break;
    case FieldKind::Extension:
      for (auto v : std::get<Residues>(value_)) mix(v);
      break;
  }
  return h;
}

const mpq_class& Scalar::as_rational() const {
  require(field_.kind() == FieldKind::Rational, ErrorCode::FieldMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::as_residue() const {
  require(field_.kind() == FieldKind::Prime, ErrorCode::FieldMismatch, "not a prime-field scalar");
  return std::get<std::uint64_t>(value_);
}

const Scalar::Residues& Scalar::as_coordinates() const {
  require(field_.kind() == FieldKind::Extension, ErrorCode::FieldMismatch, "not an extension-field scalar");
  return std::get<Residues>(value_);
}

// ----------------------------------------------------------- free functions

SquareClass square_class(const Scalar& a) {
  require(!a.is_zero(), ErrorCode::ZeroInput, "square class of zero is undefined");
  const FieldTag& field = a.field();
  if (field.kind() == FieldKind::Rational) {
    const mpq_class& v = a.as_rational();
    const bool square = v > 0 && mpz_perfect_square_p(v.get_num().get_mpz_t()) != 0 &&
                        mpz_perfect_square_p(v.get_den().get_mpz_t()) != 0;
    return square ? SquareClass::Square : SquareClass::NonSquare;
  }
  const std::uint64_t half = (field.order() - 1) / 2;
  return a.pow(static_cast<long long>(half)).is_one() ? SquareClass::Square : SquareClass::NonSquare;
}

bool char_divides(const FieldTag& field, long long n) {
  const std::uint64_t p = field.characteristic();
  if (p == 0) return false;
  const auto magnitude = static_cast<std::uint64_t>(n < 0 ? -n : n);
  return magnitude % p == 0;
}

Scalar field_element(const FieldTag& field, std::uint64_t index) {
  require(field.is_finite(), ErrorCode::NotFinite, "enumeration needs a finite field");
  require(index < field.order(), ErrorCode::PreconditionViolated, "element index out of range");
  if (field.kind() == FieldKind::Prime) return Scalar(field, static_cast<long long>(index));
  Scalar::Residues coords(field.degree(), 0);
  for (unsigned i = 0; i < field.degree(); ++i) {
    coords[i] = index % field.characteristic();
    index /= field.characteristic();
  }
  return Scalar::from_coordinates(field, std::move(coords));
}

Scalar primitive_element(const FieldTag& field) {
  const FiniteFieldInfo& info = field_info(field);
  std::call_once(info.generator_once, [&] {
    const std::uint64_t group = info.q - 1;
    const auto factors = arith::factor(group);
    for (std::uint64_t idx = 1; idx < info.q; ++idx) {
      const Scalar g = field_element(field, idx);
      bool generator = true;
      for (auto [r, e] : factors) {
        (void)e;
        if (g.pow(static_cast<long long>(group / r)).is_one()) {
          generator = false;
          break;
        }
      }
      if (generator) {
        info.generator_index = idx;
        return;
      }
    }
  });
  return field_element(field, info.generator_index);
}

std::optional<Scalar> root_of_unity(const FieldTag& field, std::uint64_t order) {
  require(order >= 1, ErrorCode::PreconditionViolated, "root of unity order must be positive");
  if (!field.is_finite()) {
    if (order == 1) return Scalar(field, 1);
    if (order == 2) return Scalar(field, -1);
    return std::nullopt;
  }
  const std::uint64_t group = field.order() - 1;
  if (group % order != 0) return std::nullopt;
  return primitive_element(field).pow(static_cast<long long>(group / order));
}

}  // namespace hyperell
