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

#include "hyperell/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "hyperell/arith.hpp"
#include "hyperell/error.hpp"

namespace hyperell {

Polynomial::Polynomial(FieldTag field, std::vector<Scalar> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    require(c.field() == field_, ErrorCode::FieldMismatch, "coefficient outside the polynomial's field");
  }
  trim();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const FieldTag& field) { return monomial(Scalar(field, 1), 1); }

Polynomial Polynomial::monomial(const Scalar& c, unsigned k) {
  std::vector<Scalar> coeffs(k + 1, c.zero());
  coeffs[k] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar(field_, 0);
}

Scalar Polynomial::leading() const {
  require(!is_zero(), ErrorCode::ZeroInput, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Scalar(field_, static_cast<long long>(i)));
  }
  return Polynomial(field_, std::move(out));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc(field_, 0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(field_, -1)); }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require(field_ == rhs.field_, ErrorCode::FieldMismatch, "polynomials over different fields");
  std::vector<Scalar> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Scalar(field_, 0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require(field_ == rhs.field_, ErrorCode::FieldMismatch, "polynomials over different fields");
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(field_, 0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require(!divisor.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
  require(field_ == divisor.field_, ErrorCode::FieldMismatch, "polynomials over different fields");
  std::vector<Scalar> rem = coeffs_;
  const int db = divisor.degree();
  if (degree() < db) return {Polynomial(field_), *this};
  std::vector<Scalar> quot(coeffs_.size() - db, Scalar(field_, 0));
  const Scalar lead_inv = divisor.leading().inverse();
  for (int k = degree(); k >= db; --k) {
    const Scalar t = rem[k] * lead_inv;
    quot[k - db] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= t * divisor.coeffs_[j];
  }
  rem.resize(db);
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i > 0) out += "*x^" + std::to_string(i);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a;
  Polynomial v = b;
  while (!v.is_zero()) {
    Polynomial r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t exp, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(Scalar(modulus.field(), 1)) % modulus;
  Polynomial b = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exp >>= 1;
  }
  return result;
}

Scalar determinant(std::vector<std::vector<Scalar>> rows) {
  const std::size_t n = rows.size();
  require(n > 0, ErrorCode::DegenerateInput, "empty matrix");
  Scalar det = rows[0][0].one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return det.zero();
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    const Scalar inv = rows[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

namespace {

void split_linear_factors(const Polynomial& g, std::vector<Scalar>& roots) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const FieldTag& field = g.field();
  const std::uint64_t half = (field.order() - 1) / 2;
  const Polynomial one = Polynomial::constant(Scalar(field, 1));
  // Shifts from the prime subfield cannot separate Galois-conjugate roots, so sample the whole field.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t attempt = 0; attempt < 4096; ++attempt) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    const Polynomial shifted = Polynomial::x(field) + Polynomial::constant(field_element(field, z % field.order()));
    const Polynomial d = gcd(g, powmod(shifted, half, g) - one);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear_factors(d, roots);
      split_linear_factors(g / d, roots);
      return;
    }
  }
  fail(ErrorCode::InternalInconsistency, "equal-degree splitting did not terminate");
}

std::vector<Scalar> finite_field_roots(const Polynomial& f) {
  const FieldTag& field = f.field();
  const Polynomial x = Polynomial::x(field);
  const Polynomial split_part = gcd(f, powmod(x, field.order(), f) - x);
  std::vector<Scalar> roots;
  split_linear_factors(split_part, roots);
  return roots;
}

// u/v with |u|, |v| <= bound and u = a v mod m, if one exists.
std::optional<mpq_class> rational_reconstruction(const mpz_class& a, const mpz_class& m, const mpz_class& bound) {
  mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % m;
  return acc;
}

// Roots of a squarefree integer polynomial with nonzero constant term: roots mod a good prime,
// Newton-lifted until rational reconstruction is unambiguous, then checked exactly.
std::vector<Scalar> rational_roots(Polynomial f) {
  std::vector<Scalar> roots;
  if (f.coeff(0).is_zero()) {
    roots.push_back(Scalar::rational(0));
    std::size_t k = 0;
    while (f.coeff(k).is_zero()) ++k;
    f = Polynomial(f.field(), std::vector<Scalar>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
  }
  if (f.degree() <= 0) return roots;
  f = f / gcd(f, f.derivative());
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.as_rational().get_den().get_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& x : f.coeffs()) c.push_back(mpz_class(x.as_rational() * lcm_den));
  const mpz_class bound = std::max<mpz_class>(abs(c.front()), abs(c.back()));
  const std::vector<mpz_class> dc = [&] {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
    return d;
  }();

  std::uint64_t p = 1000003;
  std::vector<Scalar> mod_roots;
  for (;; p += 2) {
    if (!arith::is_prime(p) || mpz_divisible_ui_p(c.back().get_mpz_t(), p)) continue;
    const FieldTag fp = FieldTag::prime(p);
    std::vector<Scalar> reduced;
    for (const auto& x : c) reduced.emplace_back(fp, x);
    const Polynomial g(fp, reduced);
    if (gcd(g, g.derivative()).degree() != 0) continue;
    mod_roots = distinct_roots(g);
    break;
  }
  mpz_class modulus = p;
  const mpz_class target = 2 * bound * bound;
  std::vector<mpz_class> lifted;
  for (const auto& r : mod_roots) lifted.emplace_back(static_cast<unsigned long>(r.as_residue()));
  while (modulus <= target) {
    modulus *= modulus;
    for (auto& r : lifted) {
      mpz_class inv;
      const mpz_class d = eval_mod(dc, r, modulus);
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
      r = (r - eval_mod(c, r, modulus) * inv) % modulus;
      if (r < 0) r += modulus;
    }
  }
  for (const auto& r : lifted) {
    const auto q = rational_reconstruction(r, modulus, bound);
    if (!q) continue;
    const Scalar s(*q);
    if (f.eval(s).is_zero()) roots.push_back(s);
  }
  return roots;
}

// Splitting degree of a squarefree polynomial via distinct-degree factorization.
unsigned squarefree_splitting_degree(const Polynomial& f) {
  const FieldTag& field = f.field();
  unsigned result = 1;
  Polynomial rest = f.monic();
  const Polynomial x = Polynomial::x(field);
  Polynomial h = x % rest;
  for (unsigned d = 1; rest.degree() > 0; ++d) {
    if (2 * d > static_cast<unsigned>(rest.degree())) {
      result = std::lcm(result, static_cast<unsigned>(rest.degree()));
      break;
    }
    h = powmod(h, field.order(), rest);
    const Polynomial g = gcd(rest, h - x);
    if (g.degree() > 0) {
      result = std::lcm(result, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  return result;
}

}  // namespace

std::vector<Scalar> distinct_roots(const Polynomial& f) {
  require(!f.is_zero(), ErrorCode::ZeroInput, "zero polynomial has every element as a root");
  std::vector<Scalar> roots = f.field().is_finite() ? finite_field_roots(f) : rational_roots(f);
  std::sort(roots.begin(), roots.end());
  return roots;
}

unsigned splitting_degree(const Polynomial& f) {
  require(f.field().is_finite(), ErrorCode::NotFinite, "splitting degree needs a finite field");
  require(!f.is_zero(), ErrorCode::ZeroInput, "zero polynomial");
  if (f.degree() <= 1) return 1;
  const Polynomial d = f.derivative();
  if (d.is_zero()) {
    // f is a p-th power; take coefficientwise p-th roots.
    const std::uint64_t p = f.field().characteristic();
    const std::uint64_t root_exp = f.field().order() / p;
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) coeffs.push_back(f.coeffs()[i].pow(static_cast<long long>(root_exp)));
    return splitting_degree(Polynomial(f.field(), std::move(coeffs)));
  }
  const Polynomial h = gcd(f, d);
  const unsigned sq = squarefree_splitting_degree(f / h);
  return h.degree() > 0 ? std::lcm(sq, splitting_degree(h)) : sq;
}

}  // namespace hyperell
