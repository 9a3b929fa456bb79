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

#include "hyperell/arith.hpp"

#include <array>

#include "hyperell/error.hpp"

namespace hyperell {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ImpossibleCase: return "ImpossibleCase";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::NotInStabilizer: return "NotInStabilizer";
    case ErrorCode::NonSplitForm: return "NonSplitForm";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::ExcludedJ: return "ExcludedJ";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace hyperell

namespace hyperell::arith {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  int128 t = 0, new_t = 1;
  int128 r = m, new_r = a % m;
  while (new_r != 0) {
    int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  require(r == 1, ErrorCode::DivisionByZero, "element is not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t smallest_prime_one_mod(std::uint64_t modulus) {
  require(modulus > 0, ErrorCode::PreconditionViolated, "modulus must be positive");
  for (std::uint64_t p = modulus + 1;; p += modulus) {
    if (p > 2 && is_prime(p)) return p;
  }
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t order = p - 1;
  for (auto [q, e] : factor(p - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / q, p) == 1) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (result > (std::uint64_t{1} << 62) / p) return 0;
    result *= p;
  }
  return result;
}

}  // namespace hyperell::arith
