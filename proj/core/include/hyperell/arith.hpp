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

#ifndef HYPERELL_ARITH_HPP
#define HYPERELL_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

// Word-size number theory used by the prime-field arithmetic.
namespace hyperell::arith {

__extension__ typedef unsigned __int128 uint128;
__extension__ typedef __int128 int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; a must be a unit.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Smallest prime p > 2 with p = 1 (mod modulus).
std::uint64_t smallest_prime_one_mod(std::uint64_t modulus);

/// Prime factorisation by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/// Multiplicative order of a modulo the prime p (a != 0 mod p).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/// p^e, or 0 when the value does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

}  // namespace hyperell::arith

#endif  // HYPERELL_ARITH_HPP
