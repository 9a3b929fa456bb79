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

#include <numeric>
#include <set>

#include "hyperell/arith.hpp"
#include "hyperell/sampling.hpp"
#include "test_support.hpp"

using namespace hyperell;
using testing::fp;

TEST_CASE("square class examples") {
  CHECK(square_class(Scalar::rational(1)) == SquareClass::Square);
  CHECK(square_class(Scalar(fp(7), 4)) == SquareClass::Square);
  CHECK(square_class(Scalar(fp(7), 3)) == SquareClass::NonSquare);
  CHECK(square_class(Scalar::rational(9, 4)) == SquareClass::Square);
  CHECK(square_class(Scalar::rational(-4)) == SquareClass::NonSquare);
  CHECK(square_class(Scalar::rational(8, 9)) == SquareClass::NonSquare);
  CHECK_ERROR_CODE(square_class(Scalar(fp(7), 0)), ErrorCode::ZeroInput);
  CHECK_ERROR_CODE(square_class(Scalar::rational(0)), ErrorCode::ZeroInput);
}

TEST_CASE("exactly half of F_p^* are squares") {
  for (std::uint64_t p = 3; p <= 101; ++p) {
    if (!arith::is_prime(p)) continue;
    const FieldTag f = fp(p);
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    std::uint64_t counted = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
      const bool sq = square_class(Scalar(f, static_cast<long long>(x))) == SquareClass::Square;
      CHECK(sq == squares.contains(x));
      counted += sq;
    }
    CHECK(counted == (p - 1) / 2);
  }
}

TEST_CASE("square class is multiplicative") {
  for (std::uint64_t p : {11, 13, 31}) {
    const FieldTag f = fp(p);
    for (long long a = 1; a < static_cast<long long>(p); ++a) {
      for (long long b = 1; b < static_cast<long long>(p); ++b) {
        const Scalar x(f, a), y(f, b);
        CHECK(square_class(x * y) == (square_class(x) * square_class(y)));
      }
    }
  }
  Sampler rng(7);
  for (int i = 0; i < 200; ++i) {
    const Scalar x = rng.nonzero(FieldTag::rational());
    const Scalar y = rng.nonzero(FieldTag::rational());
    // Q has infinitely many square classes; only square times class is determined.
    CHECK(square_class(x * x * y) == square_class(y));
    CHECK(square_class(x * x) == SquareClass::Square);
  }
  const FieldTag ext = FieldTag::extension(5, 3);
  for (int i = 0; i < 200; ++i) {
    const Scalar x = rng.nonzero(ext);
    const Scalar y = rng.nonzero(ext);
    CHECK(square_class(x * y) == (square_class(x) * square_class(y)));
  }
}

TEST_CASE("field axioms under random sampling") {
  Sampler rng(11);
  for (const FieldTag& f : {FieldTag::rational(), fp(101), fp(1000003), FieldTag::extension(7, 3), FieldTag::extension(3, 4)}) {
    CAPTURE(f.to_string());
    for (int i = 0; i < 100; ++i) {
      const Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == a.zero());
      CHECK(a * a.one() == a);
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(a.pow(-3) * a.pow(3) == a.one());
      }
    }
  }
}

TEST_CASE("division by zero is reported") {
  CHECK_ERROR_CODE(Scalar::rational(1) / Scalar::rational(0), ErrorCode::DivisionByZero);
  CHECK_ERROR_CODE(Scalar(fp(7), 3) / Scalar(fp(7), 7), ErrorCode::DivisionByZero);
  CHECK_ERROR_CODE(Scalar(fp(7), 0).inverse(), ErrorCode::DivisionByZero);
  CHECK_ERROR_CODE(Scalar::rational(1, 0), ErrorCode::DivisionByZero);
  CHECK_ERROR_CODE(Scalar::parse(fp(7), "1/7"), ErrorCode::DivisionByZero);
}

TEST_CASE("mixed fields are rejected") {
  CHECK_ERROR_CODE(Scalar(fp(7), 1) + Scalar(fp(11), 1), ErrorCode::FieldMismatch);
  CHECK_ERROR_CODE(Scalar(fp(7), 1) * Scalar::rational(1), ErrorCode::FieldMismatch);
}

TEST_CASE("field tags parse and validate") {
  CHECK(FieldTag::parse("Q") == FieldTag::rational());
  CHECK(FieldTag::parse("Fp:7") == fp(7));
  CHECK(FieldTag::parse("Fp:7^2").order() == 49);
  CHECK(FieldTag::parse("Fp:7^1") == fp(7));
  CHECK(fp(7).to_string() == "Fp:7");
  CHECK(FieldTag::extension(3, 2).to_string() == "Fp:3^2");
  CHECK_ERROR_CODE(FieldTag::parse("Fp:9"), ErrorCode::InvalidField);
  CHECK_ERROR_CODE(FieldTag::parse("Fp:2"), ErrorCode::BadCharacteristic);
  CHECK_ERROR_CODE(FieldTag::parse("R"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(FieldTag::parse("Fp:7x"), ErrorCode::ParseError);
}

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse(FieldTag::rational(), "3/4").to_string() == "3/4");
  CHECK(Scalar::parse(FieldTag::rational(), "6/8").to_string() == "3/4");
  CHECK(Scalar::parse(FieldTag::rational(), "-2").to_string() == "-2");
  CHECK(Scalar::parse(fp(7), "-2").to_string() == "5");
  CHECK(Scalar::parse(fp(7), "1/2").to_string() == "4");
  const FieldTag f49 = FieldTag::extension(7, 2);
  CHECK(Scalar::parse(f49, "[3,5]").to_string() == "[3,5]");
  CHECK(Scalar::parse(f49, "3").to_string() == "[3,0]");
  CHECK_ERROR_CODE(Scalar::parse(FieldTag::rational(), "abc"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(Scalar::parse(FieldTag::rational(), ""), ErrorCode::ParseError);
  CHECK_ERROR_CODE(Scalar::parse(f49, "[1,2,3]"), ErrorCode::ParseError);
}

TEST_CASE("extension fields use a least irreducible modulus") {
  // x^2 + 1 is irreducible mod 7 since -1 is a nonsquare there.
  CHECK(FieldTag::extension(7, 2).modulus() == std::vector<std::uint64_t>{1, 0, 1});
  const FieldTag f = FieldTag::extension(5, 3);
  Sampler rng(3);
  for (int i = 0; i < 50; ++i) {
    const Scalar a = rng.nonzero(f), b = rng.scalar(f);
    CHECK(a.pow(static_cast<long long>(f.order() - 1)).is_one());
    // Frobenius is additive.
    CHECK((a + b).pow(5) == a.pow(5) + b.pow(5));
  }
}

TEST_CASE("roots of unity and primitive elements") {
  for (const FieldTag& f : {fp(31), fp(113), FieldTag::extension(7, 2)}) {
    const Scalar g = primitive_element(f);
    const std::uint64_t n = f.order() - 1;
    for (auto [r, e] : arith::factor(n)) {
      (void)e;
      CHECK_FALSE(g.pow(static_cast<long long>(n / r)).is_one());
    }
    for (std::uint64_t d = 1; d <= n; ++d) {
      const auto z = root_of_unity(f, d);
      CHECK(z.has_value() == (n % d == 0));
      if (!z) continue;
      CHECK(z->pow(static_cast<long long>(d)).is_one());
      for (auto [r, e] : arith::factor(d)) {
        (void)e;
        CHECK_FALSE(z->pow(static_cast<long long>(d / r)).is_one());
      }
    }
  }
  CHECK(*root_of_unity(FieldTag::rational(), 2) == Scalar::rational(-1));
  CHECK_FALSE(root_of_unity(FieldTag::rational(), 3).has_value());
}

TEST_CASE("characteristic guard predicate") {
  CHECK(char_divides(fp(3), 6));
  CHECK_FALSE(char_divides(fp(7), 6));
  CHECK(char_divides(fp(5), 10));
  CHECK_FALSE(char_divides(FieldTag::rational(), 6));
}

TEST_CASE("arithmetic helpers") {
  CHECK(arith::smallest_prime_one_mod(30) == 31);
  CHECK(arith::smallest_prime_one_mod(std::lcm(7, 8)) == 113);
  CHECK(arith::smallest_prime_one_mod(std::lcm(41, 42)) == 1723);
  CHECK(arith::multiplicative_order(3, 11) == 5);
  CHECK(arith::is_prime(1000003));
  CHECK_FALSE(arith::is_prime(1000001));
  CHECK(arith::checked_pow(3, 4) == 81);
}
