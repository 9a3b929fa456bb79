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

#include <algorithm>
#include <numeric>

#include "hyperell/arith.hpp"
#include "hyperell/binary_form.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/sampling.hpp"
#include "test_support.hpp"

using namespace hyperell;
using testing::fp;

namespace {

Polynomial poly(const FieldTag& f, std::initializer_list<long long> ascending) {
  std::vector<Scalar> c;
  for (long long v : ascending) c.push_back(Scalar(f, v));
  return Polynomial(f, std::move(c));
}

BinaryForm form(unsigned g, const FieldTag& f, std::initializer_list<long long> ascending) {
  std::vector<Scalar> c;
  for (long long v : ascending) c.push_back(Scalar(f, v));
  return BinaryForm(g, std::move(c));
}

// Product over pairs of (x_i y_j - x_j y_i)^2 for f = prod (y_i X - x_i Y).
Scalar projective_root_oracle(const std::vector<ProjectivePoint>& pts) {
  Scalar acc = pts.front().x().one();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Scalar d = pts[i].x() * pts[j].y() - pts[j].x() * pts[i].y();
      acc *= d * d;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("Sylvester resultant examples") {
  const FieldTag q = FieldTag::rational();
  CHECK(sylvester_resultant(poly(q, {-1, 0, 1}), poly(q, {0, 2})) == Scalar::rational(-4));
  for (long long a = -3; a <= 3; ++a) {
    for (long long b = -3; b <= 3; ++b) {
      CHECK(sylvester_resultant(poly(q, {-a, 1}), poly(q, {-b, 1})) == Scalar::rational(b - a));
    }
  }
  Sampler rng(1);
  for (int i = 0; i < 10; ++i) {
    std::vector<Scalar> c;
    for (int k = 0; k < 5; ++k) c.push_back(rng.scalar(q));
    c.back() = rng.nonzero(q);
    const Polynomial f(q, c);
    CHECK(sylvester_resultant(f, f).is_zero());
  }
  CHECK_ERROR_CODE(sylvester_resultant(Polynomial(q), poly(q, {1, 1})), ErrorCode::DegenerateInput);
}

TEST_CASE("resultant matches the root-product formula") {
  Sampler rng(2);
  const FieldTag f = fp(1009);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(6));
    const int r = 1 + static_cast<int>(rng.below(6));
    std::vector<Scalar> fc;
    for (int k = 0; k <= m; ++k) fc.push_back(rng.scalar(f));
    fc.back() = rng.nonzero(f);
    const Polynomial pf(f, fc);
    // h = lead * prod (x - beta_i), built from planted roots.
    const Scalar lead = rng.nonzero(f);
    Polynomial h = Polynomial::constant(lead);
    Scalar oracle = lead.pow(m);
    for (int k = 0; k < r; ++k) {
      const Scalar beta = rng.scalar(f);
      h = h * (Polynomial::x(f) - Polynomial::constant(beta));
      oracle *= pf.eval(beta);
    }
    CHECK(sylvester_resultant(pf, h) == oracle);
  }
}

TEST_CASE("discriminant examples") {
  const FieldTag q = FieldTag::rational();
  CHECK(polynomial_discriminant(poly(q, {-1, 0, 1})) == Scalar::rational(4));
  // X^2 (X - Y) Y^3 has a repeated root.
  CHECK(discriminant(form(2, q, {0, 0, 0, -1, 1, 0, 0})).is_zero());
  Sampler rng(3);
  for (int i = 0; i < 10; ++i) {
    const BinaryForm f = rng.smooth_form(2, q);
    CHECK(discriminant(f.scaled(Scalar::rational(2))) / discriminant(f) == Scalar::rational(1024));
  }
}

TEST_CASE("discriminant equals the root-difference product") {
  Sampler rng(4);
  for (const FieldTag& f : {fp(1009), FieldTag::rational()}) {
    for (unsigned g : {2u, 3u}) {
      for (int trial = 0; trial < 15; ++trial) {
        const auto pts = rng.distinct_points(f, 2 * g + 2, 12);
        const BinaryForm bf = form_from_roots(g, pts);
        CHECK(discriminant(bf) == projective_root_oracle(pts));
        // Scaling by c multiplies by c^(2n-2).
        const Scalar c = rng.nonzero(f, 5);
        CHECK(discriminant(bf.scaled(c)) == c.pow(static_cast<long long>(4 * g + 2)) * projective_root_oracle(pts));
      }
    }
  }
}

TEST_CASE("discriminant requires characteristic prime to the degree") {
  CHECK_ERROR_CODE(discriminant(form(2, fp(3), {1, 0, 0, 0, 0, 0, 1})), ErrorCode::BadCharacteristic);
  CHECK_ERROR_CODE(is_smooth(form(4, fp(5), {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1})), ErrorCode::BadCharacteristic);
}

TEST_CASE("smoothness examples and gcd agreement") {
  const FieldTag q = FieldTag::rational();
  CHECK(is_smooth(form(2, q, {-1, 0, 0, 0, 0, 0, 1})));
  CHECK(is_smooth(form(2, fp(7), {-1, 0, 0, 0, 0, 1, 0})));
  CHECK_FALSE(is_smooth(form(2, q, {0, 0, 0, 0, 0, 0, 1})));
  Sampler rng(5);
  for (const FieldTag& f : {fp(11), fp(13)}) {
    for (int i = 0; i < 100; ++i) {
      const BinaryForm bf = rng.form(2, f);
      CHECK(is_smooth(bf) == has_distinct_roots(bf));
    }
  }
}

TEST_CASE("weighted action examples") {
  for (unsigned g = 2; g <= 5; ++g) {
    CAPTURE(g);
    const FieldTag f = fp(arith::smallest_prime_one_mod(std::lcm<std::uint64_t>(2 * g + 1, 2 * g + 2)));
    const Scalar one(f, 1), zero(f, 0);
    std::vector<Scalar> c1(2 * g + 3, zero), c2(2 * g + 3, zero);
    c1[2 * g + 1] = one;
    c1[0] = -one;
    c2[2 * g + 2] = one;
    c2[0] = -one;
    const BinaryForm f1(g, c1), f2(g, c2);
    CHECK(gl2_act(Matrix2::identity(f), f1) == f1);

    const Scalar z = *root_of_unity(f, 2 * g + 1);
    CHECK(gl2_act(Matrix2{z, zero, zero, one}, f1) == f1.scaled(z.pow(static_cast<long long>(g + 1))));

    const Scalar sign = g % 2 == 0 ? one : -one;
    CHECK(gl2_act(Matrix2{zero, one, one, zero}, f2) == f2.scaled(sign));

    const Scalar w = *root_of_unity(f, 2 * g + 2);
    CHECK(gl2_act(Matrix2{w, zero, zero, one}, f2) == f2.scaled(-one));
  }
  const FieldTag f7 = fp(7);
  CHECK_ERROR_CODE(gl2_act(Matrix2{Scalar(f7, 1), Scalar(f7, 2), Scalar(f7, 2), Scalar(f7, 4)},
                           form(2, f7, {1, 0, 0, 0, 0, 0, 1})),
                   ErrorCode::SingularMatrix);
}

TEST_CASE("action axiom, invariance and homogeneity") {
  Sampler rng(6);
  for (const FieldTag& f : {FieldTag::rational(), fp(1009)}) {
    for (unsigned g = 2; g <= 3; ++g) {
      for (int i = 0; i < 20; ++i) {
        const Matrix2 a = rng.invertible_matrix(f, 4);
        const Matrix2 b = rng.invertible_matrix(f, 4);
        const BinaryForm bf = rng.smooth_form(g, f, 6);
        CHECK(gl2_act(a * b, bf) == gl2_act(a, gl2_act(b, bf)));
        CHECK(discriminant(gl2_act(a, bf)) == discriminant(bf));
        CHECK(is_smooth(gl2_act(a, bf)));
      }
    }
  }
  for (unsigned g = 2; g <= 8; ++g) {
    const FieldTag f = fp(1000003);
    for (int i = 0; i < 3; ++i) {
      const BinaryForm bf = rng.form(g, f);
      const Scalar lambda = rng.nonzero(f);
      CHECK(discriminant(bf.scaled(lambda)) == lambda.pow(static_cast<long long>(4 * g + 2)) * discriminant(bf));
    }
  }
}

TEST_CASE("roots of forms") {
  const FieldTag f11 = fp(11);
  // X^5 Y - Y^6 over F_11: infinity and the fifth roots of unity.
  const auto roots = form_roots(form(2, f11, {-1, 0, 0, 0, 0, 1, 0}));
  REQUIRE(roots.size() == 6);
  CHECK(roots.back().is_infinity());
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].x().pow(5).is_one());
  // x^6 - x over F_7 does not split: 5 does not divide 6.
  CHECK_ERROR_CODE(form_roots(form(2, fp(7), {0, -1, 0, 0, 0, 0, 1})), ErrorCode::NonSplitForm);
  CHECK(form_splitting_degree(form(2, fp(7), {0, -1, 0, 0, 0, 0, 1})) == 4);
}

TEST_CASE("form from roots round-trips") {
  Sampler rng(7);
  const FieldTag f = fp(101);
  for (int i = 0; i < 20; ++i) {
    auto pts = rng.distinct_points(f, 8);
    std::sort(pts.begin(), pts.end());
    CHECK(form_roots(form_from_roots(3, pts)) == pts);
  }
}

TEST_CASE("form validation") {
  const FieldTag q = FieldTag::rational();
  CHECK_ERROR_CODE(form(2, q, {0, 0, 0, 0, 0, 0, 0}), ErrorCode::ZeroInput);
  CHECK_ERROR_CODE(form(2, q, {1, 0, 1}), ErrorCode::WrongDegree);
  CHECK_ERROR_CODE(form(1, q, {1, 0, 0, 1, 0}), ErrorCode::WrongDegree);
}
