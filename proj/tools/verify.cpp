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

#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "hyperell/error.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/picard.hpp"
#include "hyperell/sampling.hpp"
#include "hyperell/strata.hpp"

namespace hyperell::verify {

namespace {

// Collects the first few mismatches; an empty log means the criterion holds.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) log_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& passed) const {
    if (ok()) return passed + " (" + std::to_string(checks_) + " checks)";
    return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + log_.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::ostringstream log_;
};

struct Criterion {
  const char* name;
  double limit;
  std::function<std::string(Checker&, const Options&)> body;
};

Scalar first_nonsquare(const FieldTag& f) {
  for (std::uint64_t i = 1;; ++i) {
    const Scalar a = field_element(f, i);
    if (square_class(a) == SquareClass::NonSquare) return a;
  }
}

std::string discriminant_degree(Checker& check, const Options& o) {
  Sampler rng(o.seed + 1);
  for (unsigned g = 2; g <= 5; ++g) {
    for (int i = 0; i < 100; ++i) {
      const FieldTag f = i % 2 == 0 ? FieldTag::rational() : FieldTag::prime(1000003);
      const BinaryForm form = rng.smooth_form(g, f, 20);
      const Scalar lambda = rng.nonzero(f, 20);
      const Scalar d = discriminant(form);
      check.expect(!d.is_zero() && discriminant(form.scaled(lambda)) / d == lambda.pow(static_cast<long long>(4 * g + 2)),
                   "g=" + std::to_string(g) + " sample " + std::to_string(i));
    }
  }
  return "Delta(lambda f) = lambda^(4g+2) Delta(f) for g = 2..5";
}

std::string discriminant_invariance(Checker& check, const Options& o) {
  Sampler rng(o.seed + 2);
  for (unsigned g = 2; g <= 3; ++g) {
    for (int i = 0; i < 100; ++i) {
      const FieldTag f = i % 2 == 0 ? FieldTag::rational() : FieldTag::prime(1000003);
      const BinaryForm form = rng.form(g, f, 20);
      const Matrix2 a = rng.invertible_matrix(f, 20);
      check.expect(discriminant(gl2_act(a, form)) == discriminant(form), "g=" + std::to_string(g) + " sample " + std::to_string(i));
    }
  }
  return "Delta(A.f) = Delta(f) for g = 2, 3";
}

std::string stabilizer_orders(Checker& check, const Options& o) {
  for (unsigned g = 2; g <= 5; ++g) {
    const FieldTag f = default_probe_field(g);
    const ConfigAutGroup cyc = automorphism_group(PointConfiguration(f, form_roots(cyclic_probe(g, f))), o.jobs);
    const ConfigAutGroup dih = automorphism_group(PointConfiguration(f, form_roots(dihedral_probe(g, f))), o.jobs);
    const std::string at = " at g=" + std::to_string(g) + " over " + f.to_string();
    check.expect(cyc.order() == 2 * g + 1, "|Aut(inf + mu_(2g+1))| = " + std::to_string(cyc.order()) + at);
    check.expect(dih.order() == 4 * g + 4, "|Aut(mu_(2g+2))| = " + std::to_string(dih.order()) + at);
    check.expect(cyc.verify_axioms() && dih.verify_axioms(), "group axioms" + at);
  }
  return "orders 2g+1 and 4g+4 for g = 2..5";
}

std::string fiber_characters(Checker& check, const Options& o) {
  for (unsigned g = 2; g <= o.gmax; ++g) {
    const std::string at = " at g=" + std::to_string(g);
    const DescentResult d = descent_subgroup(g, std::nullopt, o.jobs);
    const FieldTag& f = d.field;
    const Scalar one(f, 1), zero(f, 0);
    const Scalar z = *root_of_unity(f, 2 * g + 1);
    const Scalar w = *root_of_unity(f, 2 * g + 2);
    const BinaryForm f1 = cyclic_probe(g, f);
    const BinaryForm f2 = dihedral_probe(g, f);
    check.expect(stabilizer_fiber_character(f1, MoebiusMap(z, zero, zero, one)).value == z.pow(static_cast<long long>(g + 1)),
                 "cyclic character" + at);
    check.expect(stabilizer_fiber_character(f2, MoebiusMap(w, zero, zero, one)).value == -one, "rotation character" + at);
    check.expect(stabilizer_fiber_character(f2, MoebiusMap(zero, one, one, zero)).value == (g % 2 == 0 ? one : -one),
                 "swap character" + at);
    check.expect(d.subgroup == std::vector<std::uint64_t>{0}, "descent subgroup of order " + std::to_string(d.subgroup.size()) + at);
  }
  return "characters zeta^(g+1), -1, (-1)^g; descent trivial for g = 2.." + std::to_string(o.gmax);
}

std::string order_table(Checker& check, const Options&) {
  for (int g = 2; g <= 20; ++g) {
    const GroupOrders t = group_orders(g);
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(g) + 2;
    const std::string at = " at g=" + std::to_string(g);
    check.expect(t.class_group_order == (g == 2 ? 5 : base), "class group" + at);
    check.expect(t.stack_picard_order == (g % 2 == 1 ? 2 * base : base), "stack Picard group" + at);
    check.expect(t.divisor_stack_order == base, "divisor stack" + at);
    check.expect(t.comparison_index == (g % 2 == 1 ? 2u : 1u), "comparison index" + at);
  }
  return "order table for g = 2..20";
}

std::string hodge(Checker& check, const Options&) {
  for (long long g = 2; g <= 40; ++g) {
    const CyclicClass h = tab_exponent(1, 0, g);
    const std::string at = " at g=" + std::to_string(g);
    check.expect(h.residue == static_cast<std::uint64_t>(g % 2 == 0 ? g / 2 : g), "Hodge exponent" + at);
    check.expect((hodge_index(g) == 2) == (g % 4 == 0), "Hodge index" + at);
  }
  return "Hodge exponent g/2 or g, index 2 iff 4 | g, for g = 2..40";
}

std::string lemma(Checker& check, const Options& o) {
  const LemmaCombinReport r = verify_lemma_combin(8, o.jobs);
  check.expect(r.failures(6) == 15, "failures at 6 points: " + std::to_string(r.failures(6)));
  check.expect(r.failures(7) == 0, "failures at 7 points: " + std::to_string(r.failures(7)));
  check.expect(r.failures(8) == 0, "failures at 8 points: " + std::to_string(r.failures(8)));
  check.expect(r.failures_only_in_excluded_class(), "failure outside the (2,2,2) class");
  return "15 failures at 6 points, all of type (2,2,2); none at 7, 8 (" + std::to_string(r.tested(6) + r.tested(7) + r.tested(8)) +
         " permutations)";
}

std::string strata(Checker& check, const Options&) {
  for (int g = 2; g <= 50; ++g) {
    const std::string at = " at g=" + std::to_string(g);
    check.expect(stratum_dimension(g, 2, 0) == g, "dim(p=2, i=0)" + at);
    for (const StratumEntry& e : admissible_strata(g)) {
      if (e.p == 2 && e.i == 0) continue;
      check.expect(e.dimension <= g - 1, "stratum (" + std::to_string(e.p) + "," + std::to_string(e.i) + ")" + at);
    }
    check.expect(max_aut_locus_dimension(g) == g, "maximum" + at);
  }
  return "dim = g only for (p, i) = (2, 0), others <= g-1, for g = 2..50";
}

std::string involution(Checker& check, const Options& o) {
  Sampler rng(o.seed + 9);
  for (int i = 0; i < 100; ++i) {
    const FieldTag f = i % 2 == 0 ? FieldTag::rational() : FieldTag::prime(1009);
    const auto p = rng.distinct_points(f, 4);
    const MoebiusMap a = solve_pairing_involution(p[0], p[1], p[2], p[3]);
    const std::string at = " sample " + std::to_string(i);
    check.expect((a * a).is_identity(), "A^2 != Id" + at);
    check.expect(a.apply(p[0]) == p[1] && a.apply(p[2]) == p[3], "pairing" + at);
    // Every ordered image triple of (P1, P2, P3) among the four points.
    unsigned candidates = 0;
    for (unsigned x = 0; x < 4; ++x)
      for (unsigned y = 0; y < 4; ++y)
        for (unsigned z = 0; z < 4; ++z) {
          if (x == y || y == z || x == z) continue;
          const MoebiusMap m = from_three_points({p[0], p[1], p[2]}, {p[x], p[y], p[z]});
          if (m.apply(p[0]) == p[1] && m.apply(p[2]) == p[3] && (m * m).is_identity()) {
            ++candidates;
            check.expect(m == a, "different candidate" + at);
          }
        }
    check.expect(candidates == 1, std::to_string(candidates) + " candidates" + at);
  }
  return "100 pairings solved, each the unique involutive candidate";
}

std::string twist_dichotomy(Checker& check, const Options& o) {
  Sampler rng(o.seed + 10);
  for (std::uint64_t p : {11ull, 101ull, 1009ull}) {
    const FieldTag f = FieldTag::prime(p);
    const std::string at = " over " + f.to_string();
    BinaryForm form = rng.smooth_form(2, f);
    for (int tries = 0; reduced_automorphism_group(HyperellipticCurve(form, Scalar(f, 1)), o.jobs).group.order() != 1; ++tries) {
      require(tries < 100, ErrorCode::InternalInconsistency, "no automorphism-free form found");
      form = rng.smooth_form(2, f);
    }
    const HyperellipticCurve square(form, Scalar(f, 1));
    const HyperellipticCurve twisted(form, first_nonsquare(f));
    check.expect(!isomorphic_over_field(square, twisted, o.jobs).has_value(), "twists isomorphic over the field" + at);
    check.expect(isomorphic_over_closure(square, twisted, o.jobs).has_value(), "twists not isomorphic over the closure" + at);
    const auto classes = twist_classes(form, o.jobs);
    check.expect(classes.size() == 2, std::to_string(classes.size()) + " twist classes" + at);
    for (const auto& cls : classes) {
      for (const auto& a : cls) check.expect(square_class(a) == square_class(cls.front()), "mixed square classes" + at);
    }
  }
  return "2 twist classes split by square class over F_11, F_101, F_1009";
}

std::string singular_point(Checker& check, const Options& o) {
  Sampler rng(o.seed + 11);
  const FieldTag f = FieldTag::prime(1051);
  const Scalar zero(f, 0), one(f, 1);
  std::vector<ProjectivePoint> mu5{ProjectivePoint::affine(zero)};
  std::vector<ProjectivePoint> mu6;
  const Scalar z5 = *root_of_unity(f, 5), z6 = *root_of_unity(f, 6);
  for (Scalar z = one; mu5.size() < 6; z *= z5) mu5.push_back(ProjectivePoint::affine(z));
  for (Scalar z = one; mu6.size() < 6; z *= z6) mu6.push_back(ProjectivePoint::affine(z));
  const PointConfiguration special(f, mu5);

  std::vector<std::pair<PointConfiguration, bool>> corpus;
  corpus.emplace_back(special, true);
  corpus.emplace_back(PointConfiguration(f, mu6), false);
  for (int i = 0; i < 5; ++i) corpus.emplace_back(special.mapped(rng.moebius(f)), true);
  for (int i = 0; i < 20; ++i) {
    PointConfiguration c = rng.configuration(f, 6);
    const bool expected = are_pgl2_equivalent(c, special, o.jobs).has_value();
    corpus.emplace_back(std::move(c), expected);
  }
  std::size_t singular = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const bool got = moduli_point_is_singular(corpus[i].first, 2, o.jobs);
    singular += got;
    check.expect(got == corpus[i].second, "corpus entry " + std::to_string(i));
  }
  return std::to_string(singular) + " of " + std::to_string(corpus.size()) + " singular, exactly the class of {0} + mu_5";
}

std::string elliptic(Checker& check, const Options& o) {
  Sampler rng(o.seed + 12);
  const FieldTag q = FieldTag::rational();
  int done = 0;
  while (done < 20) {
    const Scalar j0 = rng.scalar(q, 100000);
    if (j0.is_zero() || j0 == Scalar(q, 1728)) continue;
    check.expect(elliptic_taut_curve(j0).j == j0, "j0 = " + j0.to_string());
    ++done;
  }
  return "j(elliptic_taut_curve(j0)) = j0 for 20 rational j0";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {"discriminant degree", 5, discriminant_degree},
      {"discriminant invariance", 5, discriminant_invariance},
      {"stabilizer orders", 30, stabilizer_orders},
      {"fiber characters and descent", 60, fiber_characters},
      {"group order table", 1, order_table},
      {"Hodge class", 1, hodge},
      {"four-subset lemma", 120, lemma},
      {"automorphism strata", 1, strata},
      {"pairing involution", 10, involution},
      {"twist dichotomy", 30, twist_dichotomy},
      {"genus-2 singular point", 30, singular_point},
      {"elliptic j-invariant", 1, elliptic},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  require(id >= 1 && id <= criterion_count, ErrorCode::PreconditionViolated, "criterion id out of range");
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r{id, c.name, false, "", 0, c.limit};
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  std::string passed_text;
  try {
    passed_text = c.body(check, options);
  } catch (const Error& e) {
    check.expect(false, std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    check.expect(false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = check.summary(passed_text);
  r.passed = check.ok() && r.seconds < r.limit_seconds;
  if (check.ok() && !r.passed) r.detail += "; over the time limit";
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.3f s / %g s)", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " " + (r.id < 10 ? " " : "") + std::to_string(r.id) + " " + r.name +
         ": " + r.detail + " " + timing;
}

}  // namespace hyperell::verify
