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

#include <sstream>

#include "cli.hpp"
#include "hyperell/json_io.hpp"
#include "test_support.hpp"

using hyperell::cli::CommandResult;
using nlohmann::json;

namespace {

CommandResult call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return hyperell::cli::run(args, in);
}

json payload(const CommandResult& r) { return r.document.at("payload"); }

const char* sextic = R"({"genus": 2, "field": "Fp:31", "coeffs": ["0", "-1", "0", "0", "0", "0", "1"]})";

}  // namespace

TEST_CASE("flag-driven subcommands") {
  const auto strat = call({"stratum-dim", "--g", "2", "--p", "2", "--i", "0"});
  CHECK(strat.exit_code == 0);
  CHECK(payload(strat) == json{{"dim", 2}});

  const auto report = call({"picard-report", "--genus", "3"});
  REQUIRE(report.exit_code == 0);
  CHECK(payload(report)["class_group_order"] == 14);
  CHECK(payload(report)["stack_picard_order"] == 28);
  CHECK(payload(report)["divisor_stack_order"] == 14);
  CHECK(payload(report)["comparison_index"] == 2);
  CHECK(!report.document.contains("trace"));

  const auto lemma = call({"lemma-combin", "--nmax", "6"});
  CHECK(payload(lemma)["failures_by_n"]["6"] == 15);

  CHECK(payload(call({"tab-exponent", "--a", "1", "--b", "0", "--g", "4"})) ==
        json{{"modulus", 18}, {"residue", 2}, {"m", 3}, {"rank", 4}});
  CHECK(payload(call({"hodge", "--g", "4"}))["index"] == 2);
  CHECK(payload(call({"taut-exists", "--g", "3"}))["tautological_family"] == true);
  const auto d = call({"descent", "--genus", "2", "--trace"});
  CHECK(payload(d)["subgroup"] == json::array({0}));
  CHECK(payload(d)["field"] == "Fp:31");
  CHECK(d.document["trace"][0]["elements"].size() == 5);
}

TEST_CASE("JSON-driven subcommands") {
  const auto disc = call({"discriminant"}, R"({"genus": 2, "field": "Q", "coeffs": [0, -1, 0, 0, 0, 0, 1]})");
  REQUIRE(disc.exit_code == 0);
  CHECK(payload(disc)["smooth"] == true);
  CHECK(payload(disc)["discriminant"] == "3125");

  const auto aut = call({"aut-group", "--trace"}, sextic);
  CHECK(payload(aut)["order"] == 5);
  CHECK(aut.document["trace"].size() == 5);
  const auto aut7 = call({"aut-group"}, R"({"genus": 2, "field": "Fp:7", "coeffs": [0, -1, 0, 0, 0, 0, 1]})");
  CHECK(payload(aut7)["field"] == "Fp:7^4");

  const auto curve = call({"curve-build"}, R"({"field": "Fp:1009", "points": [[1,0],[0,1],[1,1],[2,1],[3,1],[4,1]], "twist": 3})");
  REQUIRE(curve.exit_code == 0);
  CHECK(payload(curve).contains("chart"));
  const auto w = call({"weierstrass"}, payload(curve).dump());
  CHECK(payload(w)["points"].size() == 6);
  CHECK(payload(w)["points"][5] == json::array({"1", "0"}));

  const auto count = call({"count-points"}, R"({"genus": 2, "field": "Fp:7", "coeffs": [0, -1, 0, 0, 0, 0, 1], "twist": 1})");
  CHECK(payload(count)["q"] == 7);

  const auto tw = call({"twist-class"}, R"({"genus": 2, "field": "Fp:11", "coeffs": [-1, 0, 0, 0, 0, 0, 1]})");
  CHECK(payload(tw)["classes"] == 1);

  const auto inv = call({"involution-solve"}, R"({"field": "Q", "points": [[0,1],[1,0],[1,1],["-1",1]]})");
  REQUIRE(inv.exit_code == 0);
  CHECK(payload(inv)["matrix"] == json::array({json::array({"0", "1"}), json::array({"-1", "0"})}));

  const std::string pair = std::string(R"({"field": "Fp:31", "c1": {"points": [[0,1],[1,1],[2,1],[3,1],[4,1],[5,1]]},)") +
                           R"( "c2": {"points": [[1,1],[2,1],[3,1],[4,1],[5,1],[6,1]]}})";
  const auto eq = call({"equiv"}, pair);
  REQUIRE(eq.exit_code == 0);
  CHECK(payload(eq)["equivalent"] == true);

  const std::string curves = std::string(R"({"field": "Fp:31", "c1": {"genus": 2, "coeffs": [0,-1,0,0,0,0,1]},)") +
                             R"( "c2": {"genus": 2, "coeffs": [0,-1,0,0,0,0,1], "twist": 3}})";
  const auto iso = call({"iso"}, curves);
  REQUIRE(iso.exit_code == 0);
  CHECK(payload(iso)["over_closure"] == true);
}

TEST_CASE("global flags") {
  std::istringstream empty;
  const auto with_field = call({"--field", "Fp:31", "discriminant"}, R"({"genus": 2, "coeffs": [0, -1, 0, 0, 0, 0, 1]})");
  CHECK(with_field.exit_code == 0);
  CHECK(payload(with_field)["field"] == "Fp:31");
  const auto jobs1 = call({"aut-group", "--jobs", "1", "--trace"}, sextic);
  const auto jobs3 = call({"aut-group", "--jobs", "3", "--trace"}, sextic);
  CHECK(hyperell::cli::render(jobs1) == hyperell::cli::render(jobs3));
  CHECK(call({"--help"}).exit_code == 0);
  CHECK(!call({"--help"}).text.empty());
}

TEST_CASE("exit codes") {
  CHECK(call({}).exit_code == 2);
  CHECK(call({"frobnicate"}).exit_code == 2);
  CHECK(call({"stratum-dim", "--g", "2"}).exit_code == 2);
  CHECK(call({"discriminant", "--input", "/nonexistent/file.json"}).exit_code == 2);
  CHECK(call({"discriminant"}, "{not json").exit_code == 3);
  CHECK(call({"discriminant"}, R"({"genus": 2})").exit_code == 3);
  const auto bad = call({"stratum-dim", "--g", "2", "--p", "4", "--i", "0"});
  CHECK(bad.exit_code == 4);
  CHECK(bad.document["status"] == "error");
  CHECK(!bad.document["payload"]["message"].get<std::string>().empty());
  CHECK(call({"descent", "--genus", "2", "--field", "Fp:3"}).exit_code == 4);
  CHECK(call({"discriminant"}, R"({"genus": 2, "field": "Q", "coeffs": [1, 2]})").exit_code == 4);
}

TEST_CASE("output is deterministic and re-parses") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"picard-report", "--genus", "4", "--trace"},
                                                                {"lemma-combin", "--nmax", "7", "--trace"}}) {
    const auto a = call(args), b = call(args);
    CHECK(hyperell::cli::render(a) == hyperell::cli::render(b));
    CHECK(json::parse(hyperell::cli::render(a)) == a.document);
  }
  const auto curve = call({"curve-build"}, R"({"field": "Q", "points": [[0,1],[1,1],[2,1],[3,1],[4,1],["1/2",1]]})");
  const auto back = hyperell::json_io::curve_from_json(payload(curve));
  CHECK(hyperell::json_io::to_json(back) == payload(curve));
}
