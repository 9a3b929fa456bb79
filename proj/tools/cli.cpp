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

#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hyperell/error.hpp"
#include "hyperell/json_io.hpp"
#include "verify.hpp"

namespace hyperell::cli {

namespace {

using nlohmann::json;
namespace jio = hyperell::json_io;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string input;
  bool trace = false;
  unsigned jobs = 1;
  std::string field;

  unsigned extension_degree = 0;
  unsigned nmax = 6;
  int g = 2, p = 2, i = 0;
  long long a = 0, b = 0;
  unsigned gmax = 20;
  bool table = false;
};

class Context {
 public:
  Context(const Flags& flags, std::istream& in) : flags_(flags), in_(in) {}

  const Flags& flags() const { return flags_; }

  std::optional<FieldTag> field() const {
    if (flags_.field.empty()) return std::nullopt;
    return FieldTag::parse(flags_.field);
  }

  // The input document; --field fills in a missing "field" member.
  const json& input() {
    if (input_) return *input_;
    std::string text;
    if (!flags_.input.empty()) {
      std::ifstream file(flags_.input);
      if (!file) throw UsageError("cannot open input file '" + flags_.input + "'");
      text.assign(std::istreambuf_iterator<char>(file), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    }
    json doc = jio::parse(text);
    if (doc.is_object() && !doc.contains("field") && !flags_.field.empty()) doc["field"] = flags_.field;
    input_ = std::move(doc);
    return *input_;
  }

  json sub(const char* key) {
    json part = jio::member(input(), key);
    if (part.is_object() && !part.contains("field") && input().contains("field")) part["field"] = input()["field"];
    return part;
  }

 private:
  const Flags& flags_;
  std::istream& in_;
  std::optional<json> input_;
};

struct Output {
  json payload;
  json trace;  // null when there is nothing to show
};

BinaryForm embed_form(const BinaryForm& f, const FieldTag& field) {
  std::vector<Scalar> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(Scalar::embed(field, c));
  return BinaryForm(f.genus(), std::move(coeffs));
}

FieldTag extension_of(const FieldTag& base, unsigned degree) {
  if (degree <= 1) return base;
  require(base.kind() == FieldKind::Prime, ErrorCode::UnsupportedField, "extensions are built over prime fields only");
  return FieldTag::extension(base.characteristic(), degree);
}

json cycle_type_counts(const ConfigAutGroup& g) {
  std::map<std::string, std::size_t> counts;
  for (const auto& p : g.perms) {
    std::string key;
    for (unsigned c : p.cycle_type()) key += (key.empty() ? "" : ",") + std::to_string(c);
    ++counts[key];
  }
  return counts;
}

Output discriminant_cmd(Context& ctx) {
  const BinaryForm f = jio::form_from_json(ctx.input());
  const Scalar d = discriminant(f);
  return {{{"genus", f.genus()}, {"field", jio::to_json(f.field())}, {"discriminant", jio::to_json(d)}, {"smooth", !d.is_zero()}},
          nullptr};
}

Output aut_group_cmd(Context& ctx) {
  const json& in = ctx.input();
  std::optional<PointConfiguration> config;
  if (in.is_object() && in.contains("points")) {
    const PointConfiguration c = jio::configuration_from_json(in);
    const FieldTag k = extension_of(c.field(), ctx.flags().extension_degree);
    std::vector<ProjectivePoint> points;
    for (const auto& p : c.points()) points.emplace_back(Scalar::embed(k, p.x()), Scalar::embed(k, p.y()));
    config.emplace(k, std::move(points));
  } else {
    const BinaryForm f = jio::form_from_json(in);
    const unsigned degree = ctx.flags().extension_degree != 0 ? ctx.flags().extension_degree : form_splitting_degree(f);
    const FieldTag k = extension_of(f.field(), degree);
    config.emplace(k, form_roots(embed_form(f, k)));
  }
  const ConfigAutGroup group = automorphism_group(*config, ctx.flags().jobs);
  json payload = {{"order", group.order()},
                  {"field", jio::to_json(config->field())},
                  {"points", jio::to_json(*config)["points"]},
                  {"cycle_types", cycle_type_counts(group)}};
  return {payload, jio::to_json(group)["elements"]};
}

Output equiv_cmd(Context& ctx) {
  const PointConfiguration c1 = jio::configuration_from_json(ctx.sub("c1"));
  const PointConfiguration c2 = jio::configuration_from_json(ctx.sub("c2"));
  const auto maps = all_equivalences(c1, c2, ctx.flags().jobs);
  json all = json::array();
  for (const auto& m : maps) all.push_back(jio::to_json(m));
  return {{{"equivalent", !maps.empty()}, {"count", maps.size()}, {"map", maps.empty() ? json(nullptr) : all[0]}}, all};
}

Output involution_cmd(Context& ctx) {
  const json& in = ctx.input();
  const FieldTag f = jio::field_from_json(jio::member(in, "field"));
  const json& pts = jio::member(in, "points");
  require(pts.is_array() && pts.size() == 4, ErrorCode::ParseError, "involution-solve needs exactly 4 points");
  std::vector<ProjectivePoint> p;
  for (const auto& q : pts) p.push_back(jio::point_from_json(f, q));
  const MoebiusMap a = solve_pairing_involution(p[0], p[1], p[2], p[3]);
  json images = json::array();
  for (const auto& q : p) images.push_back(jio::to_json(a.apply(q)));
  return {{{"matrix", jio::to_json(a)}}, {{"images", images}, {"square_is_identity", (a * a).is_identity()}}};
}

Permutation representative(unsigned n, const std::vector<unsigned>& cycle_type) {
  std::vector<std::vector<unsigned>> cycles;
  unsigned next = 1;
  for (unsigned len : cycle_type) {
    std::vector<unsigned> cycle;
    for (unsigned k = 0; k < len; ++k) cycle.push_back(next++);
    if (len > 1) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(n, cycles);
}

Output lemma_cmd(Context& ctx) {
  const LemmaCombinReport r = verify_lemma_combin(ctx.flags().nmax, ctx.flags().jobs);
  json witnesses = json::array();
  for (const auto& row : r.rows) {
    const Permutation rho = representative(row.n, row.cycle_type);
    const auto w = find_lemma_pairs(rho);
    witnesses.push_back({{"permutation", jio::to_json(rho)}, {"witness", w ? jio::to_json(*w) : json(nullptr)}});
  }
  return {jio::to_json(r), witnesses};
}

Output stratum_cmd(Context& ctx) {
  const Flags& f = ctx.flags();
  return {{{"dim", stratum_dimension(f.g, f.p, f.i)}}, nullptr};
}

Output picard_cmd(Context& ctx) {
  const PicardReport r = picard_report(static_cast<unsigned>(ctx.flags().g), ctx.field(), ctx.flags().jobs);
  json payload = jio::to_json(r, false);
  return {payload, jio::to_json(r.descent, true)};
}

Output descent_cmd(Context& ctx) {
  const DescentResult d = descent_subgroup(static_cast<unsigned>(ctx.flags().g), ctx.field(), ctx.flags().jobs);
  return {jio::to_json(d, false), jio::to_json(d, true)["probes"]};
}

Output tab_cmd(Context& ctx) {
  const Flags& f = ctx.flags();
  json payload = jio::to_json(tab_exponent(f.a, f.b, f.g));
  payload["m"] = m_of(f.a, f.b, f.g);
  payload["rank"] = pushforward_rank(f.a, f.b, f.g);
  return {payload, nullptr};
}

Output hodge_cmd(Context& ctx) {
  const long long g = ctx.flags().g;
  return {{{"genus", g}, {"exponent", jio::to_json(tab_exponent(1, 0, g))}, {"index", hodge_index(g)}}, nullptr};
}

Output curve_build_cmd(Context& ctx) {
  const json& in = ctx.input();
  const PointConfiguration c = jio::configuration_from_json(in);
  const Scalar twist = in.contains("twist") ? jio::scalar_from_json(c.field(), in["twist"]) : Scalar(c.field(), 1);
  return {jio::to_json(curve_from_config(c, twist)), nullptr};
}

Output weierstrass_cmd(Context& ctx) {
  const HyperellipticCurve c = jio::curve_from_json(ctx.input());
  return {jio::to_json(weierstrass_points(c)), nullptr};
}

Output iso_cmd(Context& ctx) {
  const HyperellipticCurve c1 = jio::curve_from_json(ctx.sub("c1"));
  const HyperellipticCurve c2 = jio::curve_from_json(ctx.sub("c2"));
  const auto over_field = isomorphic_over_field(c1, c2, ctx.flags().jobs);
  const auto over_closure = isomorphic_over_closure(c1, c2, ctx.flags().jobs);
  json payload = {{"over_field", over_field.has_value()},
                  {"over_closure", over_closure.has_value()},
                  {"witness", over_field ? jio::to_json(*over_field) : json(nullptr)}};
  return {payload, over_closure ? json{{"closure_map", jio::to_json(*over_closure)}} : json(nullptr)};
}

Output twist_class_cmd(Context& ctx) {
  const BinaryForm f = jio::form_from_json(ctx.input());
  const auto classes = twist_classes(f, ctx.flags().jobs);
  json reps = json::array(), sizes = json::array(), square = json::array(), members = json::array();
  for (const auto& cls : classes) {
    reps.push_back(jio::to_json(cls.front()));
    sizes.push_back(cls.size());
    square.push_back(to_string(square_class(cls.front())));
    json m = json::array();
    for (const auto& a : cls) m.push_back(jio::to_json(a));
    members.push_back(m);
  }
  return {{{"classes", classes.size()}, {"representatives", reps}, {"sizes", sizes}, {"square_classes", square}}, members};
}

Output count_cmd(Context& ctx) {
  const HyperellipticCurve c = jio::curve_from_json(ctx.input());
  return {{{"points", count_points(c)}, {"q", c.field().order()}, {"field", jio::to_json(c.field())}}, nullptr};
}

Output taut_cmd(Context& ctx) {
  const int g = ctx.flags().g;
  const G12Verdict v = global_g12_exists_for_even_genus(g);
  return {{{"genus", g}, {"tautological_family", tautological_family_exists(g)}, {"global_g12", v.guaranteed}, {"reason", v.reason}},
          nullptr};
}

json criterion_json(const verify::CriterionResult& r) {
  return {{"id", r.id},   {"name", r.name},       {"passed", r.passed},
          {"detail", r.detail}, {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return Parse;
    case ErrorCode::InternalInconsistency:
      return Internal;
    default:
      return Precondition;
  }
}

CommandResult error_result(int exit_code, const std::string& code, const std::string& message) {
  return {exit_code, {{"status", "error"}, {"payload", {{"code", code}, {"message", message}}}}, ""};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Flags flags;
  CLI::App app{"Invariants of hyperelliptic curves and their moduli", "hyperell"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", flags.input, "Read the JSON input from FILE instead of stdin");
  app.add_flag("--trace", flags.trace, "Attach the supporting computation to the output");
  app.add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--field", flags.field, "Field such as Q, Fp:31 or Fp:7^2");

  using Handler = Output (*)(Context&);
  std::map<std::string, Handler> handlers;
  auto add = [&](const char* name, const char* help, Handler h) {
    handlers[name] = h;
    return app.add_subcommand(name, help);
  };
  add("discriminant", "Discriminant of a binary form", discriminant_cmd);
  add("aut-group", "Stabilizer in PGL2 of a configuration or of the roots of a form", aut_group_cmd)
      ->add_option("--extension-degree", flags.extension_degree, "Work over the degree-m extension");
  add("equiv", "All PGL2 maps between configurations c1 and c2", equiv_cmd);
  add("involution-solve", "Involution with P1 -> P2 and P3 -> P4", involution_cmd);
  add("lemma-combin", "Exhaustive four-subset lemma check", lemma_cmd)
      ->add_option("--nmax", flags.nmax, "Largest number of points (6..9)");
  auto* strat = add("stratum-dim", "Dimension of an automorphism stratum", stratum_cmd);
  strat->add_option("--g", flags.g)->required();
  strat->add_option("--p", flags.p)->required();
  strat->add_option("--i", flags.i)->required();
  add("picard-report", "Group orders, descent and Hodge data", picard_cmd)->add_option("--genus,--g", flags.g)->required();
  add("descent", "Twists that descend to the coarse space", descent_cmd)->add_option("--genus,--g", flags.g)->required();
  auto* tab = add("tab-exponent", "Exponent of T_{a,b} in the stack Picard group", tab_cmd);
  tab->add_option("--a", flags.a)->required();
  tab->add_option("--b", flags.b)->required();
  tab->add_option("--g,--genus", flags.g)->required();
  add("hodge", "Hodge class exponent and index", hodge_cmd)->add_option("--g,--genus", flags.g)->required();
  add("curve-build", "Curve with a given branch configuration", curve_build_cmd);
  add("weierstrass", "Branch points of a curve", weierstrass_cmd);
  add("iso", "Isomorphism of curves c1, c2 over the field and the closure", iso_cmd);
  add("twist-class", "Quadratic twists of a form up to isomorphism", twist_class_cmd);
  add("count-points", "Points on a curve over a finite field", count_cmd);
  add("taut-exists", "Tautological family and global g^1_2 predicates", taut_cmd)->add_option("--g,--genus", flags.g)->required();
  auto* all = app.add_subcommand("verify-all", "Run the acceptance criteria");
  all->add_option("--gmax", flags.gmax, "Upper genus for the descent criterion")->check(CLI::Range(2u, 40u));
  all->add_flag("--table", flags.table, "Print PASS/FAIL lines instead of JSON");

  std::vector<std::string> argv{"hyperell"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> ptrs;
  for (auto& s : argv) ptrs.push_back(s.data());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::CallForHelp&) {
    return {Ok, nullptr, app.help()};
  } catch (const CLI::ParseError& e) {
    return error_result(Usage, "UsageError", e.what());
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "verify-all") {
      verify::Options options;
      options.gmax = flags.gmax;
      options.jobs = flags.jobs;
      const auto results = verify::run_all(options);
      std::size_t passed = 0;
      json rows = json::array();
      std::string text;
      for (const auto& r : results) {
        passed += r.passed;
        rows.push_back(criterion_json(r));
        text += verify::format_line(r) + "\n";
      }
      const bool ok = passed == results.size();
      text += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
      CommandResult out{ok ? Ok : Internal,
                        {{"status", ok ? "ok" : "error"},
                         {"payload", {{"criteria", rows}, {"passed", passed}, {"total", results.size()}, {"gmax", flags.gmax}}}},
                        ""};
      if (flags.table) out.text = text;
      return out;
    }
    Context ctx(flags, in);
    Output o = handlers.at(name)(ctx);
    CommandResult out{Ok, {{"status", "ok"}, {"payload", std::move(o.payload)}}, ""};
    if (flags.trace && !o.trace.is_null()) out.document["trace"] = std::move(o.trace);
    return out;
  } catch (const UsageError& e) {
    return error_result(Usage, "UsageError", e.what());
  } catch (const Error& e) {
    return error_result(exit_code_for(e.code()), std::string(error_code_name(e.code())), e.what());
  } catch (const std::exception& e) {
    return error_result(Internal, "InternalError", e.what());
  }
}

std::string render(const CommandResult& r) {
  if (!r.text.empty()) return r.text;
  return r.document.dump(2) + "\n";
}

}  // namespace hyperell::cli
