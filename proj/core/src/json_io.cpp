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

#include "hyperell/json_io.hpp"

#include "hyperell/error.hpp"

namespace hyperell::json_io {

namespace {

std::string text_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::ParseError, std::string("expected a string or integer for ") + what);
}

const json& array_of(const json& j, const char* what) {
  require(j.is_array(), ErrorCode::ParseError, std::string("expected an array for ") + what);
  return j;
}

unsigned unsigned_of(const json& j, const char* what) {
  require(j.is_number_integer() && j.get<long long>() >= 0, ErrorCode::ParseError,
          std::string("expected a nonnegative integer for ") + what);
  return j.get<unsigned>();
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key) {
  require(j.is_object(), ErrorCode::ParseError, "expected a JSON object");
  const auto it = j.find(key);
  require(it != j.end(), ErrorCode::ParseError, std::string("missing member '") + key + "'");
  return *it;
}

json to_json(const FieldTag& field) { return field.to_string(); }

FieldTag field_from_json(const json& j) {
  require(j.is_string(), ErrorCode::ParseError, "field must be a string such as \"Q\" or \"Fp:7\"");
  return FieldTag::parse(j.get<std::string>());
}

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldTag& field, const json& j) { return Scalar::parse(field, text_of(j, "scalar")); }

json to_json(const ProjectivePoint& p) { return json::array({to_json(p.x()), to_json(p.y())}); }

ProjectivePoint point_from_json(const FieldTag& field, const json& j) {
  require(j.is_array() && j.size() == 2, ErrorCode::ParseError, "a point is a pair [\"x\", \"y\"]");
  return ProjectivePoint(scalar_from_json(field, j[0]), scalar_from_json(field, j[1]));
}

json to_json(const MoebiusMap& m) {
  const Matrix2& a = m.matrix();
  return json::array({json::array({to_json(a.a), to_json(a.b)}), json::array({to_json(a.c), to_json(a.d)})});
}

MoebiusMap moebius_from_json(const FieldTag& field, const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() && j[1].size() == 2,
          ErrorCode::ParseError, "a matrix is [[\"a\", \"b\"], [\"c\", \"d\"]]");
  return MoebiusMap(scalar_from_json(field, j[0][0]), scalar_from_json(field, j[0][1]), scalar_from_json(field, j[1][0]),
                    scalar_from_json(field, j[1][1]));
}

json to_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return {{"genus", f.genus()}, {"field", to_json(f.field())}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const json& j) {
  const FieldTag field = field_from_json(member(j, "field"));
  const unsigned genus = unsigned_of(member(j, "genus"), "genus");
  std::vector<Scalar> coeffs;
  for (const auto& c : array_of(member(j, "coeffs"), "coeffs")) coeffs.push_back(scalar_from_json(field, c));
  return BinaryForm(genus, std::move(coeffs));
}

json to_json(const PointConfiguration& c) {
  json points = json::array();
  for (const auto& p : c.points()) points.push_back(to_json(p));
  return {{"field", to_json(c.field())}, {"points", points}};
}

PointConfiguration configuration_from_json(const json& j) {
  const FieldTag field = field_from_json(member(j, "field"));
  std::vector<ProjectivePoint> points;
  for (const auto& p : array_of(member(j, "points"), "points")) points.push_back(point_from_json(field, p));
  return PointConfiguration(field, std::move(points));
}

json to_json(const HyperellipticCurve& c) {
  json out = to_json(c.form());
  out["twist"] = to_json(c.twist());
  if (c.chart()) out["chart"] = to_json(*c.chart());
  return out;
}

HyperellipticCurve curve_from_json(const json& j) {
  BinaryForm form = form_from_json(j);
  const FieldTag field = form.field();
  const Scalar twist = j.contains("twist") ? scalar_from_json(field, j["twist"]) : Scalar(field, 1);
  std::optional<MoebiusMap> chart;
  if (j.contains("chart")) chart = moebius_from_json(field, j["chart"]);
  return HyperellipticCurve(std::move(form), twist, chart);
}

json to_json(const Permutation& p) {
  json images = json::array();
  for (unsigned v : p.images()) images.push_back(v + 1);
  return {{"cycles", p.to_string()}, {"cycle_type", p.cycle_type()}, {"images", images}};
}

json to_json(const ConfigAutGroup& g) {
  json elements = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    elements.push_back({{"matrix", to_json(g.elements[i])}, {"permutation", to_json(g.perms[i])}});
  }
  return {{"order", g.order()}, {"elements", elements}};
}

json to_json(const FourTuplePair& pair) {
  auto one_based = [](const std::array<unsigned, 4>& s) {
    json out = json::array();
    for (unsigned v : s) out.push_back(v + 1);
    return out;
  };
  return {{"N1", one_based(pair.n1)}, {"N2", one_based(pair.n2)}, {"k1", pair.k1}, {"k2", pair.k2}};
}

json to_json(const LemmaCombinReport& report) {
  json rows = json::array();
  json by_n = json::object();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"cycle_type", row.cycle_type},
                    {"tested", row.tested},
                    {"witnesses_found", row.witnesses_found},
                    {"failures", row.failures}});
    by_n[std::to_string(row.n)] = report.failures(row.n);
  }
  return {{"n_max", report.n_max},
          {"rows", rows},
          {"failures_by_n", by_n},
          {"failures_only_in_excluded_class", report.failures_only_in_excluded_class()}};
}

json to_json(const StratumEntry& s) { return {{"p", s.p}, {"i", s.i}, {"dim", s.dimension}}; }

json to_json(const CyclicClass& c) { return {{"modulus", c.modulus}, {"residue", c.residue}}; }

json to_json(const GroupOrders& o) {
  return {{"genus", o.g},
          {"class_group_order", o.class_group_order},
          {"stack_picard_order", o.stack_picard_order},
          {"divisor_stack_order", o.divisor_stack_order},
          {"comparison_index", o.comparison_index}};
}

json to_json(const FiberCharacter& ch) {
  return {{"order", ch.order}, {"exponent", ch.exponent}, {"value", to_json(ch.value)}};
}

json to_json(const DescentResult& d, bool with_elements) {
  json probes = json::array();
  for (const auto& p : d.probes) {
    json probe = {{"name", p.name},
                  {"form", to_json(p.form)},
                  {"stabilizer_order", p.stabilizer.order()},
                  {"allowed_twists", p.allowed}};
    if (with_elements) {
      json elements = json::array();
      for (std::size_t i = 0; i < p.stabilizer.order(); ++i) {
        elements.push_back({{"matrix", to_json(p.stabilizer.elements[i])},
                            {"cycle_type", p.stabilizer.perms[i].cycle_type()},
                            {"character", to_json(p.characters[i])}});
      }
      probe["elements"] = elements;
    }
    probes.push_back(probe);
  }
  return {{"genus", d.g},
          {"field", to_json(d.field)},
          {"modulus", d.modulus},
          {"subgroup", d.subgroup},
          {"subgroup_order", d.subgroup.size()},
          {"probes", probes}};
}

json to_json(const PicardReport& r, bool with_elements) {
  json out = to_json(r.orders);
  out["descent_subgroup_order"] = r.descent_subgroup_order;
  out["hodge_exponent"] = to_json(r.hodge_exponent);
  out["hodge_index"] = r.hodge_index;
  out["generator"] = r.generator;
  out["descent"] = to_json(r.descent, with_elements);
  return out;
}

json to_json(const CurveIsoWitness& w) {
  return {{"moebius", to_json(w.moebius)}, {"scale", to_json(w.scale)}, {"scale_class", to_string(w.scale_class)}};
}

json to_json(const EllipticCurve& e) {
  return {{"equation", "y^2 = x^3 + t*x + t"}, {"t", to_json(e.t)}, {"j", to_json(e.j)}, {"field", to_json(e.t.field())}};
}

}  // namespace hyperell::json_io
