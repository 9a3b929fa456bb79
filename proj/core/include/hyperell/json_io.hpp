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

#ifndef HYPERELL_JSON_IO_HPP
#define HYPERELL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "hyperell/binary_form.hpp"
#include "hyperell/config_aut.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/moebius.hpp"
#include "hyperell/picard.hpp"
#include "hyperell/strata.hpp"

namespace hyperell::json_io {

using nlohmann::json;

// Malformed documents raise Error(ParseError).

json to_json(const FieldTag& field);
FieldTag field_from_json(const json& j);

json to_json(const Scalar& s);
Scalar scalar_from_json(const FieldTag& field, const json& j);

json to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const FieldTag& field, const json& j);

json to_json(const MoebiusMap& m);
MoebiusMap moebius_from_json(const FieldTag& field, const json& j);

json to_json(const BinaryForm& f);
BinaryForm form_from_json(const json& j);

json to_json(const PointConfiguration& c);
PointConfiguration configuration_from_json(const json& j);

json to_json(const HyperellipticCurve& c);
HyperellipticCurve curve_from_json(const json& j);

json to_json(const Permutation& p);
json to_json(const ConfigAutGroup& g);
json to_json(const FourTuplePair& pair);
json to_json(const LemmaCombinReport& report);
json to_json(const StratumEntry& s);
json to_json(const CyclicClass& c);
json to_json(const GroupOrders& orders);
json to_json(const FiberCharacter& ch);
json to_json(const DescentResult& d, bool with_elements);
json to_json(const PicardReport& r, bool with_elements);
json to_json(const CurveIsoWitness& w);
json to_json(const EllipticCurve& e);

/// Parses text, mapping syntax errors to ParseError.
json parse(std::string_view text);

/// Looks up a required member, mapping absence to ParseError.
const json& member(const json& j, const char* key);

}  // namespace hyperell::json_io

#endif  // HYPERELL_JSON_IO_HPP
