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

#ifndef HYPERELL_PICARD_HPP
#define HYPERELL_PICARD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperell/binary_form.hpp"
#include "hyperell/config_aut.hpp"

namespace hyperell {

struct CyclicClass {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
};

struct GroupOrders {
  int g = 0;
  std::uint64_t class_group_order = 0;    // coarse moduli space
  std::uint64_t stack_picard_order = 0;   // moduli stack
  std::uint64_t divisor_stack_order = 0;  // stack of smooth degree-(2g+2) divisors
  std::uint64_t comparison_index = 0;     // stack_picard_order / divisor_stack_order
};

/// characteristic 0 stands for Q. BadCharacteristic when it divides 2g+2, or is 5 for g = 2.
GroupOrders group_orders(int g, std::uint64_t characteristic = 0);

// A stabilizer element of [f] scales the line k f by zeta_order^exponent.
struct FiberCharacter {
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;
  Scalar value;
};

/// Character of the weighted action of (a lift of) `a` on the fiber through f.
FiberCharacter stabilizer_fiber_character(const BinaryForm& f, const MoebiusMap& a);

/// X^(2g+1) Y - Y^(2g+2), stabilized by a cyclic group of order 2g+1.
BinaryForm cyclic_probe(unsigned g, const FieldTag& field);
/// X^(2g+2) - Y^(2g+2), stabilized by a dihedral group of order 4g+4.
BinaryForm dihedral_probe(unsigned g, const FieldTag& field);

/// Smallest prime p = 1 mod lcm(2g+1, 2g+2), so both probes split.
FieldTag default_probe_field(unsigned g);

struct ProbeResult {
  std::string name;
  BinaryForm form;
  ConfigAutGroup stabilizer;
  std::vector<FiberCharacter> characters;  // parallel to stabilizer.elements
  std::vector<std::uint64_t> allowed;      // twists d in Z/(4g+2) acting trivially
};

struct DescentResult {
  unsigned g = 0;
  FieldTag field;
  std::uint64_t modulus = 0;  // 4g+2
  std::vector<ProbeResult> probes;
  std::vector<std::uint64_t> subgroup;  // intersection over probes
};

/// Twists in Z/(4g+2) on which every stabilizer element of the form acts trivially.
ProbeResult probe_descent(const std::string& name, const BinaryForm& form, unsigned jobs = 1);

/// Intersection over both probes; field defaults to default_probe_field(g).
DescentResult descent_subgroup(unsigned g, const std::optional<FieldTag>& field = std::nullopt, unsigned jobs = 1);

/// (a+b)g + (b-a); NegativeDegree when negative.
long long m_of(long long a, long long b, long long g);

/// Exponent of the stack Picard generator for T_{a,b}, reduced mod the stack Picard order.
CyclicClass tab_exponent(long long a, long long b, long long g);

/// Index of the subgroup generated by the Hodge class: 2 iff 4 | g.
std::uint64_t hodge_index(long long g);

/// Rank m(a,b) + 1 of the pushed-forward bundle.
long long pushforward_rank(long long a, long long b, long long g);

/// Symbolic description of the stack Picard generator.
std::string generator_descriptor(unsigned g);

struct PicardReport {
  GroupOrders orders;
  std::uint64_t descent_subgroup_order = 0;
  CyclicClass hodge_exponent;
  std::uint64_t hodge_index = 0;
  std::string generator;
  DescentResult descent;
};

PicardReport picard_report(unsigned g, const std::optional<FieldTag>& field = std::nullopt, unsigned jobs = 1);

}  // namespace hyperell

#endif  // HYPERELL_PICARD_HPP
