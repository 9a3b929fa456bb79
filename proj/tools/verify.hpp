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

#ifndef HYPERELL_TOOLS_VERIFY_HPP
#define HYPERELL_TOOLS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hyperell::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Options {
  unsigned gmax = 20;  // upper genus for the descent check
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
};

constexpr int criterion_count = 12;

/// Runs one criterion (1-based). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const Options& options);

std::vector<CriterionResult> run_all(const Options& options);

/// "PASS  3 stabilizer orders ... (0.12 s / 30 s)".
std::string format_line(const CriterionResult& r);

}  // namespace hyperell::verify

#endif  // HYPERELL_TOOLS_VERIFY_HPP
