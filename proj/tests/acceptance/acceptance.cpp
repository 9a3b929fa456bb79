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

#include <cstdlib>
#include <iostream>
#include <string>

#include "verify.hpp"

// Usage: acceptance [criterion ids...]. Prints one PASS/FAIL line per criterion.
int main(int argc, char** argv) {
  hyperell::verify::Options options;
  std::vector<hyperell::verify::CriterionResult> results;
  if (argc > 1) {
    for (int k = 1; k < argc; ++k) results.push_back(hyperell::verify::run_criterion(std::atoi(argv[k]), options));
  } else {
    results = hyperell::verify::run_all(options);
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << hyperell::verify::format_line(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
