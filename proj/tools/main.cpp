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

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = hyperell::cli::run(args, std::cin);
  std::cout << hyperell::cli::render(result);
  if (result.exit_code != hyperell::cli::Ok && result.document.contains("payload")) {
    const auto& p = result.document["payload"];
    if (p.contains("message")) std::cerr << "hyperell: " << p["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}
