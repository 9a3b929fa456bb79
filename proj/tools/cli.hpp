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

#ifndef HYPERELL_TOOLS_CLI_HPP
#define HYPERELL_TOOLS_CLI_HPP

#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperell::cli {

enum ExitCode : int { Ok = 0, Internal = 1, Usage = 2, Parse = 3, Precondition = 4 };

struct CommandResult {
  int exit_code = Ok;
  nlohmann::json document;  // {"status", "payload", "trace"?}
  std::string text;         // plain output (help, --table); replaces the document when set
};

/// args excludes the program name. JSON input comes from --input FILE or `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

/// What the executable writes to stdout.
std::string render(const CommandResult& r);

}  // namespace hyperell::cli

#endif  // HYPERELL_TOOLS_CLI_HPP
