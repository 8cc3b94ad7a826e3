// Copyright 2026 The kacgalois Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kacgalois/json_io.hpp"

namespace kacgalois {

extern const char* const kVersion;

enum class Command { validate, dual, check_duality, coreps, coideals, galois, jones, selftest };
enum class Format { json, text };

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

struct RunConfig {
  Command command = Command::selftest;
  std::string input_path;
  std::string output_path;  // empty: standard output
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::string fixture_dir;  // used by selftest
  int random_inclusions = 20;  // used by selftest
};

struct RunResult {
  int exit_code = 0;  // 0 all checks passed, 1 a check failed, 2 bad input
  json report;
};

RunResult run(const RunConfig& config);

std::string render(const json& report, Format format);

// Error document for failures that happen before a command runs.
json error_document(const std::string& command, const std::string& type, const std::string& message);

}  // namespace kacgalois
