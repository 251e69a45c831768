// Copyright 2026 The zmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace zmf::cli {

enum class Subcommand { eval, density, moment, zeros, mahler, verify, oracle };
enum class OutputFormat { json, csv, plain };

const char* to_string(Subcommand s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitVerification = 4;

// A fully parsed invocation.  Values are kept as the strings given on the
// command line (or read from --from-json) and converted inside run().
struct CommandRequest {
  Subcommand subcommand = Subcommand::eval;
  std::map<std::string, std::string> params;
  OutputFormat output = OutputFormat::json;
};

struct ParseOutcome {
  std::optional<CommandRequest> request;
  int exit_code = kExitOk;
};

// Parses argv.  Help text goes to `out`, parse errors to `err`.
ParseOutcome parse_request(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Executes the request, writing data to `out` and diagnostics to `err`.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

// parse_request followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Result of a subcommand: the document printed as JSON and the flat rows
// printed as CSV or plain text.
struct Output {
  nlohmann::ordered_json doc;
  std::vector<nlohmann::ordered_json> rows;
  bool passed = true;
};

// JSON text with every float written as %.17g and non-finite floats as null.
std::string dump_json(const nlohmann::ordered_json& j);
// One header line and one line per row; nested objects flatten to a_b keys.
std::string dump_csv(const std::vector<nlohmann::ordered_json>& rows);
std::string dump_plain(const std::vector<nlohmann::ordered_json>& rows);

// Formats a double with 17 significant digits.
std::string format_double(double v);

}  // namespace zmf::cli
