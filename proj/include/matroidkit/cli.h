// Copyright 2026 The Authors.
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

// Line-oriented input formats and the command-line driver.
//
// Every format ignores blank lines and text after '#'. Tokens match
// [A-Za-z0-9_.-]+.
//
//   setsys     carrier: <tok>*          (exactly once, first)
//              indep: <tok>+ | indep: - ('-' is the empty set)
//   graph      vertex: <tok>+           (optional; endpoints are implied)
//              edge <id> <u> <v> [<weight>]
//   bipartite  left: <tok>+
//              right: <tok>+
//              edge <id> <l> <r>
//   costs      <element> <rational>
//
// Rationals are decimals ("2", "-0.25") or fractions ("3/4").

#ifndef MATROIDKIT_CLI_H_
#define MATROIDKIT_CLI_H_

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "matroidkit/core.h"
#include "matroidkit/instances.h"

namespace matroidkit::cli {

// A malformed input line. what() reads "line N: message".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Throws InputError (not ParseError) on a malformed token; parsers attach
// the line number.
Rational ParseRational(std::string_view token);

ExplicitSetSystem ParseSetSystem(std::string_view text);
UndirectedGraph ParseGraph(std::string_view text);
BipartiteGraph ParseBipartite(std::string_view text);
std::map<std::string, Rational> ParseCosts(std::string_view text);

// Space-separated ids in carrier order, or "-" for the empty set.
std::string FormatElements(const Carrier& carrier, const ElementSet& s);
// A setsys document that ParseSetSystem reads back to an equal system.
std::string FormatSetSystem(const ExplicitSetSystem& sys);

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 on input errors, 2 on contract errors; diagnostics go to `err`
// prefixed with "error: ".
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matroidkit::cli

#endif  // MATROIDKIT_CLI_H_
