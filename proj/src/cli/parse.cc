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

#include "matroidkit/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace matroidkit::cli {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

const std::regex& TokenPattern() {
  static const std::regex pattern("[A-Za-z0-9_.-]+");
  return pattern;
}

// Non-empty lines, comments stripped, split on whitespace.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

// Checks identifier tokens in [from, to); `to` defaults to the line end.
void RequireTokens(const Line& line, std::size_t from, std::size_t to = SIZE_MAX) {
  for (std::size_t i = from; i < std::min(to, line.tokens.size()); ++i) {
    if (!std::regex_match(line.tokens[i], TokenPattern())) {
      throw ParseError(line.number, "invalid token '" + line.tokens[i] + "'");
    }
  }
}

std::vector<std::string> Rest(const Line& line, std::size_t from) {
  return {line.tokens.begin() + static_cast<std::ptrdiff_t>(from), line.tokens.end()};
}

std::int64_t ParseInt(std::string_view digits) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw InputError("number out of range: " + std::string(digits));
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

Rational ParseRational(std::string_view token) {
  static const std::regex decimal(R"((-?)([0-9]+)(?:\.([0-9]+))?)");
  static const std::regex fraction(R"((-?[0-9]+)/([0-9]+))");
  const std::string s(token);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    const std::int64_t den = ParseInt(m[2].str());
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(ParseInt(m[1].str()), den);
  }
  if (std::regex_match(s, m, decimal)) {
    const std::string frac = m[3].matched ? m[3].str() : "";
    if (frac.size() > 18) throw InputError("too many decimal places in '" + s + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t whole = ParseInt(m[2].str());
    const std::int64_t part = frac.empty() ? 0 : ParseInt(frac);
    if (whole > (std::numeric_limits<std::int64_t>::max() - part) / scale) {
      throw InputError("number out of range: " + s);
    }
    Rational value(whole * scale + part, scale);
    return m[1].length() > 0 ? -value : value;
  }
  throw InputError("malformed rational '" + s + "'");
}

ExplicitSetSystem ParseSetSystem(std::string_view text) {
  std::optional<Carrier> carrier;
  std::vector<ElementSet> family;
  for (const Line& line : Tokenize(text)) {
    const std::string& head = line.tokens.front();
    if (head == "carrier:") {
      if (carrier) throw ParseError(line.number, "carrier declared twice");
      RequireTokens(line, 1);
      const std::vector<std::string> ids = Rest(line, 1);
      if (std::find(ids.begin(), ids.end(), "-") != ids.end()) {
        throw ParseError(line.number, "'-' is reserved for the empty set");
      }
      try {
        carrier.emplace(ids);
      } catch (const InputError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (head == "indep:") {
      if (!carrier) throw ParseError(line.number, "indep before carrier");
      if (line.tokens.size() < 2) throw ParseError(line.number, "indep needs elements or '-'");
      ElementSet member = carrier->EmptySet();
      if (!(line.tokens.size() == 2 && line.tokens[1] == "-")) {
        RequireTokens(line, 1);
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          const auto index = carrier->Find(line.tokens[i]);
          if (!index) {
            throw ParseError(line.number, "element " + line.tokens[i] + " is not in the carrier");
          }
          if (member.contains(*index)) {
            throw ParseError(line.number, "element " + line.tokens[i] + " repeated");
          }
          member.insert(*index);
        }
      }
      family.push_back(std::move(member));
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!carrier) throw InputError("missing carrier line");
  if (carrier->size() > ExplicitSetSystem::kMaxCarrier) {
    throw InputError("carrier exceeds " + std::to_string(ExplicitSetSystem::kMaxCarrier) +
                     " elements");
  }
  return ExplicitSetSystem(*carrier, family);
}

UndirectedGraph ParseGraph(std::string_view text) {
  std::set<std::string> declared;
  std::set<std::string> vertices;
  std::vector<Edge> edges;
  std::set<std::string> edge_ids;
  for (const Line& line : Tokenize(text)) {
    const std::string& head = line.tokens.front();
    if (head == "vertex:") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "vertex needs names");
      RequireTokens(line, 1);
      for (const std::string& v : Rest(line, 1)) {
        if (!declared.insert(v).second) throw ParseError(line.number, "duplicate vertex " + v);
        vertices.insert(v);
      }
    } else if (head == "edge") {
      if (line.tokens.size() != 4 && line.tokens.size() != 5) {
        throw ParseError(line.number, "expected: edge <id> <u> <v> [<weight>]");
      }
      RequireTokens(line, 1, 4);
      Edge e{line.tokens[1], line.tokens[2], line.tokens[3], Rational(1)};
      if (line.tokens.size() == 5) {
        try {
          e.weight = ParseRational(line.tokens[4]);
        } catch (const InputError& err) {
          throw ParseError(line.number, err.what());
        }
      }
      if (!edge_ids.insert(e.id).second) throw ParseError(line.number, "duplicate edge id " + e.id);
      vertices.insert(e.u);
      vertices.insert(e.v);
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  return UndirectedGraph({vertices.begin(), vertices.end()}, std::move(edges));
}

BipartiteGraph ParseBipartite(std::string_view text) {
  std::optional<std::vector<std::string>> left;
  std::optional<std::vector<std::string>> right;
  std::vector<std::pair<std::size_t, BipartiteEdge>> edges;
  std::set<std::string> edge_ids;
  for (const Line& line : Tokenize(text)) {
    const std::string& head = line.tokens.front();
    if (head == "left:" || head == "right:") {
      auto& side = head == "left:" ? left : right;
      if (side) throw ParseError(line.number, head + " declared twice");
      if (line.tokens.size() < 2) throw ParseError(line.number, head + " needs vertices");
      RequireTokens(line, 1);
      side = Rest(line, 1);
    } else if (head == "edge") {
      if (line.tokens.size() != 4) throw ParseError(line.number, "expected: edge <id> <l> <r>");
      RequireTokens(line, 1);
      if (!edge_ids.insert(line.tokens[1]).second) {
        throw ParseError(line.number, "duplicate edge id " + line.tokens[1]);
      }
      edges.emplace_back(line.number,
                         BipartiteEdge{line.tokens[1], line.tokens[2], line.tokens[3]});
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!left) left.emplace();
  if (!right) right.emplace();
  for (const auto& [number, e] : edges) {
    if (std::find(left->begin(), left->end(), e.left) == left->end()) {
      throw ParseError(number, e.left + " is not a left vertex");
    }
    if (std::find(right->begin(), right->end(), e.right) == right->end()) {
      throw ParseError(number, e.right + " is not a right vertex");
    }
  }
  std::vector<BipartiteEdge> plain;
  for (auto& [number, e] : edges) plain.push_back(std::move(e));
  return BipartiteGraph(std::move(*left), std::move(*right), std::move(plain));
}

std::map<std::string, Rational> ParseCosts(std::string_view text) {
  std::map<std::string, Rational> costs;
  for (const Line& line : Tokenize(text)) {
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected: <element> <rational>");
    RequireTokens(line, 0, 1);
    Rational value;
    try {
      value = ParseRational(line.tokens[1]);
    } catch (const InputError& e) {
      throw ParseError(line.number, e.what());
    }
    if (!costs.emplace(line.tokens[0], value).second) {
      throw ParseError(line.number, "duplicate cost for " + line.tokens[0]);
    }
  }
  return costs;
}

std::string FormatElements(const Carrier& carrier, const ElementSet& s) {
  if (s.empty()) return "-";
  std::string out;
  s.ForEach([&](Index i) {
    if (!out.empty()) out += ' ';
    out += carrier.id(i);
  });
  return out;
}

std::string FormatSetSystem(const ExplicitSetSystem& sys) {
  std::string out = "carrier:";
  for (const std::string& id : sys.carrier().ids()) out += " " + id;
  out += '\n';
  for (const ElementSet& member : sys.Family()) {
    out += "indep: " + FormatElements(sys.carrier(), member) + '\n';
  }
  return out;
}

}  // namespace matroidkit::cli
