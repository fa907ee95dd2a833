// Copyright 2026 The Achievement Games Authors
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

#include "achieve/game_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace achieve {
namespace {

using nlohmann::json;

struct Position {
  int line = 0;
  int column = 0;
};

Position PositionOf(std::string_view text, std::size_t offset) {
  Position pos{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Locates the first string literal equal to `token` after `key` (if found),
// so that value errors can point at the source.
Position Locate(std::string_view text, std::string_view key,
                std::string_view token) {
  std::size_t from = 0;
  if (!key.empty()) {
    auto k = text.find("\"" + std::string(key) + "\"");
    if (k != std::string_view::npos) from = k;
  }
  auto at = text.find("\"" + std::string(token) + "\"", from);
  if (at == std::string_view::npos) at = text.find(token);
  if (at == std::string_view::npos) return {};
  return PositionOf(text, at);
}

[[noreturn]] void Fail(std::string_view text, std::string_view key,
                       std::string_view token, const std::string& message) {
  Position pos = Locate(text, key, token);
  throw ParseError(message, pos.line, pos.column);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Position pos = PositionOf(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), pos.line,
                     pos.column);
  }
}

const json& Field(const json& doc, std::string_view text, const char* key) {
  if (!doc.is_object()) Fail(text, "", "{", "document must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Rational RationalField(const json& value, std::string_view text,
                       const char* key) {
  if (!value.is_string()) {
    Fail(text, key, value.dump(),
         std::string("field \"") + key + "\" must hold rational strings");
  }
  const auto& s = value.get_ref<const std::string&>();
  auto r = Rational::TryParse(s);
  if (!r) Fail(text, key, s, "malformed rational \"" + s + "\"");
  return *r;
}

std::vector<Rational> RationalArray(const json& value, std::string_view text,
                                    const char* key, std::size_t length) {
  if (!value.is_array() || value.size() != length) {
    Fail(text, key, key,
         std::string("field \"") + key + "\" must be an array of " +
             std::to_string(length) + " rational strings");
  }
  std::vector<Rational> out;
  out.reserve(length);
  for (const auto& v : value) out.push_back(RationalField(v, text, key));
  return out;
}

int CountField(const json& doc, std::string_view text, const char* key) {
  const json& v = Field(doc, text, key);
  if (!v.is_number_integer() || v.get<long long>() < 1 ||
      v.get<long long>() > 64) {
    Fail(text, key, key,
         std::string("field \"") + key + "\" must be an integer in [1, 64]");
  }
  return v.get<int>();
}

json RationalJson(const Rational& r) { return r.ToString(); }

}  // namespace

Game ParseGameDocument(std::string_view text) {
  const json doc = ParseJson(text);
  const int n = CountField(doc, text, "agents");
  const int m = CountField(doc, text, "goals");

  const json& costs_json = Field(doc, text, "costs");
  if (!costs_json.is_array()) {
    Fail(text, "costs", "costs", "field \"costs\" must be an array");
  }
  std::vector<Rational> costs =
      RationalArray(costs_json, text, "costs", costs_json.size());
  std::vector<Rational> thresholds =
      RationalArray(Field(doc, text, "thresholds"), text, "thresholds", m);
  for (const auto& g : thresholds) {
    if (g.sign() <= 0) {
      Fail(text, "thresholds", g.ToString(), "thresholds must be positive");
    }
  }

  const json& rows = Field(doc, text, "motivations");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    Fail(text, "motivations", "motivations",
         "field \"motivations\" must have " + std::to_string(n) + " rows");
  }
  Matrix<Rational> w(n, m);
  for (int i = 0; i < n; ++i) {
    auto row = RationalArray(rows[i], text, "motivations", m);
    std::copy(row.begin(), row.end(), w.row(i).begin());
  }

  try {
    return Game(CostSet(std::move(costs)), std::move(thresholds),
                std::move(w));
  } catch (const InvalidArgument& e) {
    Position pos = Locate(text, "", "costs");
    throw ParseError(e.what(), pos.line, pos.column);
  }
}

std::string WriteGameDocument(const Game& game) {
  json doc;
  doc["agents"] = game.num_agents();
  doc["goals"] = game.num_goals();
  json costs = json::array();
  for (const auto& c : game.costs().values()) costs.push_back(RationalJson(c));
  doc["costs"] = costs;
  json thresholds = json::array();
  for (const auto& g : game.thresholds()) thresholds.push_back(RationalJson(g));
  doc["thresholds"] = thresholds;
  json rows = json::array();
  for (int i = 0; i < game.num_agents(); ++i) {
    json row = json::array();
    for (const auto& w : game.motivations().row(i)) {
      row.push_back(RationalJson(w));
    }
    rows.push_back(row);
  }
  doc["motivations"] = rows;
  return doc.dump(2) + "\n";
}

ContributionProfile ParseProfileDocument(std::string_view text,
                                         const Game& game) {
  const json doc = ParseJson(text);
  const json& rows = Field(doc, text, "contributions");
  const int n = game.num_agents();
  const int m = game.num_goals();
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    Fail(text, "contributions", "contributions",
         "field \"contributions\" must have " + std::to_string(n) + " rows");
  }
  ContributionProfile profile(n, m);
  for (int i = 0; i < n; ++i) {
    auto row = RationalArray(rows[i], text, "contributions", m);
    for (int j = 0; j < m; ++j) {
      auto k = game.costs().IndexOf(row[j]);
      if (!k) {
        Fail(text, "contributions", row[j].ToString(),
             "contribution " + row[j].ToString() + " is not in the cost set");
      }
      profile(i, j) = *k;
    }
  }
  return profile;
}

std::string WriteProfileDocument(const Game& game,
                                 const ContributionProfile& profile) {
  json rows = json::array();
  for (int i = 0; i < profile.num_agents(); ++i) {
    json row = json::array();
    for (int j = 0; j < profile.num_goals(); ++j) {
      row.push_back(RationalJson(game.costs()[profile(i, j)]));
    }
    rows.push_back(row);
  }
  json doc;
  doc["contributions"] = rows;
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace achieve
