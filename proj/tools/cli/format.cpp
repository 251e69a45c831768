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

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"

namespace zmf::cli {
namespace {

using Json = nlohmann::ordered_json;

void write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "_" + it.key(), out);
  } else {
    out.emplace_back(prefix, j);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const nlohmann::ordered_json& j) {
  std::string out;
  write(j, out);
  return out;
}

std::string dump_csv(const std::vector<nlohmann::ordered_json>& rows) {
  std::string out;
  bool header = false;
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, Json>> cells;
    flatten(row, "", cells);
    if (!header) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i].first);
      out += '\n';
      header = true;
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      out += (i ? "," : "") + csv_field(scalar_text(cells[i].second));
    out += '\n';
  }
  return out;
}

std::string dump_plain(const std::vector<nlohmann::ordered_json>& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, Json>> cells;
    flatten(row, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i)
      out += (i ? "  " : "") + cells[i].first + "=" + scalar_text(cells[i].second);
    out += '\n';
  }
  return out;
}

}  // namespace zmf::cli
