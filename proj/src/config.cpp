// Copyright 2026 The arbpulse Authors
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

#include "arbpulse/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "arbpulse/errors.hpp"

namespace arbpulse {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw PreconditionError("config: bad value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw PreconditionError("config: bad boolean for " + key + ": '" + value + "'");
}

}  // namespace

Config parse_config(const std::string& text, Config base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (key == "tol_defect") {
      base.build.tol_defect = parse_number<double>(key, value);
    } else if (key == "max_ts_level") {
      base.build.max_ts_level = parse_number<int>(key, value);
    } else if (key == "max_block_level") {
      base.build.max_block_level = parse_number<int>(key, value);
    } else if (key == "eps_start") {
      base.eps_start = parse_number<double>(key, value);
    } else if (key == "eps_stop") {
      base.eps_stop = parse_number<double>(key, value);
    } else if (key == "points") {
      base.points = parse_number<int>(key, value);
    } else if (key == "log_grid") {
      base.log_grid = parse_bool(key, value);
    } else if (key == "jobs") {
      base.jobs = parse_number<unsigned>(key, value);
    } else {
      throw PreconditionError("config line " + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
    }
  }
  if (!(base.build.tol_defect > 0)) throw PreconditionError("config: tol_defect must be > 0");
  return base;
}

Config load_config(const std::filesystem::path& path, Config base) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

}  // namespace arbpulse
