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

#pragma once

#include <filesystem>
#include <string>

#include "arbpulse/options.hpp"

namespace arbpulse {

/// Defaults for the CLI, overridable by a key=value file and then by flags.
struct Config {
  BuildOptions build;
  double eps_start = 1e-3;
  double eps_stop = 0.5;
  int points = 61;
  bool log_grid = true;
  unsigned jobs = 1;
};

/// Lines are `key = value`; `#` starts a comment. Recognized keys:
/// tol_defect, max_ts_level, max_block_level, eps_start, eps_stop, points,
/// log_grid, jobs. Unknown keys and malformed values are PreconditionErrors.
Config parse_config(const std::string& text, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});

}  // namespace arbpulse
