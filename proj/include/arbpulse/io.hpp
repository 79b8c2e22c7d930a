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

#include "arbpulse/analysis.hpp"
#include "arbpulse/errors.hpp"
#include "arbpulse/options.hpp"
#include "arbpulse/sequence.hpp"

namespace arbpulse {

/// A sequence file that parses but does not verify, or does not parse.
class VerificationError : public Error {
 public:
  using Error::Error;
};

std::string sequence_to_json(const PulseSequence& seq);

/// Parses and re-verifies a sequence. Throws VerificationError on malformed
/// input or when the pulses do not reach the claimed order.
PulseSequence sequence_from_json(const std::string& text, const BuildOptions& options = {});

void save_sequence(const std::filesystem::path& path, const PulseSequence& seq);
PulseSequence load_sequence(const std::filesystem::path& path, const BuildOptions& options = {});

/// %.12e with the exponent reduced to its shortest form: 2.218971108147e-1.
std::string format_sci(double x);

/// "epsilon,<labels...>" then one row per grid point; LF endings.
std::string sweep_to_csv(const SweepResult& result);
/// "n,count" then one row per order.
std::string scaling_to_csv(const ScalingResult& result);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace arbpulse
