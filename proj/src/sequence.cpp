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

#include "arbpulse/sequence.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace arbpulse {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::P, "P"},
    {Family::B, "B"},
    {Family::N, "N"},
    {Family::SK, "SK"},
    {Family::SB, "SB"},
    {Family::CORPSE, "CORPSE"},
    {Family::SKD, "SKD"},
    {Family::RAW, "RAW"},
}};

}  // namespace

const char* to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name.data();
  }
  return "RAW";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

double PulseSequence::two_pi_equivalents() const {
  double total = 0.0;
  for (std::size_t i = 1; i < pulses.size(); ++i) total += std::abs(pulses[i].theta);
  return total / (2 * std::numbers::pi);
}

PulseSequence rotate_phases(PulseSequence seq, double phi) {
  seq.target.phi += phi;
  for (Pulse& p : seq.pulses) p.phi += phi;
  return seq;
}

std::vector<Pulse> inverse_pulses(const std::vector<Pulse>& pulses) {
  std::vector<Pulse> out;
  out.reserve(pulses.size());
  for (auto it = pulses.rbegin(); it != pulses.rend(); ++it) {
    out.push_back({it->phi, -it->theta});
  }
  return out;
}

}  // namespace arbpulse
