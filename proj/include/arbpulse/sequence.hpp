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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbpulse/su2.hpp"

namespace arbpulse {

enum class Family { P, B, N, SK, SB, CORPSE, SKD, RAW };

const char* to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// An ordered pulse list together with the rotation it implements and the
/// compensation order it claims. pulses.front() is the base pulse.
struct PulseSequence {
  Family family = Family::RAW;
  int order = 0;
  Pulse target;
  std::vector<Pulse> pulses;
  /// Error parameter the order refers to.
  ErrorKind model = ErrorKind::amplitude;
  /// Narrowband sequences claim no cancellation; they only reproduce the
  /// target exactly at zero error.
  bool narrowband = false;
  /// Orders that cancelled without a correction step.
  std::vector<int> free_orders;

  Unitary2 target_unitary() const { return ideal_rotation(target); }
  std::size_t pulse_count() const { return pulses.size(); }
  /// Total corrective rotation (all pulses after the base) over 2*pi.
  double two_pi_equivalents() const;
};

/// Same sequence with every phase, target included, advanced by `phi`.
/// This is an exact frame rotation about z, so orders are preserved.
PulseSequence rotate_phases(PulseSequence seq, double phi);

/// Reverse the pulse order and negate every angle. Under amplitude errors this
/// is the exact inverse for every epsilon.
std::vector<Pulse> inverse_pulses(const std::vector<Pulse>& pulses);

}  // namespace arbpulse
