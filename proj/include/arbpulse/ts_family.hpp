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

#include <array>
#include <cstdint>
#include <vector>

#include "arbpulse/options.hpp"
#include "arbpulse/sequence.hpp"

namespace arbpulse {

/// S_1(phi1, phi2, m) = M_phi1(m pi) M_phi2(2 m pi) M_phi1(m pi).
struct STriplet {
  double phi1 = 0.0;
  double phi2 = 0.0;
  std::int64_t m = 1;

  std::array<Pulse, 3> pulses() const;
};

std::vector<Pulse> s1(double phi1, double phi2, std::int64_t m);

/// The S_n recursion as a flat list of S_1 elements:
/// S_n(m) = S_{n-1}(m)^{4^{n-1}} S_{n-1}(-2m) S_{n-1}(m)^{4^{n-1}}.
std::vector<STriplet> sn_triplets(int n, double phi1, double phi2, std::int64_t m,
                                  const BuildOptions& options = {});

std::vector<Pulse> sn(int n, double phi1, double phi2, std::int64_t m,
                      const BuildOptions& options = {});

/// L_n = (2 * 4^{n-1} + 1) L_{n-1}, L_1 = 3.
std::uint64_t sn_pulse_count(int n);

/// f_1 = 1, f_j = (2^{2j-1} - 2) f_{j-1}.
double suzuki_factor(int j);

/// arccos(-theta / (8 pi f_j)).
double passband_phase(int j, double theta);
/// arccos(-theta / (4 pi f_j)), i.e. cos(phi_Bj) = 2 cos(phi_j).
double broadband_phase(int j, double theta);

/// P_{2j}: the base pulse (0, theta) followed by S_j(phi_j, -phi_j, 2).
PulseSequence make_passband(int j, double theta, const BuildOptions& options = {});

/// B_{2j}: P_{2j} with every S_1(phi_j, -phi_j, m) replaced by
/// S_1(phi_Bj, -phi_Bj + 4 phi_Bj ((m/2) mod 2), m/2).
PulseSequence make_broadband(int j, double theta, const BuildOptions& options = {});

/// N_{2j}: P_{2j} with every corrective angle halved.
PulseSequence make_narrowband(int j, double theta, const BuildOptions& options = {});

enum class WimperisName { PB1, BB1, NB1 };

PulseSequence wimperis(WimperisName name, double theta, const BuildOptions& options = {});

}  // namespace arbpulse
