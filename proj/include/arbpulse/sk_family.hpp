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
#include <vector>

#include "arbpulse/options.hpp"
#include "arbpulse/sequence.hpp"
#include "arbpulse/series.hpp"

namespace arbpulse {

enum class Axis { X, Y, Z };

const char* to_string(Axis axis);

/// A pulse block whose series is I - i sign |a|^level P / 2 x^level + ...,
/// with P the Pauli matrix of `axis` and every lower coefficient cancelled.
struct AxisBlock {
  Axis axis = Axis::X;
  int level = 1;
  double amplitude = 0.0;
  int sign = +1;
  ErrorKind model = ErrorKind::amplitude;
  std::vector<Pulse> pulses;

  /// Coefficient expected at x^level.
  Mat2 expected_coefficient() const;
};

struct BlockCheck {
  double lower_residual = 0.0;  // max norm of coefficients 1..level-1
  /// Error of the level coefficient relative to max(1, its expected size).
  double leading_error = 0.0;
  double constant_residual = 0.0;
};

BlockCheck check_block(const AxisBlock& block);

/// First-order X block from two pulses of angle 2 pi k, k = ceil(|a| / 4 pi).
AxisBlock u1x(double a, int sign = +1);

/// Y blocks advance every phase by pi/2; Z blocks conjugate by quarter turns
/// about y. The input must be an X block.
AxisBlock axis_shift(const AxisBlock& block, Axis to);

/// Level-n X block from the group commutator of a level floor(n/2) Y block
/// and a level ceil(n/2) Z block.
AxisBlock unx(int n, double a, int sign = +1, const BuildOptions& options = {});

/// Single planar rotation R = ideal_rotation(phi_c, beta) taking the Bloch
/// direction v onto +x.
struct PlanarConjugator {
  double phi_c = 0.0;
  double beta = 0.0;

  bool identity() const { return beta == 0.0; }
  Pulse forward() const { return {phi_c, beta}; }
  Pulse backward() const { return {phi_c, -beta}; }
};

PlanarConjugator planar_conjugator(const std::array<double, 3>& v);

/// ||R (-A) R^dagger - ||A|| X|| for a conjugator built from -A.
double conjugator_residual(const PlanarConjugator& c, const Mat2& a_matrix);

/// Cancel the leading amplitude defect of `current` (which must verify order
/// current.order) and return the sequence at order current.order + 1.
PulseSequence sk_step(const PulseSequence& current, const BuildOptions& options = {});

PulseSequence make_sk(int n, double theta, const BuildOptions& options = {});

/// sk_step applied n - 4 times to B4.
PulseSequence make_sb(int n, double theta, const BuildOptions& options = {});

/// Detuning block M'_0(theta/2) M'_0(-theta) M'_0(theta/2), a first-order
/// rotation about z.
AxisBlock detuning_u1z(double theta);

/// Three-pulse detuning-compensated rotation about x; rejected unless its
/// first-order detuning coefficient cancels.
PulseSequence corpse(double theta, const BuildOptions& options = {});

/// CORPSE followed by detuning correction steps up to order n (2 <= n <= 3).
PulseSequence make_detuning_corrected(int n, double theta, const BuildOptions& options = {});

}  // namespace arbpulse
