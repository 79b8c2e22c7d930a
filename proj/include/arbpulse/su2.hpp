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
#include <complex>
#include <span>
#include <variant>

#include <Eigen/Core>

namespace arbpulse {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// One rotation instruction: rotate by `theta` about the in-plane axis at
/// azimuth `phi`. Both in radians; `theta` may be negative or exceed 2*pi.
struct Pulse {
  double phi = 0.0;
  double theta = 0.0;

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

/// Fractional over-rotation: every angle is scaled by (1 + epsilon).
struct Amplitude {
  double epsilon = 0.0;
};

/// Off-resonance: |theta/2| * delta * Z is added to each pulse generator.
struct Detuning {
  double delta = 0.0;
};

using ErrorModel = std::variant<Amplitude, Detuning>;

/// Which error parameter a series expansion is taken in.
enum class ErrorKind { amplitude, detuning };

ErrorKind kind_of(const ErrorModel& model);
double value_of(const ErrorModel& model);
ErrorModel make_error(ErrorKind kind, double value);

const char* to_string(ErrorKind kind);

/// A 2x2 unitary with unit determinant.
///
/// Rotations are built directly in closed SU(2) form and keep their sign, so
/// R_0(2*pi) = -I. Arbitrary matrices entering through `from_matrix` are
/// divided by a square root of their determinant, picking the branch that puts
/// the phase of the first nonzero entry (row-major) in (-pi/2, pi/2].
/// Products are re-projected onto the SU(2) form [[a, b], [-b*, a*]] so that
/// long chains do not drift off the group.
class Unitary2 {
 public:
  Unitary2();

  static Unitary2 from_matrix(const Mat2& m);

  const Mat2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  Unitary2 adjoint() const;
  Unitary2 operator-() const;
  friend Unitary2 operator*(const Unitary2& lhs, const Unitary2& rhs);

  /// Largest entry of |U^dagger U - I|.
  double unitarity_residual() const;
  /// |det U - 1|.
  double determinant_residual() const;

 private:
  struct Trusted {};
  Unitary2(const Mat2& m, Trusted);
  static Mat2 project(const Mat2& m);

  friend Unitary2 ideal_rotation(const Pulse& p);
  friend Unitary2 imperfect_rotation(const Pulse& p, const ErrorModel& model);

  Mat2 m_;
};

/// A = i*I + x*X + y*Y + z*Z with complex coefficients.
struct PauliVector {
  Complex i{};
  Complex x{};
  Complex y{};
  Complex z{};

  Mat2 matrix() const;
  /// Real parts of (x, y, z).
  std::array<double, 3> bloch() const;
  /// Euclidean length of the real (x, y, z) part.
  double norm3() const;
};

const Mat2& pauli_i();
const Mat2& pauli_x();
const Mat2& pauli_y();
const Mat2& pauli_z();

/// cos(phi) X + sin(phi) Y.
Mat2 sigma_phi(double phi);

/// exp(-i theta/2 sigma_phi).
Unitary2 ideal_rotation(const Pulse& p);

/// Amplitude: ideal_rotation with theta scaled by (1 + epsilon).
/// Detuning: exp(-i(theta/2 sigma_phi + |theta/2| delta Z)).
/// Pulses with |theta| < 1e-300 are the identity under every model.
Unitary2 imperfect_rotation(const Pulse& p, const ErrorModel& model);

/// Product of imperfect rotations; the first pulse acts first (rightmost).
Unitary2 execute_sequence(std::span<const Pulse> pulses, const ErrorModel& model);

/// min over s in {+1, -1} of the Frobenius norm ||u - s v||.
double distance(const Unitary2& u, const Unitary2& v);

/// |trace(v^dagger u)| / 2.
double fidelity(const Unitary2& u, const Unitary2& v);

/// 1 - fidelity(u, v), evaluated without cancellation near u = +-v.
double infidelity(const Unitary2& u, const Unitary2& v);

/// a_P = trace(P^dagger a) / 2.
PauliVector pauli_decompose(const Mat2& a);

}  // namespace arbpulse
