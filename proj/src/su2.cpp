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

#include "arbpulse/su2.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

namespace arbpulse {

namespace {

constexpr double kDegenerateTheta = 1e-300;
constexpr Complex kI{0.0, 1.0};

Mat2 make_mat(Complex a, Complex b, Complex c, Complex d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

}  // namespace

ErrorKind kind_of(const ErrorModel& model) {
  return std::holds_alternative<Amplitude>(model) ? ErrorKind::amplitude
                                                  : ErrorKind::detuning;
}

double value_of(const ErrorModel& model) {
  if (const auto* a = std::get_if<Amplitude>(&model)) return a->epsilon;
  return std::get<Detuning>(model).delta;
}

ErrorModel make_error(ErrorKind kind, double value) {
  if (kind == ErrorKind::amplitude) return Amplitude{value};
  return Detuning{value};
}

const char* to_string(ErrorKind kind) {
  return kind == ErrorKind::amplitude ? "amplitude" : "detuning";
}

const Mat2& pauli_i() {
  static const Mat2 m = Mat2::Identity();
  return m;
}

const Mat2& pauli_x() {
  static const Mat2 m = make_mat(0.0, 1.0, 1.0, 0.0);
  return m;
}

const Mat2& pauli_y() {
  static const Mat2 m = make_mat(0.0, -kI, kI, 0.0);
  return m;
}

const Mat2& pauli_z() {
  static const Mat2 m = make_mat(1.0, 0.0, 0.0, -1.0);
  return m;
}

Mat2 sigma_phi(double phi) {
  return std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y();
}

Unitary2::Unitary2() : m_(Mat2::Identity()) {}

Unitary2::Unitary2(const Mat2& m, Trusted) : m_(m) {}

Mat2 Unitary2::project(const Mat2& m) {
  Complex a = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
  Complex b = 0.5 * (m(0, 1) - std::conj(m(1, 0)));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  return make_mat(a, b, -std::conj(b), std::conj(a));
}

Unitary2 Unitary2::from_matrix(const Mat2& m) {
  Mat2 u = m / std::sqrt(m.determinant());
  // Pick the square-root branch deterministically.
  for (int k = 0; k < 4; ++k) {
    const Complex e = u(k / 2, k % 2);
    if (std::abs(e) > 1e-15) {
      const double arg = std::arg(e);
      if (arg <= -std::numbers::pi / 2 || arg > std::numbers::pi / 2) u = -u;
      break;
    }
  }
  return Unitary2(project(u), Trusted{});
}

Unitary2 Unitary2::adjoint() const {
  return Unitary2(m_.adjoint(), Trusted{});
}

Unitary2 Unitary2::operator-() const { return Unitary2(-m_, Trusted{}); }

Unitary2 operator*(const Unitary2& lhs, const Unitary2& rhs) {
  return Unitary2(Unitary2::project(lhs.m_ * rhs.m_), Unitary2::Trusted{});
}

double Unitary2::unitarity_residual() const {
  return (m_.adjoint() * m_ - Mat2::Identity()).cwiseAbs().maxCoeff();
}

double Unitary2::determinant_residual() const {
  return std::abs(m_.determinant() - 1.0);
}

Mat2 PauliVector::matrix() const {
  return i * pauli_i() + x * pauli_x() + y * pauli_y() + z * pauli_z();
}

std::array<double, 3> PauliVector::bloch() const {
  return {x.real(), y.real(), z.real()};
}

double PauliVector::norm3() const {
  return std::hypot(x.real(), y.real(), z.real());
}

Unitary2 ideal_rotation(const Pulse& p) {
  const double c = std::cos(p.theta / 2);
  const double s = std::sin(p.theta / 2);
  const Complex off = -kI * s * std::polar(1.0, -p.phi);
  // cos(theta/2) I - i sin(theta/2) sigma_phi
  return Unitary2(make_mat(c, off, -kI * s * std::polar(1.0, p.phi), c),
                  Unitary2::Trusted{});
}

Unitary2 imperfect_rotation(const Pulse& p, const ErrorModel& model) {
  if (std::abs(p.theta) < kDegenerateTheta) return Unitary2();
  if (const auto* a = std::get_if<Amplitude>(&model)) {
    return ideal_rotation({p.phi, p.theta * (1.0 + a->epsilon)});
  }
  const double delta = std::get<Detuning>(model).delta;
  const double half = p.theta / 2;
  const double vx = half * std::cos(p.phi);
  const double vy = half * std::sin(p.phi);
  const double vz = std::abs(half) * delta;
  const double r = std::hypot(vx, vy, vz);
  const double c = std::cos(r);
  const double sinc = std::sin(r) / r;
  // cos r I - i (sin r / r) (v . sigma)
  const Complex d00 = Complex(c, -sinc * vz);
  const Complex d11 = Complex(c, sinc * vz);
  const Complex d01 = -kI * sinc * Complex(vx, -vy);
  const Complex d10 = -kI * sinc * Complex(vx, vy);
  return Unitary2(Unitary2::project(make_mat(d00, d01, d10, d11)),
                  Unitary2::Trusted{});
}

Unitary2 execute_sequence(std::span<const Pulse> pulses, const ErrorModel& model) {
  Unitary2 u;
  for (const Pulse& p : pulses) u = imperfect_rotation(p, model) * u;
  return u;
}

double distance(const Unitary2& u, const Unitary2& v) {
  const double minus = (u.matrix() - v.matrix()).norm();
  const double plus = (u.matrix() + v.matrix()).norm();
  return std::min(minus, plus);
}

double fidelity(const Unitary2& u, const Unitary2& v) {
  return std::abs((v.matrix().adjoint() * u.matrix()).trace()) / 2;
}

double infidelity(const Unitary2& u, const Unitary2& v) {
  const Unitary2 w = v.adjoint() * u;
  const Complex a = w(0, 0);
  const Complex b = w(0, 1);
  return (a.imag() * a.imag() + std::norm(b)) / (1.0 + std::abs(a.real()));
}

PauliVector pauli_decompose(const Mat2& a) {
  return {(pauli_i().adjoint() * a).trace() / 2.0,
          (pauli_x().adjoint() * a).trace() / 2.0,
          (pauli_y().adjoint() * a).trace() / 2.0,
          (pauli_z().adjoint() * a).trace() / 2.0};
}

}  // namespace arbpulse
