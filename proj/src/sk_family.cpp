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

#include "arbpulse/sk_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "arbpulse/errors.hpp"
#include "arbpulse/ts_family.hpp"

namespace arbpulse {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConjugatorTol = 1e-10;
constexpr double kBlockRelTol = 1e-8;
constexpr int kRefinementPasses = 4;
constexpr double kRoundingScale = 1e-6;

const Mat2& axis_matrix(Axis axis) {
  switch (axis) {
    case Axis::X: return pauli_x();
    case Axis::Y: return pauli_y();
    case Axis::Z: return pauli_z();
  }
  return pauli_x();
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= 2 * kPi)) {
    throw PreconditionError("theta must lie in (0, 2*pi], got " + std::to_string(theta));
  }
}

void require_block(const AxisBlock& block, double tol) {
  const BlockCheck c = check_block(block);
  const double scale = std::max(1.0, std::pow(block.amplitude, block.level));
  if (c.constant_residual > 1e-12 || c.lower_residual > tol * scale ||
      c.leading_error > kBlockRelTol) {
    std::ostringstream msg;
    msg << "level " << block.level << " " << to_string(block.axis)
        << " block failed its contract: lower residual " << c.lower_residual
        << ", leading relative error " << c.leading_error;
    throw ConstructionError(msg.str());
  }
}

void require_order(const PulseSequence& seq, const BuildOptions& options) {
  const OrderReport report = verify_order(seq.pulses, seq.model, seq.target_unitary(),
                                          seq.order, options.tol_defect);
  if (!report.passed()) {
    throw ConstructionError(std::string(to_string(seq.family)) + std::to_string(seq.order) +
                            " failed order verification\n" + report.describe());
  }
}

void append(std::vector<Pulse>& out, const std::vector<Pulse>& pulses) {
  out.insert(out.end(), pulses.begin(), pulses.end());
}

std::array<double, 3> normalized(const std::array<double, 3>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(n > 0.0)) throw PreconditionError("conjugator direction must be nonzero");
  return {v[0] / n, v[1] / n, v[2] / n};
}

}  // namespace

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

Mat2 AxisBlock::expected_coefficient() const {
  const double mag = sign * std::pow(std::abs(amplitude), level) / 2;
  return Complex(0.0, -mag) * axis_matrix(axis);
}

BlockCheck check_block(const AxisBlock& block) {
  BlockCheck out;
  const MatrixSeries s =
      sequence_series(block.pulses, block.model, static_cast<std::size_t>(block.level));
  const Mat2 c0 = s.coefficient(0);
  out.constant_residual = distance(Unitary2::from_matrix(c0), Unitary2());
  for (int k = 1; k < block.level; ++k) {
    out.lower_residual = std::max(out.lower_residual, s.coefficient_norm(k));
  }
  // C_0 is +-I, so C_k C_0^dagger strips the sign.
  const Mat2 leading = s.coefficient(block.level) * c0.adjoint();
  const Mat2 expected = block.expected_coefficient();
  out.leading_error = (leading - expected).norm() / std::max(1.0, expected.norm());
  return out;
}

AxisBlock u1x(double a, int sign) {
  AxisBlock block;
  block.amplitude = std::abs(a);
  block.sign = sign >= 0 ? +1 : -1;
  if (a == 0.0) return block;
  const double k = std::ceil(block.amplitude / (4 * kPi));
  const double phi = std::acos(block.sign * block.amplitude / (4 * kPi * k));
  block.pulses = {Pulse{-phi, 2 * kPi * k}, Pulse{phi, 2 * kPi * k}};
  require_block(block, kDefaultDefectTol);
  return block;
}

AxisBlock axis_shift(const AxisBlock& block, Axis to) {
  if (block.axis != Axis::X) throw PreconditionError("axis_shift expects an X block");
  AxisBlock out = block;
  out.axis = to;
  switch (to) {
    case Axis::X: return out;
    case Axis::Y:
      for (Pulse& p : out.pulses) p.phi += kPi / 2;
      break;
    case Axis::Z:
      // M_90(-pi/2) U M_90(pi/2); the subscript 90 is a phase in degrees.
      out.pulses.clear();
      out.pulses.reserve(block.pulses.size() + 2);
      out.pulses.push_back({kPi / 2, kPi / 2});
      append(out.pulses, block.pulses);
      out.pulses.push_back({kPi / 2, -kPi / 2});
      break;
  }
  if (!out.pulses.empty()) require_block(out, kDefaultDefectTol);
  return out;
}

AxisBlock unx(int n, double a, int sign, const BuildOptions& options) {
  if (n < 1) throw PreconditionError("unx requires n >= 1");
  if (n > options.max_block_level) {
    throw PreconditionError("block level " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(options.max_block_level));
  }
  if (n == 1) return u1x(a, sign);
  const int l = n / 2;
  const int m = n - l;
  const std::vector<Pulse> y = axis_shift(unx(l, a, +1, options), Axis::Y).pulses;
  const std::vector<Pulse> z = axis_shift(unx(m, a, +1, options), Axis::Z).pulses;

  AxisBlock block;
  block.level = n;
  block.amplitude = std::abs(a);
  block.sign = sign >= 0 ? +1 : -1;
  if (a == 0.0) return block;
  // Matrix order Y Z Y^-1 Z^-1, so Z^-1 executes first.
  append(block.pulses, inverse_pulses(z));
  append(block.pulses, inverse_pulses(y));
  append(block.pulses, z);
  append(block.pulses, y);
  if (block.sign < 0) block.pulses = inverse_pulses(block.pulses);
  require_block(block, options.tol_defect);
  return block;
}

PlanarConjugator planar_conjugator(const std::array<double, 3>& direction) {
  const auto v = normalized(direction);
  if (v[0] == 1.0) return {};
  PlanarConjugator c;
  c.phi_c = std::atan2(1.0 - v[0], v[1]);
  const double nx = std::cos(c.phi_c);
  const double ny = std::sin(c.phi_c);
  const double nv = nx * v[0] + ny * v[1];
  const std::array<double, 3> vp{v[0] - nv * nx, v[1] - nv * ny, v[2]};
  const std::array<double, 3> xp{1.0 - nx * nx, -nx * ny, 0.0};
  // n . (vp x xp); n has no z component.
  const double cross = nx * (vp[1] * xp[2] - vp[2] * xp[1]) + ny * (vp[2] * xp[0] - vp[0] * xp[2]);
  const double dot = vp[0] * xp[0] + vp[1] * xp[1] + vp[2] * xp[2];
  c.beta = std::atan2(cross + 0.0, dot);
  return c;
}

double conjugator_residual(const PlanarConjugator& c, const Mat2& a_matrix) {
  const Mat2 r = ideal_rotation(c.forward()).matrix();
  const double norm = pauli_decompose(a_matrix).norm3();
  return (r * (-a_matrix) * r.adjoint() - norm * pauli_x()).norm();
}

namespace {

// Appends R^-1 U_nX R cancelling the order-n defect of `seq`.
void append_correction(PulseSequence& seq, const DefectTerm& defect, int n,
                       const BuildOptions& options) {
  const auto b = defect.pauli.bloch();
  const double norm = defect.norm;
  const PlanarConjugator plus = planar_conjugator({-b[0] / norm, -b[1] / norm, -b[2] / norm});
  const PlanarConjugator minus = planar_conjugator({b[0] / norm, b[1] / norm, b[2] / norm});
  const bool use_plus = std::abs(plus.beta) <= std::abs(minus.beta);
  const PlanarConjugator conj = use_plus ? plus : minus;
  const double residual =
      conjugator_residual(conj, use_plus ? defect.a_matrix : Mat2(-defect.a_matrix));
  if (residual > kConjugatorTol * std::max(1.0, norm)) {
    throw ConstructionError("planar conjugator residual " + std::to_string(residual));
  }
  const AxisBlock block = unx(n, std::pow(norm, 1.0 / n), use_plus ? +1 : -1, options);
  if (!conj.identity()) seq.pulses.push_back(conj.forward());
  append(seq.pulses, block.pulses);
  if (!conj.identity()) seq.pulses.push_back(conj.backward());
}

DefectTerm defect_of(const PulseSequence& seq, int degree, double tol) {
  const MatrixSeries series =
      sequence_series(seq.pulses, seq.model, static_cast<std::size_t>(degree));
  return leading_defect(series, seq.target_unitary(), tol);
}

}  // namespace

PulseSequence sk_step(const PulseSequence& current, const BuildOptions& options) {
  if (current.model != ErrorKind::amplitude) {
    throw PreconditionError("sk_step corrects amplitude errors only");
  }
  const int n = current.order + 1;
  DefectTerm defect = defect_of(current, n, options.tol_defect);
  PulseSequence out = current;
  out.order = n;
  if (out.family == Family::P) out.family = Family::SK;
  if (out.family == Family::B) out.family = Family::SB;
  if (defect.defect_free()) {
    out.free_orders.push_back(n);
    return out;
  }
  if (defect.order < n) {
    throw ConstructionError("sequence does not verify order " + std::to_string(current.order) +
                            ": defect at order " + std::to_string(defect.order));
  }
  append_correction(out, defect, n, options);
  // Pulse angles are doubles, so 2*pi*k and the solved phases are rounded.
  // A large correction then leaves rounding-sized defects at order n and just
  // below it; each is cancelled by a small block of its own level.
  const double floor = kRoundingScale * std::max(1.0, defect.norm);
  for (int pass = 0; pass < kRefinementPasses; ++pass) {
    const DefectTerm rest = defect_of(out, n, options.tol_defect);
    if (rest.defect_free() || rest.order > n) break;
    if (rest.norm > floor) {
      throw ConstructionError("correction at order " + std::to_string(n) +
                              " left a defect of size " + std::to_string(rest.norm) +
                              " at order " + std::to_string(rest.order));
    }
    append_correction(out, rest, rest.order, options);
  }
  require_order(out, options);
  return out;
}

PulseSequence make_sk(int n, double theta, const BuildOptions& options) {
  check_theta(theta);
  if (n < 0) throw PreconditionError("order must be non-negative");
  PulseSequence seq;
  seq.family = Family::SK;
  seq.target = {0.0, theta};
  seq.pulses = {Pulse{0.0, theta}};
  for (int k = 0; k < n; ++k) seq = sk_step(seq, options);
  return seq;
}

PulseSequence make_sb(int n, double theta, const BuildOptions& options) {
  if (n < 5) throw PreconditionError("SB sequences are defined for order n >= 5");
  PulseSequence seq = make_broadband(2, theta, options);
  seq.family = Family::SB;
  while (seq.order < n) seq = sk_step(seq, options);
  return seq;
}

AxisBlock detuning_u1z(double theta) {
  if (theta == 0.0) throw PreconditionError("detuning_u1z requires theta != 0");
  AxisBlock block;
  block.axis = Axis::Z;
  block.level = 1;
  block.model = ErrorKind::detuning;
  const double s = std::sin(theta / 2);
  block.amplitude = 4 * std::abs(s);
  block.sign = s >= 0 ? +1 : -1;
  block.pulses = {Pulse{0.0, theta / 2}, Pulse{0.0, -theta}, Pulse{0.0, theta / 2}};
  return block;
}

namespace {

std::vector<Pulse> rotated(std::vector<Pulse> pulses, double phi) {
  for (Pulse& p : pulses) p.phi += phi;
  return pulses;
}

// [(phi, alpha), (phi, -alpha)]: first-order planar generator, no second order.
std::vector<Pulse> kick(double phi) { return {Pulse{phi, kPi}, Pulse{phi, -kPi}}; }

std::vector<Pulse> u1z_pulses(double theta) { return detuning_u1z(theta).pulses; }

// Group commutator e^{-iA} e^{-iB} e^{iA} e^{iB} of two blocks given with
// their phase-flipped partners; the partner's execution comes first.
std::vector<Pulse> commutator(const std::vector<Pulse>& a, const std::vector<Pulse>& b,
                              const std::vector<Pulse>& a_partner,
                              const std::vector<Pulse>& b_partner) {
  std::vector<Pulse> out;
  append(out, b_partner);
  append(out, a_partner);
  append(out, b);
  append(out, a);
  return out;
}

std::array<double, 3> order_generator(const std::vector<Pulse>& pulses, int order) {
  const MatrixSeries s =
      sequence_series(pulses, ErrorKind::detuning, static_cast<std::size_t>(order));
  const Mat2 g = Complex(0.0, 1.0) * s.coefficient(order) * s.coefficient(0).adjoint();
  return pauli_decompose(g).bloch();
}

// Second-order detuning block with generator t (as a Pauli 3-vector).
std::vector<Pulse> detuning_block2(const std::array<double, 3>& t, double tol) {
  std::vector<Pulse> out;
  const double rho = std::hypot(t[0], t[1]);
  if (rho > tol) {
    // A 2*pi*k pulse contributes (pi k / 2) sigma_phi at second order.
    const double psi = std::atan2(t[1], t[0]);
    const double k = std::ceil(rho / kPi);
    const double phi = std::acos(rho / (kPi * k));
    out.push_back({psi + phi, 2 * kPi * k});
    out.push_back({psi - phi, 2 * kPi * k});
  }
  if (std::abs(t[2]) > tol) {
    // [kick(0), kick(d)] contributes 8 sin(d) Z.
    const double reps = std::ceil(std::abs(t[2]) / 8);
    const double d = std::asin(t[2] / (8 * reps));
    const auto unit = commutator(kick(0.0), kick(d), kick(kPi), kick(d + kPi));
    for (int r = 0; r < static_cast<int>(reps); ++r) append(out, unit);
  }
  return out;
}

// Third-order detuning block with generator t.
std::vector<Pulse> detuning_block3(const std::array<double, 3>& t, double tol) {
  std::vector<Pulse> out;
  const double rho = std::hypot(t[0], t[1]);
  if (rho > tol) {
    // [u1z(t'), 2*pi pulse] contributes 2 pi sin(t'/2) along +y, plus z.
    const double reps = std::ceil(rho / (2 * kPi));
    const double tp = 2 * std::asin(rho / (2 * kPi * reps));
    const std::vector<Pulse> two_pi{Pulse{0.0, 2 * kPi}};
    const std::vector<Pulse> two_pi_partner{Pulse{kPi, 2 * kPi}};
    const auto unit = rotated(
        commutator(u1z_pulses(tp), two_pi, u1z_pulses(4 * kPi - tp), two_pi_partner),
        std::atan2(t[1], t[0]) - kPi / 2);
    for (int r = 0; r < static_cast<int>(reps); ++r) append(out, unit);
  }
  const double z = t[2] - (out.empty() ? 0.0 : order_generator(out, 3)[2]);
  if (std::abs(z) > tol) {
    // [kick(0), 2*pi pulse at psi] contributes -2 pi cos(psi) Z.
    const double reps = std::ceil(std::abs(z) / (2 * kPi));
    const double psi = std::acos(-z / (2 * kPi * reps));
    const auto unit = commutator(kick(0.0), {Pulse{psi, 2 * kPi}}, kick(kPi),
                                 {Pulse{psi + kPi, 2 * kPi}});
    for (int r = 0; r < static_cast<int>(reps); ++r) append(out, unit);
  }
  return out;
}

PulseSequence detuning_step(const PulseSequence& current, const BuildOptions& options) {
  const int n = current.order + 1;
  const MatrixSeries series =
      sequence_series(current.pulses, ErrorKind::detuning, static_cast<std::size_t>(n));
  const DefectTerm defect = leading_defect(series, current.target_unitary(), options.tol_defect);
  PulseSequence out = current;
  out.order = n;
  if (defect.defect_free()) {
    out.free_orders.push_back(n);
    return out;
  }
  if (defect.order < n) {
    throw ConstructionError("sequence does not verify detuning order " +
                            std::to_string(current.order));
  }
  const auto g = pauli_decompose(defect.generator).bloch();
  const std::array<double, 3> t{-g[0], -g[1], -g[2]};
  const double tol = options.tol_defect / 4;
  append(out.pulses, n == 2 ? detuning_block2(t, tol) : detuning_block3(t, tol));
  require_order(out, options);
  return out;
}

}  // namespace

PulseSequence corpse(double theta, const BuildOptions& options) {
  check_theta(theta);
  const double k = std::asin(std::sin(theta / 2) / 2);
  PulseSequence seq;
  seq.family = Family::CORPSE;
  seq.model = ErrorKind::detuning;
  seq.order = 1;
  seq.target = {0.0, theta};
  seq.pulses = {Pulse{0.0, 2 * kPi + theta / 2 - k}, Pulse{kPi, 2 * kPi - 2 * k},
                Pulse{0.0, theta / 2 - k}};
  const MatrixSeries s = sequence_series(seq.pulses, ErrorKind::detuning, 1);
  if (distance(Unitary2::from_matrix(s.coefficient(0)), seq.target_unitary()) > 1e-12 ||
      s.coefficient_norm(1) > options.tol_defect) {
    throw ConstructionError("base sequence not first-order compensating");
  }
  require_order(seq, options);
  return seq;
}

PulseSequence make_detuning_corrected(int n, double theta, const BuildOptions& options) {
  if (n < 2) throw PreconditionError("detuning correction requires n >= 2");
  if (n > 3) {
    throw ConstructionError("detuning correction is implemented through order 3, got " +
                            std::to_string(n));
  }
  PulseSequence seq = corpse(theta, options);
  seq.family = Family::SKD;
  while (seq.order < n) seq = detuning_step(seq, options);
  return seq;
}

}  // namespace arbpulse
