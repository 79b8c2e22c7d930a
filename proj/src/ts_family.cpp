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

#include "arbpulse/ts_family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "arbpulse/errors.hpp"
#include "arbpulse/series.hpp"

namespace arbpulse {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= 2 * kPi)) {
    throw PreconditionError("theta must lie in (0, 2*pi], got " + std::to_string(theta));
  }
}

void check_level(int j, const BuildOptions& options) {
  if (j < 0) throw PreconditionError("family index must be non-negative");
  if (j > options.max_ts_level) {
    throw PreconditionError("S_n recursion level " + std::to_string(j) +
                            " exceeds the cap of " + std::to_string(options.max_ts_level));
  }
}

double solve_phase(double cosine) {
  if (!(std::abs(cosine) <= 1.0)) {
    std::ostringstream msg;
    msg << "phase unsolvable: arccos argument " << cosine << " outside [-1, 1]";
    throw ConstructionError(msg.str());
  }
  return std::acos(cosine);
}

std::int64_t nonnegative_mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

PulseSequence base_sequence(Family family, double theta) {
  PulseSequence seq;
  seq.family = family;
  seq.target = {0.0, theta};
  seq.pulses.push_back({0.0, theta});
  return seq;
}

void append(std::vector<Pulse>& pulses, const std::vector<STriplet>& triplets) {
  pulses.reserve(pulses.size() + 3 * triplets.size());
  for (const STriplet& t : triplets) {
    for (const Pulse& p : t.pulses()) pulses.push_back(p);
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

}  // namespace

std::array<Pulse, 3> STriplet::pulses() const {
  const double scale = static_cast<double>(m) * kPi;
  return {Pulse{phi1, scale}, Pulse{phi2, 2 * scale}, Pulse{phi1, scale}};
}

std::vector<Pulse> s1(double phi1, double phi2, std::int64_t m) {
  const auto p = STriplet{phi1, phi2, m}.pulses();
  return {p.begin(), p.end()};
}

std::vector<STriplet> sn_triplets(int n, double phi1, double phi2, std::int64_t m,
                                  const BuildOptions& options) {
  if (n < 1) throw PreconditionError("S_n requires n >= 1");
  check_level(n, options);
  if (n == 1) return {STriplet{phi1, phi2, m}};
  const std::vector<STriplet> outer = sn_triplets(n - 1, phi1, phi2, m, options);
  const std::vector<STriplet> middle = sn_triplets(n - 1, phi1, phi2, -2 * m, options);
  const std::uint64_t repeats = std::uint64_t{1} << (2 * (n - 1));
  std::vector<STriplet> out;
  out.reserve(2 * repeats * outer.size() + middle.size());
  for (std::uint64_t r = 0; r < repeats; ++r) out.insert(out.end(), outer.begin(), outer.end());
  out.insert(out.end(), middle.begin(), middle.end());
  for (std::uint64_t r = 0; r < repeats; ++r) out.insert(out.end(), outer.begin(), outer.end());
  return out;
}

std::vector<Pulse> sn(int n, double phi1, double phi2, std::int64_t m,
                      const BuildOptions& options) {
  std::vector<Pulse> out;
  append(out, sn_triplets(n, phi1, phi2, m, options));
  return out;
}

std::uint64_t sn_pulse_count(int n) {
  std::uint64_t count = 3;
  for (int k = 2; k <= n; ++k) count *= 2 * (std::uint64_t{1} << (2 * (k - 1))) + 1;
  return count;
}

double suzuki_factor(int j) {
  double f = 1.0;
  for (int k = 2; k <= j; ++k) f *= std::ldexp(1.0, 2 * k - 1) - 2.0;
  return f;
}

double passband_phase(int j, double theta) {
  return solve_phase(-theta / (8 * kPi * suzuki_factor(j)));
}

double broadband_phase(int j, double theta) {
  return solve_phase(-theta / (4 * kPi * suzuki_factor(j)));
}

PulseSequence make_passband(int j, double theta, const BuildOptions& options) {
  check_theta(theta);
  check_level(j, options);
  PulseSequence seq = base_sequence(Family::P, theta);
  seq.order = 2 * j;
  if (j == 0) return seq;
  const double phi = passband_phase(j, theta);
  append(seq.pulses, sn_triplets(j, phi, -phi, 2, options));
  require_order(seq, options);
  return seq;
}

PulseSequence make_broadband(int j, double theta, const BuildOptions& options) {
  check_theta(theta);
  check_level(j, options);
  PulseSequence seq = base_sequence(Family::B, theta);
  seq.order = 2 * j;
  if (j == 0) return seq;
  const double phi_b = broadband_phase(j, theta);
  // The passband tree only supplies the scales m; the phases are replaced.
  std::vector<STriplet> triplets = sn_triplets(j, 0.0, 0.0, 2, options);
  for (STriplet& t : triplets) {
    const std::int64_t half = t.m / 2;
    t = STriplet{phi_b, -phi_b + 4 * phi_b * static_cast<double>(nonnegative_mod2(half)),
                 half};
  }
  append(seq.pulses, triplets);
  require_order(seq, options);
  return seq;
}

PulseSequence make_narrowband(int j, double theta, const BuildOptions& options) {
  check_theta(theta);
  check_level(j, options);
  PulseSequence seq = base_sequence(Family::N, theta);
  seq.order = 0;
  seq.narrowband = true;
  if (j == 0) return seq;
  const double phi = passband_phase(j, theta);
  std::vector<Pulse> corrective = sn(j, phi, -phi, 2, options);
  for (Pulse& p : corrective) p.theta /= 2;
  seq.pulses.insert(seq.pulses.end(), corrective.begin(), corrective.end());
  const double mismatch =
      distance(execute_sequence(seq.pulses, Amplitude{0.0}), seq.target_unitary());
  if (mismatch > 1e-12) {
    throw ConstructionError("narrowband sequence misses its target at zero error");
  }
  require_order(seq, options);
  return seq;
}

PulseSequence wimperis(WimperisName name, double theta, const BuildOptions& options) {
  switch (name) {
    case WimperisName::PB1: return make_passband(1, theta, options);
    case WimperisName::BB1: return make_broadband(1, theta, options);
    case WimperisName::NB1: return make_narrowband(1, theta, options);
  }
  throw PreconditionError("unknown Wimperis sequence");
}

}  // namespace arbpulse
