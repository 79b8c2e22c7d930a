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

// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run every criterion
//   acceptance N [M ...]  run the listed criteria
// Exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arbpulse/analysis.hpp"
#include "arbpulse/io.hpp"
#include "arbpulse/series.hpp"
#include "arbpulse/sk_family.hpp"
#include "arbpulse/ts_family.hpp"
#include "oracles.hpp"

using namespace arbpulse;
using namespace arbpulse::testing;

namespace {

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return passed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool passed_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fixed(double x, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

const double kThetas[] = {kPi / 2, kPi};

void family_equivalences(Criterion& c) {
  const auto same = [](const PulseSequence& a, const PulseSequence& b) {
    if (a.pulses.size() != b.pulses.size()) return false;
    for (std::size_t i = 0; i < a.pulses.size(); ++i) {
      if (std::abs(a.pulses[i].phi - b.pulses[i].phi) > 1e-12 ||
          std::abs(a.pulses[i].theta - b.pulses[i].theta) > 1e-12) {
        return false;
      }
    }
    return true;
  };
  for (double theta : {kPi / 3, kPi / 2, kPi}) {
    const std::string at = " at theta=" + fixed(theta);
    c.check(same(wimperis(WimperisName::PB1, theta), make_passband(1, theta)), "PB1 != P2" + at);
    c.check(same(wimperis(WimperisName::BB1, theta), make_broadband(1, theta)), "BB1 != B2" + at);
    c.check(same(wimperis(WimperisName::NB1, theta), make_narrowband(1, theta)), "NB1 != N2" + at);
  }
}

void toggled_frame(Criterion& c) {
  double worst = 0;
  for (double theta : {kPi / 3, kPi / 2, kPi}) {
    for (const PulseSequence& seq :
         {wimperis(WimperisName::PB1, theta), wimperis(WimperisName::BB1, theta)}) {
      for (int i = 0; i <= 20; ++i) {
        const double eps = -0.5 + 0.05 * i;
        // True-rotation form R_phi(a eps) R_{-phi}(b eps) R_phi(a eps) P0.
        const double phi = seq.pulses[1].phi;
        const double a = seq.pulses[1].theta, b = seq.pulses[2].theta;
        const Mat2 r = planar_rotation(phi, a * eps) * planar_rotation(-phi, b * eps) *
                       planar_rotation(phi, a * eps) * planar_rotation(0, theta * (1 + eps));
        worst = std::max(worst,
                         sign_distance(execute_sequence(seq.pulses, Amplitude{eps}).matrix(), r));
      }
    }
  }
  c.note("max distance " + sci(worst));
  c.check(worst < 1e-12, "toggled-frame distance " + sci(worst));
}

void series_orders(Criterion& c) {
  for (double theta : kThetas) {
    std::vector<PulseSequence> seqs;
    for (int j = 1; j <= 3; ++j) seqs.push_back(make_passband(j, theta));
    for (int j = 1; j <= 3; ++j) seqs.push_back(make_broadband(j, theta));
    PulseSequence sk = make_passband(0, theta);
    for (int n = 1; n <= 6; ++n) {
      sk = sk_step(sk);
      seqs.push_back(sk);
    }
    PulseSequence sb = make_sb(5, theta);
    seqs.push_back(sb);
    seqs.push_back(sk_step(sb));
    for (const PulseSequence& s : seqs) {
      const OrderReport r =
          verify_order(s.pulses, ErrorKind::amplitude, s.target_unitary(), s.order);
      c.check(r.status == OrderReport::Status::exact,
              label_of(s) + " at theta=" + fixed(theta) + ":\n" + r.describe());
    }
  }
}

void slope_fits(Criterion& c) {
  const std::vector<std::pair<int, PulseSequence>> cases{
      {0, make_passband(0, kPi)}, {2, make_broadband(1, kPi)}, {4, make_broadband(2, kPi)},
      {2, make_sk(2, kPi)},       {3, make_sk(3, kPi)}};
  for (const auto& [n, seq] : cases) {
    const double slope = fit_order(seq, ErrorKind::amplitude).slope;
    c.note(label_of(seq) + " slope " + fixed(slope));
    c.check(std::abs(slope - (n + 1)) <= 0.15, label_of(seq) + " slope " + fixed(slope));
  }
}

void infidelity_doubling(Criterion& c) {
  const PulseSequence b2 = make_broadband(1, kPi);
  const double slope = fit_order(b2, ErrorKind::amplitude, {}, Metric::infidelity).slope;
  const double trace = fit_order(b2, ErrorKind::amplitude, {}, Metric::trace).slope;
  c.note("infidelity slope " + fixed(slope) + ", trace slope " + fixed(trace));
  c.check(std::abs(slope - 6.0) <= 0.3, "infidelity slope " + fixed(slope));
  c.check(std::abs(trace - 3.0) <= 0.15, "trace slope " + fixed(trace));
}

void block_contracts(Criterion& c) {
  double worst_rel = 0, worst_lower = 0, worst_lower_abs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (double a : {0.5, kPi, 6 * kPi}) {
      const AxisBlock x = unx(n, a, +1);
      for (const AxisBlock& b : {x, axis_shift(x, Axis::Y), axis_shift(x, Axis::Z)}) {
        const MatrixSeries s =
            sequence_series(b.pulses, ErrorKind::amplitude, static_cast<std::size_t>(n));
        const Mat2 expected = b.expected_coefficient();
        const double scale = std::max(1.0, expected.norm() / std::sqrt(2.0));
        double lower = 0;
        for (int k = 1; k < n; ++k) {
          lower = std::max(lower, s.coefficient_norm(static_cast<std::size_t>(k)));
        }
        const double rel = (s.coefficient(static_cast<std::size_t>(n)) - expected).norm() /
                           expected.norm();
        worst_rel = std::max(worst_rel, rel);
        worst_lower = std::max(worst_lower, lower / scale);
        worst_lower_abs = std::max(worst_lower_abs, lower);
        const std::string tag = std::string(to_string(b.axis)) + " n=" + std::to_string(n) +
                                " a=" + fixed(a);
        c.check(b.axis == x.axis || b.pulses.size() >= x.pulses.size(), tag + " pulse count");
        c.check(lower <= kDefaultDefectTol * scale, tag + " lower coefficients " + sci(lower));
        c.check(rel <= 1e-8, tag + " leading coefficient relative error " + sci(rel));
      }
    }
  }
  c.note("worst leading relative error " + sci(worst_rel) + ", worst lower coefficient " +
         sci(worst_lower_abs) + " (" + sci(worst_lower) + " of the block scale)");
}

void planar_conjugators(Criterion& c) {
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> g;
  double worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const double x = g(rng), y = g(rng), z = g(rng);
    const double n = std::sqrt(x * x + y * y + z * z);
    const Mat2 a = x * pauli_x() + y * pauli_y() + z * pauli_z();
    worst = std::max(worst, conjugator_residual(planar_conjugator({-x / n, -y / n, -z / n}), a));
  }
  c.note("max residual " + sci(worst));
  c.check(worst < 1e-10, "random residual " + sci(worst));
  const PlanarConjugator plus = planar_conjugator({1, 0, 0});
  const PlanarConjugator minus = planar_conjugator({-1, 0, 0});
  c.check(plus.identity(), "v = +x is not the identity");
  c.check(conjugator_residual(plus, -pauli_x()) < 1e-10, "v = +x residual");
  c.check(conjugator_residual(minus, pauli_x()) < 1e-10, "v = -x residual");
}

void detuning_identities(Criterion& c) {
  for (double theta : {kPi / 3, kPi / 2, kPi}) {
    const PulseSequence s = corpse(theta);
    const double c1 = sequence_series(s.pulses, ErrorKind::detuning, 1).coefficient_norm(1);
    c.check(c1 < 1e-9, "CORPSE delta^1 coefficient " + sci(c1) + " at theta=" + fixed(theta));
  }
  for (double theta : {kPi / 2, kPi}) {
    const AxisBlock b = detuning_u1z(theta);
    const Mat2 c1 = sequence_series(b.pulses, ErrorKind::detuning, 1).coefficient(1);
    const Mat2 claimed = -kI * theta * pauli_z();
    const double err = (c1 - claimed).norm();
    c.note("u1z(" + fixed(theta) + ") delta^1 coefficient = " +
           sci(pauli_decompose(c1).z.imag()) + " i Z, expected " + sci(-theta) + " i Z");
    c.check(err < 1e-9, "u1z(" + fixed(theta) + ") delta^1 coefficient off by " + sci(err));
  }
  const PulseSequence d = make_detuning_corrected(3, kPi / 2);
  const OrderReport r = verify_order(d.pulses, ErrorKind::detuning, d.target_unitary(), 3);
  c.check(r.status == OrderReport::Status::exact, "detuning-corrected order 3:\n" + r.describe());
}

void scaling(Criterion& c) {
  const ScalingResult r = scaling_study(Family::SK, 12, kPi / 2, 4);
  std::ostringstream counts;
  for (std::size_t i = 0; i < r.orders.size(); ++i) {
    counts << (i ? " " : "") << r.orders[i] << ":" << fixed(r.pulse_counts[i], 1);
  }
  c.note("SK 2pi-equivalents " + counts.str());
  c.note("fitted exponent " + fixed(r.fitted_exponent));
  c.check(r.fitted_exponent >= 2.7 && r.fitted_exponent <= 3.5,
          "exponent " + fixed(r.fitted_exponent));
  const std::size_t want[] = {4, 28, 892};
  for (int j = 1; j <= 3; ++j) {
    const std::size_t got = make_passband(j, kPi).pulse_count();
    c.check(got == want[j - 1], "P" + std::to_string(2 * j) + " count " + std::to_string(got));
  }
}

void qualitative(Criterion& c) {
  const Amplitude e{0.05};
  const double p0 = evaluate(make_passband(0, kPi), e, Metric::trace);
  const double b2 = evaluate(make_broadband(1, kPi), e, Metric::trace);
  const double b4 = evaluate(make_broadband(2, kPi), e, Metric::trace);
  c.note("E(B4)=" + sci(b4) + " E(B2)=" + sci(b2) + " E(P0)=" + sci(p0));
  c.check(b4 < b2 && b2 < p0, "monotone improvement");

  const PulseSequence n2 = make_narrowband(1, kPi);
  const PulseSequence bare = make_passband(0, kPi);
  for (double eps : make_grid(0.2, 0.5, 7, false)) {
    const double sn = evaluate(n2, Amplitude{eps}, Metric::signal);
    const double sp = evaluate(bare, Amplitude{eps}, Metric::signal);
    c.check(sn < sp, "signal(N2) >= signal(P0) at eps=" + fixed(eps));
  }

  const std::vector<PulseSequence> seqs{bare, make_passband(1, kPi), make_broadband(1, kPi),
                                        make_broadband(2, kPi), n2};
  std::vector<std::string> labels;
  for (const auto& s : seqs) labels.push_back(label_of(s));
  const auto grid = make_grid(1e-3, 0.5, 61, true);
  const std::string one = sweep_to_csv(sweep(seqs, labels, ErrorKind::amplitude, grid,
                                             Metric::trace, 1));
  for (unsigned jobs : {2u, 8u}) {
    const std::string many = sweep_to_csv(sweep(seqs, labels, ErrorKind::amplitude, grid,
                                                Metric::trace, jobs));
    c.check(many == one, "sweep CSV differs with " + std::to_string(jobs) + " jobs");
  }
}

void hygiene(Criterion& c) {
  const PulseSequence p6 = make_passband(3, kPi);
  const Unitary2 u = execute_sequence(p6.pulses, Amplitude{0.3});
  c.note(std::to_string(p6.pulse_count()) + " pulses: unitarity " + sci(u.unitarity_residual()) +
         ", determinant " + sci(u.determinant_residual()));
  c.check(u.unitarity_residual() < 1e-11, "unitarity residual");
  c.check(u.determinant_residual() < 1e-11, "determinant residual");
}

struct Entry {
  const char* name;
  double budget_seconds;
  std::function<void(Criterion&)> run;
};

const std::vector<Entry>& criteria() {
  static const std::vector<Entry> all{
      {"family equivalences", 1, family_equivalences},
      {"toggled-frame identity", 1, toggled_frame},
      {"series-oracle order checks", 300, series_orders},
      {"slope fits", 10, slope_fits},
      {"infidelity doubling", 5, infidelity_doubling},
      {"U-block contracts", 30, block_contracts},
      {"planar conjugator", 1, planar_conjugators},
      {"detuning identities", 30, detuning_identities},
      {"scaling", 300, scaling},
      {"qualitative reproduction", 30, qualitative},
      {"numerical hygiene", 1, hygiene},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) selected.push_back(i);
  }
  int failed = 0;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria().size())) {
      std::fprintf(stderr, "no criterion %d\n", id);
      return 2;
    }
    const Entry& e = criteria()[static_cast<std::size_t>(id - 1)];
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("exception: ") + ex.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.check(seconds <= e.budget_seconds,
            "runtime " + fixed(seconds, 2) + " s over budget " + fixed(e.budget_seconds, 0) + " s");
    std::printf("criterion %2d %-28s %s (%.2f s)\n", id, e.name, c.passed() ? "PASS" : "FAIL",
                seconds);
    for (const auto& n : c.notes()) std::printf("    %s\n", n.c_str());
    for (const auto& f : c.failures()) std::printf("    failed: %s\n", f.c_str());
    if (!c.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
