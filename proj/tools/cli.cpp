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

#include "arbpulse/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arbpulse/analysis.hpp"
#include "arbpulse/config.hpp"
#include "arbpulse/io.hpp"
#include "arbpulse/series.hpp"
#include "arbpulse/sk_family.hpp"
#include "arbpulse/ts_family.hpp"

namespace arbpulse::cli {

namespace {

constexpr double kPi = std::numbers::pi;

/// Bad flag combination; exits with kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

PulseSequence build(const std::string& family, std::optional<int> order, double theta,
                    const BuildOptions& options) {
  const auto need_order = [&]() {
    if (!order) throw UsageError("--order is required for family " + family);
    if (*order < 0) throw UsageError("--order must be non-negative");
    return *order;
  };
  const auto even_order = [&]() {
    const int n = need_order();
    if (n % 2 != 0) throw UsageError("family " + family + " requires an even --order");
    return n / 2;
  };
  const auto fixed_order = [&](int n) {
    if (order && *order != n) {
      throw UsageError("family " + family + " has order " + std::to_string(n));
    }
  };
  if (family == "P") return make_passband(even_order(), theta, options);
  if (family == "B") return make_broadband(even_order(), theta, options);
  if (family == "N") return make_narrowband(even_order(), theta, options);
  if (family == "PB1") return fixed_order(2), wimperis(WimperisName::PB1, theta, options);
  if (family == "BB1") return fixed_order(2), wimperis(WimperisName::BB1, theta, options);
  if (family == "NB1") return fixed_order(2), wimperis(WimperisName::NB1, theta, options);
  if (family == "SK") return make_sk(need_order(), theta, options);
  if (family == "SB") {
    if (need_order() < 5) throw UsageError("SB sequences require --order >= 5");
    return make_sb(*order, theta, options);
  }
  if (family == "CORPSE") return fixed_order(1), corpse(theta, options);
  if (family == "SKD") {
    if (need_order() < 2) throw UsageError("SKD sequences require --order >= 2");
    return make_detuning_corrected(*order, theta, options);
  }
  throw UsageError("unknown family '" + family + "'");
}

ErrorKind parse_model(const std::string& name) {
  if (name == "amplitude") return ErrorKind::amplitude;
  if (name == "detuning") return ErrorKind::detuning;
  throw UsageError("unknown model '" + name + "'");
}

Metric parse_metric(const std::string& name) {
  const auto m = metric_from_string(name);
  if (!m) throw UsageError("unknown metric '" + name + "'");
  return *m;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::string complex_text(Complex z) {
  return "(" + format_sci(z.real()) + "," + format_sci(z.imag()) + ")";
}

struct Globals {
  std::string config_path;
  std::optional<double> tol_defect;
  std::optional<int> max_ts_level;
  std::optional<int> max_block_level;
  std::optional<unsigned> jobs;
  long long seed = 0;
};

Config resolve(const Globals& g) {
  Config cfg = g.config_path.empty() ? Config{} : load_config(g.config_path);
  if (g.tol_defect) cfg.build.tol_defect = *g.tol_defect;
  if (g.max_ts_level) cfg.build.max_ts_level = *g.max_ts_level;
  if (g.max_block_level) cfg.build.max_block_level = *g.max_block_level;
  if (g.jobs) cfg.jobs = *g.jobs;
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize and verify composite pulse sequences", "arbpulse"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "key=value config file");
  app.add_option("--tol-defect", g.tol_defect, "coefficient cancellation threshold");
  app.add_option("--max-ts-level", g.max_ts_level, "deepest S_n recursion");
  app.add_option("--max-block-level", g.max_block_level, "deepest commutator block");
  app.add_option("--seed", g.seed, "reserved for future use; currently ignored");

  // synth
  auto* synth = app.add_subcommand("synth", "build and verify a sequence");
  std::string s_family, s_out;
  std::optional<int> s_order;
  double s_theta = kPi, s_phi = 0.0;
  synth->add_option("--family", s_family, "P|B|N|SK|SB|PB1|BB1|NB1|CORPSE|SKD")->required();
  synth->add_option("--order", s_order, "compensation order");
  synth->add_option("--theta", s_theta, "target angle in radians");
  synth->add_option("--phi", s_phi, "target phase in radians");
  synth->add_option("--out", s_out, "output JSON file (default: stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a sequence file at one error value");
  std::string e_seq, e_model, e_metric = "trace";
  double e_value = 0.0;
  eval->add_option("--seq", e_seq, "sequence JSON file")->required();
  eval->add_option("--model", e_model, "amplitude|detuning (default: the file's model)");
  eval->add_option("--value", e_value, "error value");
  eval->add_option("--metric", e_metric, "trace|infidelity|signal");

  // sweep
  auto* sw = app.add_subcommand("sweep", "sweep sequences over an error grid");
  std::vector<std::string> w_families;
  std::vector<int> w_orders;
  double w_theta = kPi;
  std::string w_model = "amplitude", w_metric = "trace", w_out;
  std::optional<double> w_start, w_stop;
  std::optional<int> w_points;
  bool w_log = false, w_linear = false;
  std::optional<unsigned> w_jobs;
  sw->add_option("--families", w_families, "comma-separated families")
      ->required()
      ->delimiter(',');
  sw->add_option("--orders", w_orders, "comma-separated orders (one value is broadcast)")
      ->delimiter(',');
  sw->add_option("--theta", w_theta, "target angle in radians");
  sw->add_option("--model", w_model, "amplitude|detuning");
  sw->add_option("--eps-start", w_start, "first grid value");
  sw->add_option("--eps-stop", w_stop, "last grid value");
  sw->add_option("--points", w_points, "number of grid points");
  auto* log_flag = sw->add_flag("--log", w_log, "logarithmic grid");
  sw->add_flag("--linear", w_linear, "linear grid")->excludes(log_flag);
  sw->add_option("--metric", w_metric, "trace|infidelity|signal");
  sw->add_option("--out", w_out, "output CSV file (default: stdout)");
  sw->add_option("--jobs", w_jobs, "worker threads");

  // orderfit
  auto* of = app.add_subcommand("orderfit", "fit the log-log error slope of a sequence");
  std::string o_seq, o_model, o_metric = "trace";
  OrderFitWindow window;
  of->add_option("--seq", o_seq, "sequence JSON file")->required();
  of->add_option("--model", o_model, "amplitude|detuning (default: the file's model)");
  of->add_option("--eps-start", window.lo, "window start");
  of->add_option("--eps-stop", window.hi, "window stop");
  of->add_option("--points", window.points, "grid points in the window");
  of->add_option("--metric", o_metric, "trace|infidelity");

  // series
  auto* se = app.add_subcommand("series", "print error-series coefficients of a sequence");
  std::string r_seq, r_model;
  std::optional<int> r_degree;
  se->add_option("--seq", r_seq, "sequence JSON file")->required();
  se->add_option("--degree", r_degree, "series degree (default: order + 1)");
  se->add_option("--model", r_model, "amplitude|detuning (default: the file's model)");

  // scaling
  auto* sc = app.add_subcommand("scaling", "pulse-count scaling of the SK or SB ladder");
  std::string c_family = "SK", c_out;
  int c_max = 12;
  std::optional<int> c_min;
  double c_theta = kPi;
  sc->add_option("--family", c_family, "SK|SB");
  sc->add_option("--max-order", c_max, "largest order");
  sc->add_option("--min-fit-order", c_min, "smallest order in the fit (default 4 for SK)");
  sc->add_option("--theta", c_theta, "target angle in radians");
  sc->add_option("--out", c_out, "output CSV file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int failure_code = kExitConstruction;
  try {
    const Config cfg = resolve(g);
    if (synth->parsed()) {
      PulseSequence seq = build(s_family, s_order, s_theta, cfg.build);
      if (s_phi != 0.0) seq = rotate_phases(std::move(seq), s_phi);
      const OrderReport report = verify_order(seq.pulses, seq.model, seq.target_unitary(),
                                              seq.order, cfg.build.tol_defect);
      std::ostream& log = (s_out.empty() || s_out == "-") ? err : out;
      log << label_of(seq) << ": " << seq.pulse_count() << " pulses, "
          << format_sci(seq.two_pi_equivalents()) << " 2pi-equivalents, "
          << to_string(seq.model) << " model" << (seq.narrowband ? ", narrowband" : "")
          << "\n"
          << report.describe();
      for (int n : seq.free_orders) log << "free order " << n << "\n";
      emit(s_out, sequence_to_json(seq), out);
      return report.passed() ? kExitOk : kExitConstruction;
    }
    if (eval->parsed()) {
      const Metric metric = parse_metric(e_metric);
      failure_code = kExitUnverifiable;
      const PulseSequence seq = load_sequence(e_seq, cfg.build);
      failure_code = kExitConstruction;
      const ErrorKind model = e_model.empty() ? seq.model : parse_model(e_model);
      out << format_sci(evaluate(seq, make_error(model, e_value), metric)) << "\n";
      return kExitOk;
    }
    if (sw->parsed()) {
      const ErrorKind model = parse_model(w_model);
      const Metric metric = parse_metric(w_metric);
      if (w_orders.size() > 1 && w_orders.size() != w_families.size()) {
        throw UsageError("--orders needs one value or one per family");
      }
      const bool logarithmic = w_log || (!w_linear && cfg.log_grid);
      const int points = w_points.value_or(cfg.points);
      if (points < 2) throw UsageError("--points must be at least 2");
      const double start = w_start.value_or(cfg.eps_start);
      const double stop = w_stop.value_or(cfg.eps_stop);
      if (!(start < stop)) throw UsageError("--eps-start must be below --eps-stop");
      if (logarithmic && !(start > 0)) throw UsageError("a log grid needs --eps-start > 0");
      const auto grid = make_grid(start, stop, static_cast<std::size_t>(points), logarithmic);
      std::vector<PulseSequence> seqs;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < w_families.size(); ++i) {
        std::optional<int> order;
        if (!w_orders.empty()) order = w_orders.size() == 1 ? w_orders[0] : w_orders[i];
        seqs.push_back(build(w_families[i], order, w_theta, cfg.build));
        labels.push_back(label_of(seqs.back()));
      }
      const SweepResult result =
          sweep(seqs, labels, model, grid, metric, w_jobs.value_or(cfg.jobs));
      emit(w_out, sweep_to_csv(result), out);
      return kExitOk;
    }
    if (of->parsed()) {
      const Metric metric = parse_metric(o_metric);
      failure_code = kExitUnverifiable;
      const PulseSequence seq = load_sequence(o_seq, cfg.build);
      failure_code = kExitConstruction;
      const ErrorKind model = o_model.empty() ? seq.model : parse_model(o_model);
      const SlopeFit fit = fit_order(seq, model, window, metric);
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(6);
      line << fit.slope;
      out << line.str() << "\n";
      err << "points used: " << fit.points_used << "\n";
      return kExitOk;
    }
    if (se->parsed()) {
      failure_code = kExitUnverifiable;
      const PulseSequence seq = load_sequence(r_seq, cfg.build);
      failure_code = kExitConstruction;
      const ErrorKind model = r_model.empty() ? seq.model : parse_model(r_model);
      const int degree = r_degree.value_or(seq.order + 1);
      if (degree < 0) throw UsageError("--degree must be non-negative");
      const MatrixSeries s =
          sequence_series(seq.pulses, model, static_cast<std::size_t>(degree));
      for (int k = 0; k <= degree; ++k) {
        const Mat2 c = s.coefficient(static_cast<std::size_t>(k));
        const PauliVector p = pauli_decompose(c);
        out << "C_" << k << " = [[" << complex_text(c(0, 0)) << ", " << complex_text(c(0, 1))
            << "], [" << complex_text(c(1, 0)) << ", " << complex_text(c(1, 1)) << "]]  |C_"
            << k << "| = " << format_sci(s.coefficient_norm(static_cast<std::size_t>(k)))
            << "\n";
        out << "  pauli: I=" << complex_text(p.i) << " X=" << complex_text(p.x)
            << " Y=" << complex_text(p.y) << " Z=" << complex_text(p.z) << "\n";
      }
      return kExitOk;
    }
    if (sc->parsed()) {
      Family family;
      if (c_family == "SK") {
        family = Family::SK;
      } else if (c_family == "SB") {
        family = Family::SB;
      } else {
        throw UsageError("scaling supports --family SK or SB");
      }
      const int min_fit = c_min.value_or(family == Family::SK ? 4 : 5);
      const ScalingResult r = scaling_study(family, c_max, c_theta, min_fit, cfg.build);
      emit(c_out, scaling_to_csv(r), out);
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(4);
      line << r.fitted_exponent;
      (c_out.empty() ? err : out) << "exponent " << line.str() << " (orders " << min_fit
                                  << ".." << c_max << ")\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnverifiable;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return failure_code == kExitUnverifiable ? kExitUnverifiable : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return failure_code;
  }
  return kExitUsage;
}

}  // namespace arbpulse::cli
