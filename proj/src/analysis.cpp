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

#include "arbpulse/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "arbpulse/errors.hpp"
#include "arbpulse/sk_family.hpp"
#include "arbpulse/ts_family.hpp"

namespace arbpulse {

namespace {

constexpr std::string_view kMetricNames[] = {"trace", "infidelity", "signal"};

}  // namespace

const char* to_string(Metric metric) {
  return kMetricNames[static_cast<int>(metric)].data();
}

std::optional<Metric> metric_from_string(std::string_view name) {
  for (int i = 0; i < 3; ++i) {
    if (kMetricNames[i] == name) return static_cast<Metric>(i);
  }
  return std::nullopt;
}

double evaluate(const PulseSequence& seq, const ErrorModel& model, Metric metric) {
  const Unitary2 ideal = seq.target_unitary();
  const Unitary2 exec = execute_sequence(seq.pulses, model);
  switch (metric) {
    case Metric::trace: return distance(ideal, exec);
    case Metric::infidelity: return infidelity(exec, ideal);
    case Metric::signal: return std::norm((ideal.adjoint() * exec)(0, 0));
  }
  return 0.0;
}

std::vector<double> make_grid(double a, double b, std::size_t k, bool logarithmic) {
  if (k < 2) throw PreconditionError("a grid needs at least 2 points");
  if (!(a < b)) throw PreconditionError("grid start must be below grid stop");
  if (logarithmic && !(a > 0)) throw PreconditionError("a logarithmic grid needs start > 0");
  std::vector<double> out(k);
  const double la = logarithmic ? std::log10(a) : a;
  const double lb = logarithmic ? std::log10(b) : b;
  for (std::size_t i = 0; i < k; ++i) {
    const double t = la + (lb - la) * static_cast<double>(i) / static_cast<double>(k - 1);
    out[i] = logarithmic ? std::pow(10.0, t) : t;
  }
  out.front() = a;
  out.back() = b;
  return out;
}

SweepResult sweep(const std::vector<PulseSequence>& seqs, const std::vector<std::string>& labels,
                  ErrorKind model, const std::vector<double>& grid, Metric metric,
                  unsigned jobs) {
  if (grid.empty()) throw PreconditionError("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw PreconditionError("sweep grid must increase strictly");
  }
  if (labels.size() != seqs.size()) throw PreconditionError("one label per sequence required");

  SweepResult out;
  out.labels = labels;
  out.epsilons = grid;
  out.metric = metric;
  out.model = model;
  out.errors.assign(grid.size(), std::vector<double>(seqs.size(), 0.0));

  const std::size_t cells = grid.size() * seqs.size();
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t c = first; c < cells; c += stride) {
      const std::size_t i = c / seqs.size();
      const std::size_t j = c % seqs.size();
      out.errors[i][j] = evaluate(seqs[j], make_error(model, grid[i]), metric);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(cells, 1));
  if (workers == 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  return out;
}

std::string label_of(const PulseSequence& seq) {
  if (seq.family == Family::CORPSE) return "CORPSE";
  return std::string(to_string(seq.family)) + std::to_string(seq.order);
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw PreconditionError("fit_loglog: size mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (x.size() < 2 || denom == 0.0) throw PreconditionError("fit_loglog: degenerate data");
  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.points_used = x.size();
  return fit;
}

SlopeFit fit_order(const PulseSequence& seq, ErrorKind model, const OrderFitWindow& window,
                   Metric metric) {
  if (window.lo < 1e-3 || window.hi > 0.3) {
    throw PreconditionError("fit window must lie within [1e-3, 0.3]");
  }
  if (window.points < 8) throw PreconditionError("fit window needs at least 8 points");
  if (metric == Metric::signal) throw PreconditionError("signal does not vanish at zero error");
  std::vector<double> xs, ys;
  for (double e : make_grid(window.lo, window.hi, window.points, true)) {
    const double v = evaluate(seq, make_error(model, e), metric);
    if (v < kNoiseFloor) continue;
    xs.push_back(e);
    ys.push_back(v);
  }
  if (xs.size() < 4) {
    throw PreconditionError("below noise floor: use the series oracle (verify_order)");
  }
  return fit_loglog(xs, ys);
}

double count_two_pi(const PulseSequence& seq) { return seq.two_pi_equivalents(); }

ScalingResult scaling_study(Family family, int n_max, double theta, int fit_min_order,
                            const BuildOptions& options) {
  if (family != Family::SK && family != Family::SB) {
    throw PreconditionError("scaling studies cover the SK and SB families");
  }
  if (n_max > 16) throw PreconditionError("scaling studies are capped at n_max = 16");
  const int first = family == Family::SK ? 2 : 5;
  if (n_max < first) throw PreconditionError("n_max below the family's first order");

  ScalingResult out;
  out.family = family;
  out.fit_min_order = fit_min_order;
  PulseSequence seq = family == Family::SK ? make_sk(first, theta, options)
                                           : make_sb(first, theta, options);
  for (int n = first;; ++n) {
    out.orders.push_back(n);
    out.pulse_counts.push_back(count_two_pi(seq));
    out.raw_pulse_counts.push_back(seq.pulse_count());
    if (n == n_max) break;
    seq = sk_step(seq, options);
  }
  for (std::size_t i = 1; i < out.pulse_counts.size(); ++i) {
    if (!(out.pulse_counts[i] > out.pulse_counts[i - 1])) {
      throw ConstructionError("pulse counts are not strictly increasing");
    }
  }
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < out.orders.size(); ++i) {
    if (out.orders[i] < fit_min_order) continue;
    xs.push_back(out.orders[i]);
    ys.push_back(out.pulse_counts[i]);
  }
  if (xs.size() < 2) throw PreconditionError("too few orders in the scaling fit");
  out.fitted_exponent = fit_loglog(xs, ys).slope;
  return out;
}

}  // namespace arbpulse
