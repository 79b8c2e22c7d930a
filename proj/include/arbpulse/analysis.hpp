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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbpulse/options.hpp"
#include "arbpulse/sequence.hpp"

namespace arbpulse {

enum class Metric { trace, infidelity, signal };

const char* to_string(Metric metric);
std::optional<Metric> metric_from_string(std::string_view name);

/// trace: distance to the ideal target; infidelity: 1 - fidelity;
/// signal: |<0| U_ideal^dagger U_exec |0>|^2.
double evaluate(const PulseSequence& seq, const ErrorModel& model, Metric metric);

/// k points from a to b inclusive; logarithmic spacing requires a > 0.
std::vector<double> make_grid(double a, double b, std::size_t k, bool logarithmic);

struct SweepResult {
  std::vector<std::string> labels;
  std::vector<double> epsilons;
  /// errors[i][j]: grid point i, sequence j.
  std::vector<std::vector<double>> errors;
  Metric metric = Metric::trace;
  ErrorKind model = ErrorKind::amplitude;
};

/// Evaluates every (grid point, sequence) pair on `jobs` worker threads. The
/// result does not depend on `jobs`.
SweepResult sweep(const std::vector<PulseSequence>& seqs, const std::vector<std::string>& labels,
                  ErrorKind model, const std::vector<double>& grid, Metric metric,
                  unsigned jobs = 1);

std::string label_of(const PulseSequence& seq);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points_used = 0;
};

/// Least-squares line through (log x, log y).
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr double kNoiseFloor = 1e-13;

struct OrderFitWindow {
  double lo = 3.1622776601683794e-3;  // 10^-2.5
  double hi = 3.1622776601683794e-2;  // 10^-1.5
  std::size_t points = 16;
};

/// Log-log slope of the metric over the window. Points below the noise floor
/// are dropped; fewer than 4 survivors is a PreconditionError.
SlopeFit fit_order(const PulseSequence& seq, ErrorKind model, const OrderFitWindow& window = {},
                   Metric metric = Metric::trace);

/// Total corrective rotation over 2 pi, excluding the base pulse.
double count_two_pi(const PulseSequence& seq);

struct ScalingResult {
  Family family = Family::SK;
  std::vector<int> orders;
  /// 2 pi equivalents of each sequence.
  std::vector<double> pulse_counts;
  std::vector<std::size_t> raw_pulse_counts;
  int fit_min_order = 4;
  double fitted_exponent = 0.0;
};

/// Builds SK_n (n = 2..n_max) or SB_n (n = 5..n_max) and fits
/// log count = p log n + c over orders >= fit_min_order.
ScalingResult scaling_study(Family family, int n_max, double theta, int fit_min_order = 4,
                            const BuildOptions& options = {});

}  // namespace arbpulse
