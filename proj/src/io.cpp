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

#include "arbpulse/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arbpulse/series.hpp"

namespace arbpulse {

namespace {

using nlohmann::json;

ErrorKind model_for(Family family) {
  return family == Family::CORPSE || family == Family::SKD ? ErrorKind::detuning
                                                          : ErrorKind::amplitude;
}

double finite_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw VerificationError(std::string("missing or non-numeric \"") + key + "\"");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw VerificationError(std::string("non-finite \"") + key + "\"");
  return v;
}

Pulse pulse_from(const json& j) {
  if (!j.is_object()) throw VerificationError("pulse entries must be objects");
  return {finite_number(j, "phi"), finite_number(j, "theta")};
}

}  // namespace

std::string sequence_to_json(const PulseSequence& seq) {
  json pulses = json::array();
  for (const Pulse& p : seq.pulses) pulses.push_back({{"phi", p.phi}, {"theta", p.theta}});
  json j;
  j["family"] = to_string(seq.family);
  j["order"] = seq.order;
  j["target"] = {{"phi", seq.target.phi}, {"theta", seq.target.theta}};
  j["pulses"] = std::move(pulses);
  j["meta"] = {{"pulse_count", seq.pulse_count()},
               {"two_pi_equivalents", seq.two_pi_equivalents()}};
  return j.dump(2) + "\n";
}

PulseSequence sequence_from_json(const std::string& text, const BuildOptions& options) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw VerificationError(std::string("sequence file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw VerificationError("sequence file must hold a JSON object");

  PulseSequence seq;
  if (!j.contains("family") || !j.at("family").is_string()) {
    throw VerificationError("missing \"family\"");
  }
  const auto family = family_from_string(j.at("family").get<std::string>());
  if (!family) throw VerificationError("unknown family " + j.at("family").dump());
  seq.family = *family;
  seq.model = model_for(seq.family);
  seq.narrowband = seq.family == Family::N;
  if (!j.contains("order") || !j.at("order").is_number_integer() ||
      j.at("order").get<long long>() < 0) {
    throw VerificationError("\"order\" must be a non-negative integer");
  }
  seq.order = j.at("order").get<int>();
  if (!j.contains("target")) throw VerificationError("missing \"target\"");
  seq.target = pulse_from(j.at("target"));
  if (!j.contains("pulses") || !j.at("pulses").is_array() || j.at("pulses").empty()) {
    throw VerificationError("\"pulses\" must be a nonempty array");
  }
  for (const json& p : j.at("pulses")) seq.pulses.push_back(pulse_from(p));
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    if (meta.contains("pulse_count") &&
        meta.at("pulse_count") != json(seq.pulse_count())) {
      throw VerificationError("meta.pulse_count disagrees with the pulse list");
    }
  }

  const double mismatch =
      distance(execute_sequence(seq.pulses, make_error(seq.model, 0.0)), seq.target_unitary());
  if (mismatch > 1e-12) {
    throw VerificationError("sequence does not reach its target at zero error");
  }
  const OrderReport report = verify_order(seq.pulses, seq.model, seq.target_unitary(),
                                          seq.order, options.tol_defect);
  if (!report.passed()) {
    throw VerificationError("sequence does not verify its claimed order\n" + report.describe());
  }
  return seq;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw PreconditionError("failed writing " + path.string());
}

void save_sequence(const std::filesystem::path& path, const PulseSequence& seq) {
  write_text(path, sequence_to_json(seq));
}

PulseSequence load_sequence(const std::filesystem::path& path, const BuildOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw VerificationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return sequence_from_json(buf.str(), options);
}

std::string format_sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  const bool negative = !exponent.empty() && exponent[0] == '-';
  if (!exponent.empty() && (exponent[0] == '-' || exponent[0] == '+')) exponent.erase(0, 1);
  const auto nz = exponent.find_first_not_of('0');
  exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
  return mantissa + "e" + (negative && exponent != "0" ? "-" : "") + exponent;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "epsilon";
  for (const std::string& l : result.labels) out += "," + l;
  out += "\n";
  for (std::size_t i = 0; i < result.epsilons.size(); ++i) {
    out += format_sci(result.epsilons[i]);
    for (double v : result.errors[i]) out += "," + format_sci(v);
    out += "\n";
  }
  return out;
}

std::string scaling_to_csv(const ScalingResult& result) {
  std::string out = "n,count\n";
  for (std::size_t i = 0; i < result.orders.size(); ++i) {
    out += std::to_string(result.orders[i]) + "," + format_sci(result.pulse_counts[i]) + "\n";
  }
  return out;
}

}  // namespace arbpulse
