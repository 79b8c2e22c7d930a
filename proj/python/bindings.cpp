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

#include <optional>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arbpulse/analysis.hpp"
#include "arbpulse/io.hpp"
#include "arbpulse/series.hpp"
#include "arbpulse/sk_family.hpp"
#include "arbpulse/ts_family.hpp"

namespace py = pybind11;
using namespace arbpulse;

namespace {

std::vector<Pulse> to_pulses(const std::vector<std::pair<double, double>>& raw) {
  std::vector<Pulse> out;
  out.reserve(raw.size());
  for (const auto& [phi, theta] : raw) out.push_back({phi, theta});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Composite pulse synthesis and verification";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());

  py::enum_<ErrorKind>(m, "ErrorKind")
      .value("amplitude", ErrorKind::amplitude)
      .value("detuning", ErrorKind::detuning);
  py::enum_<Metric>(m, "Metric")
      .value("trace", Metric::trace)
      .value("infidelity", Metric::infidelity)
      .value("signal", Metric::signal);
  py::enum_<Family>(m, "Family")
      .value("P", Family::P)
      .value("B", Family::B)
      .value("N", Family::N)
      .value("SK", Family::SK)
      .value("SB", Family::SB)
      .value("CORPSE", Family::CORPSE)
      .value("SKD", Family::SKD)
      .value("RAW", Family::RAW);
  py::enum_<WimperisName>(m, "WimperisName")
      .value("PB1", WimperisName::PB1)
      .value("BB1", WimperisName::BB1)
      .value("NB1", WimperisName::NB1);

  py::class_<BuildOptions>(m, "BuildOptions")
      .def(py::init<>())
      .def_readwrite("tol_defect", &BuildOptions::tol_defect)
      .def_readwrite("max_ts_level", &BuildOptions::max_ts_level)
      .def_readwrite("max_block_level", &BuildOptions::max_block_level);

  py::class_<Pulse>(m, "Pulse")
      .def(py::init<double, double>(), py::arg("phi"), py::arg("theta"))
      .def_readwrite("phi", &Pulse::phi)
      .def_readwrite("theta", &Pulse::theta)
      .def("__repr__", [](const Pulse& p) {
        return "Pulse(phi=" + std::to_string(p.phi) + ", theta=" + std::to_string(p.theta) + ")";
      });

  py::class_<PulseSequence>(m, "PulseSequence")
      .def_readonly("family", &PulseSequence::family)
      .def_readonly("order", &PulseSequence::order)
      .def_readonly("target", &PulseSequence::target)
      .def_readonly("pulses", &PulseSequence::pulses)
      .def_readonly("model", &PulseSequence::model)
      .def_readonly("narrowband", &PulseSequence::narrowband)
      .def_readonly("free_orders", &PulseSequence::free_orders)
      .def_property_readonly("label", &label_of)
      .def_property_readonly("pulse_count", &PulseSequence::pulse_count)
      .def_property_readonly("two_pi_equivalents", &PulseSequence::two_pi_equivalents)
      .def("__len__", &PulseSequence::pulse_count);

  py::class_<OrderReport>(m, "OrderReport")
      .def_readonly("claimed", &OrderReport::claimed)
      .def_readonly("first_surviving", &OrderReport::first_surviving)
      .def_readonly("coefficient_norms", &OrderReport::coefficient_norms)
      .def_readonly("constant_mismatch", &OrderReport::constant_mismatch)
      .def_property_readonly("passed", &OrderReport::passed)
      .def_property_readonly("exact",
                             [](const OrderReport& r) {
                               return r.status == OrderReport::Status::exact;
                             })
      .def("__str__", &OrderReport::describe);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("labels", &SweepResult::labels)
      .def_readonly("epsilons", &SweepResult::epsilons)
      .def_readonly("errors", &SweepResult::errors)
      .def("to_csv", &sweep_to_csv);

  py::class_<ScalingResult>(m, "ScalingResult")
      .def_readonly("orders", &ScalingResult::orders)
      .def_readonly("pulse_counts", &ScalingResult::pulse_counts)
      .def_readonly("raw_pulse_counts", &ScalingResult::raw_pulse_counts)
      .def_readonly("fitted_exponent", &ScalingResult::fitted_exponent);

  m.def("ideal_rotation", [](double phi, double theta) {
    return ideal_rotation({phi, theta}).matrix();
  }, py::arg("phi"), py::arg("theta"));
  m.def("execute", [](const PulseSequence& seq, double value, std::optional<ErrorKind> model) {
    return execute_sequence(seq.pulses, make_error(model.value_or(seq.model), value)).matrix();
  }, py::arg("seq"), py::arg("value"), py::arg("model") = py::none());
  m.def("execute_pulses",
        [](const std::vector<std::pair<double, double>>& pulses, ErrorKind model, double value) {
          return execute_sequence(to_pulses(pulses), make_error(model, value)).matrix();
        },
        py::arg("pulses"), py::arg("model"), py::arg("value"),
        "Pulses are (phi, theta) pairs; the first acts first.");
  m.def("distance", [](const Mat2& u, const Mat2& v) {
    return distance(Unitary2::from_matrix(u), Unitary2::from_matrix(v));
  });
  m.def("fidelity", [](const Mat2& u, const Mat2& v) {
    return fidelity(Unitary2::from_matrix(u), Unitary2::from_matrix(v));
  });

  m.def("make_passband", &make_passband, py::arg("j"), py::arg("theta"),
        py::arg("options") = BuildOptions{});
  m.def("make_broadband", &make_broadband, py::arg("j"), py::arg("theta"),
        py::arg("options") = BuildOptions{});
  m.def("make_narrowband", &make_narrowband, py::arg("j"), py::arg("theta"),
        py::arg("options") = BuildOptions{});
  m.def("wimperis", &wimperis, py::arg("name"), py::arg("theta"),
        py::arg("options") = BuildOptions{});
  m.def("make_sk", &make_sk, py::arg("n"), py::arg("theta"), py::arg("options") = BuildOptions{});
  m.def("make_sb", &make_sb, py::arg("n"), py::arg("theta"), py::arg("options") = BuildOptions{});
  m.def("corpse", &corpse, py::arg("theta"), py::arg("options") = BuildOptions{});
  m.def("make_detuning_corrected", &make_detuning_corrected, py::arg("n"), py::arg("theta"),
        py::arg("options") = BuildOptions{});
  m.def("sk_step", &sk_step, py::arg("seq"), py::arg("options") = BuildOptions{});
  m.def("rotate_phases", &rotate_phases, py::arg("seq"), py::arg("phi"));

  m.def("verify_order",
        [](const PulseSequence& seq, std::optional<int> claimed, double tol) {
          return verify_order(seq.pulses, seq.model, seq.target_unitary(),
                              claimed.value_or(seq.order), tol);
        },
        py::arg("seq"), py::arg("claimed") = py::none(), py::arg("tol") = kDefaultDefectTol);
  m.def("series_coefficients",
        [](const PulseSequence& seq, std::size_t degree, std::optional<ErrorKind> model) {
          const MatrixSeries s = sequence_series(seq.pulses, model.value_or(seq.model), degree);
          std::vector<Mat2> out;
          for (std::size_t k = 0; k <= degree; ++k) out.push_back(s.coefficient(k));
          return out;
        },
        py::arg("seq"), py::arg("degree"), py::arg("model") = py::none());

  m.def("evaluate",
        [](const PulseSequence& seq, double value, Metric metric,
           std::optional<ErrorKind> model) {
          return evaluate(seq, make_error(model.value_or(seq.model), value), metric);
        },
        py::arg("seq"), py::arg("value"), py::arg("metric") = Metric::trace,
        py::arg("model") = py::none());
  m.def("make_grid", &make_grid, py::arg("start"), py::arg("stop"), py::arg("points"),
        py::arg("logarithmic") = true);
  m.def("sweep",
        [](const std::vector<PulseSequence>& seqs, const std::vector<double>& grid,
           ErrorKind model, Metric metric, unsigned jobs) {
          std::vector<std::string> labels;
          for (const auto& s : seqs) labels.push_back(label_of(s));
          return sweep(seqs, labels, model, grid, metric, jobs);
        },
        py::arg("seqs"), py::arg("grid"), py::arg("model") = ErrorKind::amplitude,
        py::arg("metric") = Metric::trace, py::arg("jobs") = 1u);
  m.def("fit_order",
        [](const PulseSequence& seq, double lo, double hi, std::size_t points, Metric metric) {
          return fit_order(seq, seq.model, OrderFitWindow{lo, hi, points}, metric).slope;
        },
        py::arg("seq"), py::arg("lo") = OrderFitWindow{}.lo, py::arg("hi") = OrderFitWindow{}.hi,
        py::arg("points") = OrderFitWindow{}.points, py::arg("metric") = Metric::trace);
  m.def("scaling_study", &scaling_study, py::arg("family"), py::arg("n_max"), py::arg("theta"),
        py::arg("fit_min_order") = 4, py::arg("options") = BuildOptions{});

  m.def("to_json", &sequence_to_json);
  m.def("from_json", &sequence_from_json, py::arg("text"), py::arg("options") = BuildOptions{});
}
