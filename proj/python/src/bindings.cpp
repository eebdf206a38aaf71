// Copyright 2026 The pathsum Authors
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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/interpret.hpp"
#include "pathsum/rewrite.hpp"
#include "pathsum/sim.hpp"

namespace py = pybind11;
using namespace pathsum;

namespace {

SimOptions options(std::size_t max_eval_vars) {
  SimOptions o;
  o.max_eval_vars = max_eval_vars;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boolean path sum simulation of Clifford+CCZ circuits";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EvalGuardError>(m, "EvalGuardError", error.ptr());
  py::register_exception<NonDeterministicError>(m, "NonDeterministicError", error.ptr());

  py::class_<Amplitude>(m, "Amplitude")
      .def("__str__", &Amplitude::to_string)
      .def("__repr__", [](const Amplitude& a) { return "Amplitude(" + a.to_string() + ")"; })
      .def("__float__", &Amplitude::to_double)
      .def("__eq__", [](const Amplitude& a, const Amplitude& b) { return a == b; })
      .def("is_zero", &Amplitude::is_zero)
      .def("is_one", &Amplitude::is_one);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("num_qubits", [](const Circuit& c) { return c.num_qubits; })
      .def_property_readonly("num_gates", [](const Circuit& c) { return c.gates.size(); })
      .def("__str__", [](const Circuit& c) { return serialize(c); })
      .def("__len__", [](const Circuit& c) { return c.gates.size(); });

  m.def("parse_circuit", [](const std::string& text) { return parse_circuit(text); }, py::arg("text"));
  m.def("serialize_circuit", &serialize, py::arg("circuit"));

  m.def(
      "hidden_shift_circuit",
      [](std::size_t n, std::vector<std::vector<Qubit>> g, const std::string& shift, std::vector<Qubit> pi) {
        HiddenShiftSpec spec;
        spec.n = n;
        spec.g = std::move(g);
        spec.shift = parse_bits(shift);
        spec.pi = std::move(pi);
        return hidden_shift_circuit(spec);
      },
      py::arg("n"), py::arg("g"), py::arg("shift"), py::arg("pi") = std::vector<Qubit>{});

  m.def(
      "strong_sim",
      [](const Circuit& c, const std::string& x, const std::string& y, std::size_t max_eval_vars) {
        return strong_sim(c, parse_bits(x), parse_bits(y), options(max_eval_vars));
      },
      py::arg("circuit"), py::arg("x"), py::arg("y"), py::arg("max_eval_vars") = kDefaultMaxEvalVars);

  m.def(
      "measure_sim",
      [](const Circuit& c, const std::string& x, std::size_t qubit, std::size_t max_eval_vars) {
        return measure_sim(c, parse_bits(x), qubit, options(max_eval_vars)).exact;
      },
      py::arg("circuit"), py::arg("x"), py::arg("qubit"), py::arg("max_eval_vars") = kDefaultMaxEvalVars);

  m.def(
      "recover_shift", [](const Circuit& c) { return bits_to_string(recover_shift(c).shift); },
      py::arg("circuit"));

  // JSON text; the package wrapper decodes it.
  m.def(
      "normalize_json",
      [](const Circuit& c) {
        const Normalized r = normalize(interpret(c));
        nlohmann::ordered_json j;
        j["normal_form"] = to_json(r.normal_form);
        auto& steps = j["trace"] = nlohmann::ordered_json::array();
        for (const auto& s : r.trace) steps.push_back(s.to_string());
        return j.dump();
      },
      py::arg("circuit"));
}
