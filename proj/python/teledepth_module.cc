// Copyright 2026 The teledepth Authors
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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teledepth/applications.h"
#include "teledepth/circuit_io.h"
#include "teledepth/comparisons.h"
#include "teledepth/decomposer.h"
#include "teledepth/equivalence.h"
#include "teledepth/fidelity.h"
#include "teledepth/manifest.h"
#include "teledepth/schedule.h"
#include "teledepth/sweep.h"

namespace py = pybind11;
using namespace teledepth;

namespace {

MctStrategy strategy_from(const std::string &s) {
    if (s == "unitary") {
        return MctStrategy::UNITARY;
    }
    if (s == "teleport") {
        return MctStrategy::TELEPORTATION;
    }
    throw py::value_error("strategy must be 'unitary' or 'teleport'");
}

py::dict estimate_dict(const FidelityEstimate &e) {
    py::dict d;
    d["f_z"] = e.f_z;
    d["f_c"] = e.f_c;
    d["lower"] = e.lower;
    d["upper"] = e.upper;
    d["shots_per_input"] = e.shots_per_input;
    d["inputs"] = e.inputs_count;
    d["f_z_stderr"] = e.f_z_stderr;
    d["f_c_stderr"] = e.f_c_stderr;
    return d;
}

}  // namespace

PYBIND11_MODULE(_teledepth, m) {
    m.doc() = "Teleportation-based multi-controlled Toffoli synthesis and simulation";
    m.attr("__version__") = std::string(tool_version());

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DeferralError>(m, "DeferralError", PyExc_RuntimeError);
    py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("name", &Circuit::name)
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("num_cbits", &Circuit::num_cbits)
        .def_property_readonly("num_operations", [](const Circuit &c) { return c.operations().size(); })
        .def_property_readonly("data_qubits", &Circuit::data_qubits)
        .def("operations", [](const Circuit &c) {
            std::vector<std::string> out;
            for (const auto &op : c.operations()) {
                out.push_back(describe(op));
            }
            return out;
        })
        .def("__repr__", [](const Circuit &c) {
            return "<Circuit " + c.name() + " qubits=" + std::to_string(c.num_qubits()) +
                   " ops=" + std::to_string(c.operations().size()) + ">";
        });

    m.def("serialize", &serialize, py::arg("circuit"));
    m.def("deserialize", [](const std::string &text) { return deserialize(text); }, py::arg("text"));
    m.def("validate", [](const Circuit &c) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto &e : validate(c)) {
            out.emplace_back(e.code, e.message);
        }
        return out;
    });
    m.def("toffoli_depth", &toffoli_depth);
    m.def("toffoli_count", &toffoli_count);
    m.def("resource_counts", [](const Circuit &c) {
        auto r = resource_counts(c);
        py::dict d;
        d["ancillas"] = r.ancillas;
        d["bell_pairs"] = r.bell_pairs;
        d["measurements_z"] = r.measurements_z;
        d["measurements_x"] = r.measurements_x;
        d["conditional_gates"] = r.conditional_gates;
        return d;
    });

    m.def("decompose_mct", &decompose_mct, py::arg("n"));
    m.def("defer_corrections", &defer_corrections, py::arg("circuit"));
    m.def("neighbor_layout", &neighbor_layout, py::arg("circuit"));
    m.def("schedule", [](int64_t n) {
        Schedule s = build_schedule(n);
        std::vector<std::tuple<int64_t, int64_t, int64_t>> levels;
        for (const auto &l : s.levels) {
            levels.emplace_back(l.controls, l.groups, l.leftover);
        }
        auto cost = epr_and_ancilla(s);
        py::dict d;
        d["levels"] = levels;
        d["i_max"] = s.i_max();
        d["toffoli_count"] = toffoli_count_formula(s);
        d["bell_pairs"] = cost.bell_pairs;
        d["ancillas"] = cost.ancillas;
        return d;
    }, py::arg("n"));
    m.def("i_max_closed_form", &i_max_closed_form, py::arg("n"));

    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init<>())
        .def_static("from_hierarchy", &NoiseModel::from_hierarchy, py::arg("p_toffoli"), py::arg("p_epr"))
        .def_readwrite("p_toffoli", &NoiseModel::p_toffoli)
        .def_readwrite("p_2q", &NoiseModel::p_2q)
        .def_readwrite("p_1q", &NoiseModel::p_1q)
        .def_readwrite("p_init", &NoiseModel::p_init)
        .def_readwrite("p_readout", &NoiseModel::p_readout)
        .def_readwrite("p_epr", &NoiseModel::p_epr);

    m.def("estimate_fidelity", [](const Circuit &c, int n, const NoiseModel &noise, size_t shots, uint64_t seed) {
        return estimate_dict(estimate_fidelity(c, n, noise, shots, seed));
    }, py::arg("circuit"), py::arg("n"), py::arg("noise"), py::arg("shots"), py::arg("seed"));
    m.def("check_against_oracle", [](const Circuit &c, int n, bool exhaustive, size_t samples, uint64_t seed) {
        OracleCheck r = check_against_oracle(c, n, BranchPolicy{exhaustive, samples, seed});
        py::dict d;
        d["ok"] = r.ok;
        d["inputs"] = r.inputs;
        d["trajectories"] = r.trajectories;
        d["worst"] = r.worst;
        d["first_failure"] = r.first_failure;
        return d;
    }, py::arg("circuit"), py::arg("n"), py::arg("exhaustive") = true, py::arg("samples") = 256, py::arg("seed") = 0);
    m.def("check_permutation", [](const Circuit &c, const std::function<uint64_t(uint64_t)> &f) {
        OracleCheck r = check_permutation(c, f, BranchPolicy{});
        return py::make_tuple(r.ok, r.first_failure);
    }, py::arg("circuit"), py::arg("f"));

    m.def("sweep_csv", [](int n, size_t points, size_t shots, uint64_t seed, double lo, double hi, bool linear) {
        return sweep_csv(run_sweep(n, GridSpec{points, lo, hi, linear}, shots, seed));
    }, py::arg("n"), py::arg("grid"), py::arg("shots"), py::arg("seed"), py::arg("lo") = 1e-3, py::arg("hi") = 1e-1,
       py::arg("linear") = false);
    m.def("comparison_csv", [](int64_t n_min, int64_t n_max) { return comparison_csv(comparison_table(n_min, n_max)); },
          py::arg("n_min"), py::arg("n_max"));

    m.def("build_adder", [](int q, const std::string &s) { return build_adder(q, strategy_from(s)); },
          py::arg("q"), py::arg("strategy") = "teleport");
    m.def("build_qrom_word", [](const std::string &a, const std::string &w, const std::string &s) {
        return build_qrom_word(a, w, strategy_from(s));
    }, py::arg("address"), py::arg("word"), py::arg("strategy") = "teleport");
    m.def("qrom_oracle", &qrom_oracle, py::arg("address"), py::arg("word"), py::arg("input"));
    m.def("build_neuron", [](int f, const std::string &s) { return build_neuron(f, strategy_from(s)); },
          py::arg("features"), py::arg("strategy") = "teleport");
    m.def("build_decision_rule", [](const std::string &p, const std::string &s) {
        return build_decision_rule(p, strategy_from(s));
    }, py::arg("pattern"), py::arg("strategy") = "teleport");

    m.def("certify_rule_table", []() {
        std::vector<std::tuple<std::string, std::string, bool, double>> out;
        for (const auto &c : certify_rule_table()) {
            out.emplace_back(c.rule, c.method, c.passed, c.max_deviation);
        }
        return out;
    });
    m.def("sha256_hex", [](const std::string &s) { return sha256_hex(s); });
}
