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

#include "teledepth/equivalence.h"

#include <cmath>

#include <gtest/gtest.h>

#include "teledepth/fidelity.h"
#include "teledepth/simulator.h"

namespace teledepth {
namespace {

TEST(RuleCertificates, EveryRulePasses) {
    auto certs = certify_rule_table();
    ASSERT_EQ(certs.size(), rewrite_rule_table().size());
    for (const auto &c : certs) {
        EXPECT_TRUE(c.passed) << c.rule << " deviates by " << c.max_deviation;
    }
}

TEST(RuleCertificates, MethodsMatchRuleShape) {
    for (const auto &c : certify_rule_table()) {
        bool measurement = c.rule.find("measure") != std::string::npos;
        EXPECT_EQ(c.method, measurement ? "choi" : "unitary") << c.rule;
    }
}

TEST(RuleCertificates, XOnControlIsMatrixIdentity) {
    // CCX * X_a = X_a * CX(b, t) * CCX as 8x8 matrices.
    std::vector<Operation> lhs{Operation::gate(OpKind::X, {0}), Operation::gate(OpKind::CCX, {0, 1, 2})};
    std::vector<Operation> rhs{Operation::gate(OpKind::CCX, {0, 1, 2}), Operation::gate(OpKind::X, {0}),
                               Operation::gate(OpKind::CX, {1, 2})};
    EXPECT_LT(max_abs_difference(sequence_unitary(lhs, 3, {}), sequence_unitary(rhs, 3, {})), 1e-15);
}

TEST(RuleCertificates, BrokenRuleIsCaught) {
    for (auto rule : rewrite_rule_table()) {
        if (rule.name == "x-on-ccx-control") {
            rule.replacement.pop_back();  // drop the CX correction
            EXPECT_FALSE(certify_rule(rule).passed);
        }
        if (rule.name == "x-before-measure-z") {
            rule.replacement.pop_back();  // forget the outcome flip
            EXPECT_FALSE(certify_rule(rule).passed);
        }
        if (rule.name == "z-before-measure-z") {
            rule.anchor.kind = OpKind::MEASURE_X;  // deleting Z before an X measurement is wrong
            rule.replacement[0].kind = OpKind::MEASURE_X;
            EXPECT_FALSE(certify_rule(rule).passed);
        }
    }
}

TEST(RuleCertificates, ZBeforeMeasureZOnBlochStates) {
    // Outcome distributions with and without the Z agree on a spread of single-qubit states.
    for (int k = 0; k < 12; k++) {
        double theta = M_PI * k / 11, phi = 0.7 * k;
        std::vector<amplitude> psi{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
        Circuit with("z"), without("plain");
        for (Circuit *c : {&with, &without}) {
            c->add_qubit(QubitKind::CONTROL);
        }
        with.append(Operation::gate(OpKind::Z, {0}));
        auto a = run_trajectory(with, psi, NoiseModel::noiseless(), 0);
        auto b = run_trajectory(without, psi, NoiseModel::noiseless(), 0);
        EXPECT_NEAR(std::norm(a.state.amplitudes()[1]), std::norm(b.state.amplitudes()[1]), 1e-15);
    }
}

// The simulator's kernels agree with the dense matrices for every gate on up to four qubits.
TEST(GateMatrices, SimulatorMatchesDenseOnAllBasisStates) {
    struct Case {
        OpKind kind;
        std::vector<uint32_t> qubits;
    };
    std::vector<Case> cases{{OpKind::X, {2}},          {OpKind::Y, {1}},          {OpKind::Z, {3}},
                            {OpKind::H, {0}},          {OpKind::S, {2}},          {OpKind::SDG, {1}},
                            {OpKind::CX, {3, 0}},      {OpKind::CZ, {1, 2}},      {OpKind::CCX, {2, 0, 3}},
                            {OpKind::CCZ, {0, 3, 1}},  {OpKind::MCX, {3, 1, 0, 2}}, {OpKind::MCZ, {0, 1, 2, 3}}};
    for (const auto &cs : cases) {
        Circuit c("gate");
        for (int i = 0; i < 4; i++) {
            c.add_qubit(QubitKind::CONTROL);
        }
        c.append(Operation::gate(cs.kind, cs.qubits));
        DenseMatrix dense = embed(gate_matrix(cs.kind, cs.qubits.size()), cs.qubits, 4);
        for (uint64_t in = 0; in < 16; in++) {
            auto r = run_trajectory(c, in, NoiseModel::noiseless(), 0);
            for (size_t row = 0; row < 16; row++) {
                ASSERT_LT(std::abs(r.state.amplitudes()[row] - dense.at(row, in)), 1e-15)
                    << op_name(cs.kind) << " input " << in << " row " << row;
            }
        }
    }
}

TEST(DenseMatrix, Unitary) {
    for (auto kind : {OpKind::H, OpKind::Y, OpKind::S, OpKind::CCX, OpKind::CCZ}) {
        size_t arity = gate_arity(kind);
        DenseMatrix g = gate_matrix(kind, arity);
        DenseMatrix gd{g.dim, std::vector<amplitude>(g.data.size())};
        for (size_t r = 0; r < g.dim; r++) {
            for (size_t c = 0; c < g.dim; c++) {
                gd.at(r, c) = std::conj(g.at(c, r));
            }
        }
        EXPECT_LT(max_abs_difference(multiply(g, gd), DenseMatrix::identity(g.dim)), 1e-15);
    }
}

}  // namespace
}  // namespace teledepth
