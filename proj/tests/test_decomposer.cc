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

#include "teledepth/decomposer.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "teledepth/fidelity.h"
#include "teledepth/rng.h"
#include "teledepth/schedule.h"
#include "teledepth/simulator.h"

namespace teledepth {
namespace {

BranchPolicy policy_for(int n) {
    BranchPolicy p;
    p.exhaustive = n <= 4;
    p.samples = 64;
    p.seed = 1234 + static_cast<uint64_t>(n);
    return p;
}

TEST(TeleportExpand, FourControls) {
    Circuit c = teleport_expand_circuit(4, 2);
    EXPECT_EQ(toffoli_count(c), 3u);
    auto r = resource_counts(c);
    EXPECT_EQ(r.ancillas, 4u);
    EXPECT_EQ(r.measurements(), 4u);
    EXPECT_TRUE(validate(c).empty());
}

TEST(TeleportExpand, SevenControlsLeavesResidualMct4) {
    Circuit host("h");
    for (int i = 0; i < 8; i++) {
        host.add_qubit(i < 7 ? QubitKind::CONTROL : QubitKind::TARGET);
    }
    std::vector<uint32_t> controls{0, 1, 2, 3, 4, 5, 6};
    auto plan = teleport_expand(host, controls, 7, 2);
    EXPECT_EQ(plan.groups.size(), 3u);
    EXPECT_EQ(plan.leftovers, (std::vector<uint32_t>{6}));
    EXPECT_EQ(plan.residual_controls.size(), 4u);
    EXPECT_EQ(plan.residual_controls.back(), 6u);
    EXPECT_EQ(toffoli_count(host), 3u);
    auto residual = std::count_if(host.operations().begin(), host.operations().end(),
                                  [](const Operation &op) { return op.kind == OpKind::MCX; });
    EXPECT_EQ(residual, 1);
}

TEST(TeleportExpand, KOneUsesCnotTeleports) {
    Circuit c = teleport_expand_circuit(2, 1);
    EXPECT_EQ(resource_counts(c).bell_pairs, 2u);
    EXPECT_EQ(toffoli_count(c), 1u);
    EXPECT_TRUE(check_against_oracle(c, 2, {true, 0, 0}).ok);
}

TEST(TeleportExpand, RejectsBadK) {
    Circuit host("h");
    for (int i = 0; i < 4; i++) {
        host.add_qubit(QubitKind::CONTROL);
    }
    std::vector<uint32_t> controls{0, 1, 2};
    EXPECT_THROW(teleport_expand(host, controls, 3, 0), std::invalid_argument);
    EXPECT_THROW(teleport_expand(host, controls, 3, 4), std::invalid_argument);
    std::vector<uint32_t> one{0};
    EXPECT_THROW(teleport_expand(host, one, 3, 1), std::invalid_argument);
}

TEST(TeleportExpand, GenericKMatchesOracle) {
    for (auto [n, k] : {std::pair{3, 3}, {4, 3}, {5, 2}, {5, 4}}) {
        Circuit c = teleport_expand_circuit(n, k);
        auto check = check_against_oracle(c, n, {true, 0, 0});
        EXPECT_TRUE(check.ok) << "n=" << n << " k=" << k << ": " << check.first_failure;
    }
}

TEST(DecomposeMct, RejectsSmallN) {
    EXPECT_THROW(decompose_mct(1), std::invalid_argument);
}

TEST(DecomposeMct, CountsMatchScheduleUpTo64) {
    for (int n = 3; n <= 64; n++) {
        Circuit c = decompose_mct(n);
        auto s = build_schedule(n);
        auto cost = epr_and_ancilla(s);
        EXPECT_EQ(static_cast<int64_t>(toffoli_count(c)), toffoli_count_formula(s)) << "n=" << n;
        auto r = resource_counts(c);
        EXPECT_EQ(static_cast<int64_t>(r.ancillas), cost.ancillas) << "n=" << n;
        EXPECT_EQ(static_cast<int64_t>(r.bell_pairs), cost.bell_pairs) << "n=" << n;
        for (const auto &op : c.operations()) {
            ASSERT_NE(op.kind, OpKind::MCX) << "n=" << n;
            ASSERT_NE(op.kind, OpKind::MCZ) << "n=" << n;
        }
    }
}

// The two-control base case teleports the AND of both controls onto a fresh pair and finishes
// with a CNOT, so it holds one Toffoli even though the count formula reports two.
TEST(DecomposeMct, TwoControlBaseCase) {
    Circuit c = decompose_mct(2);
    EXPECT_EQ(toffoli_count(c), 1u);
    EXPECT_EQ(resource_counts(c).ancillas, 2u);
    EXPECT_EQ(resource_counts(c).bell_pairs, 1u);
}

TEST(DecomposeMct, OracleEquivalenceAllBranches) {
    for (int n = 2; n <= 7; n++) {
        Circuit c = decompose_mct(n);
        auto check = check_against_oracle(c, n, policy_for(n));
        EXPECT_TRUE(check.ok) << "n=" << n << ": " << check.first_failure;
        EXPECT_GT(check.trajectories, 0u);
    }
}

TEST(DeferCorrections, UnitDepth) {
    for (int n = 2; n <= 40; n++) {
        Circuit d = defer_corrections(decompose_mct(n));
        EXPECT_EQ(toffoli_depth(d), 1u) << "n=" << n;
        EXPECT_EQ(toffoli_count(d), toffoli_count(decompose_mct(n)));
    }
}

TEST(DeferCorrections, RemainingOpsAreMeasurementsXorAndConditionalCliffords) {
    Circuit d = defer_corrections(decompose_mct(7));
    auto layers = toffoli_layers(d);
    for (size_t k = 0; k < d.operations().size(); k++) {
        const auto &op = d.operations()[k];
        if (is_toffoli(op.kind) || op.kind == OpKind::BELL_PREP) {
            continue;
        }
        if (op.is_measurement() || op.kind == OpKind::CLASSICAL_XOR) {
            continue;
        }
        ASSERT_TRUE(op.condition.has_value()) << describe(op);
        ASSERT_TRUE(op.kind == OpKind::X || op.kind == OpKind::Z || op.kind == OpKind::CX || op.kind == OpKind::CZ)
            << describe(op);
    }
}

TEST(DeferCorrections, OracleEquivalenceAllBranches) {
    for (int n = 2; n <= 7; n++) {
        Circuit d = defer_corrections(decompose_mct(n));
        auto check = check_against_oracle(d, n, policy_for(n));
        EXPECT_TRUE(check.ok) << "n=" << n << ": " << check.first_failure;
    }
}

TEST(DeferCorrections, NoConditionalsIsUnchanged) {
    Circuit c("plain");
    for (int i = 0; i < 3; i++) {
        c.add_qubit(i < 2 ? QubitKind::CONTROL : QubitKind::TARGET);
    }
    c.append(Operation::gate(OpKind::H, {0}));
    c.append(Operation::gate(OpKind::CCX, {0, 1, 2}));
    c.append(Operation::gate(OpKind::CCX, {2, 1, 0}));
    EXPECT_TRUE(defer_corrections(c).same_structure(c));
}

TEST(DeferCorrections, ReportsBlockingOperation) {
    // A conditional H has no rewrite rule, so the second Toffoli stays in layer 2.
    Circuit c("blocked");
    for (int i = 0; i < 5; i++) {
        c.add_qubit(i < 4 ? QubitKind::CONTROL : QubitKind::TARGET);
    }
    uint32_t b = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    c.append(Operation::gate(OpKind::CCX, {0, 1, 2}));
    c.append(Operation::measure_z(2, b));
    c.append(Operation::conditional(OpKind::H, {3}, Condition{{b}, false}));
    c.append(Operation::gate(OpKind::CCX, {3, 1, 4}));
    try {
        defer_corrections(c);
        FAIL() << "expected DeferralError";
    } catch (const DeferralError &e) {
        EXPECT_NE(std::string(e.what()).find("blocked by"), std::string::npos) << e.what();
    }
}

TEST(NeighborLayout, ConsecutiveTriples) {
    Circuit d = neighbor_layout(defer_corrections(decompose_mct(7)));
    size_t toffolis = 0;
    for (const auto &op : d.operations()) {
        if (!is_toffoli(op.kind)) {
            continue;
        }
        toffolis++;
        auto q = op.qubits;
        std::sort(q.begin(), q.end());
        EXPECT_EQ(q[2] - q[0], 2u) << describe(op);
    }
    EXPECT_EQ(toffolis, 6u);
    EXPECT_EQ(d.layout().size(), d.num_qubits());
    EXPECT_TRUE(validate(d).empty());
}

TEST(NeighborLayout, SingleToffoliRelabeled) {
    Circuit c("spread");
    for (int i = 0; i < 8; i++) {
        c.add_qubit(i == 7 ? QubitKind::TARGET : QubitKind::CONTROL);
    }
    c.append(Operation::gate(OpKind::CCX, {0, 4, 7}));
    Circuit d = neighbor_layout(c);
    EXPECT_EQ(d.operations()[0].qubits, (std::vector<uint32_t>{0, 1, 2}));
    EXPECT_EQ(d.layout()[4], 1u);
    EXPECT_EQ(d.layout()[7], 2u);
}

TEST(NeighborLayout, InfeasibleOverlap) {
    Circuit c("overlap");
    for (int i = 0; i < 5; i++) {
        c.add_qubit(QubitKind::CONTROL);
    }
    c.append(Operation::gate(OpKind::CCX, {0, 1, 2}));
    c.append(Operation::gate(OpKind::CCX, {2, 3, 4}));
    EXPECT_THROW(neighbor_layout(c), std::invalid_argument);
}

TEST(NeighborLayout, PreservesSimulationUnderFixedSeed) {
    for (int n : {4, 7}) {
        Circuit d = defer_corrections(decompose_mct(n));
        Circuit l = neighbor_layout(d);
        NoiseModel noise = NoiseModel::from_hierarchy(0.05, 0.05);
        for (uint64_t input : {uint64_t{0}, (uint64_t{1} << n) - 1, (uint64_t{1} << (n + 1)) - 1}) {
            auto a = run_trajectory(d, input, noise, 99, input);
            auto b = run_trajectory(l, input, noise, 99, input);
            EXPECT_EQ(a.bits, b.bits);
            EXPECT_EQ(a.outcomes, b.outcomes);
            EXPECT_EQ(a.state.amplitudes(), b.state.amplitudes());
        }
        EXPECT_TRUE(check_against_oracle(l, n, policy_for(n)).ok) << "n=" << n;
    }
}

TEST(MergeLongRangeCx, MergesPatternAndKeepsOracle) {
    Circuit c("merge");
    for (int i = 0; i < 3; i++) {
        c.add_qubit(QubitKind::CONTROL);
    }
    c.append(Operation::gate(OpKind::CX, {0, 1}));
    c.append(Operation::gate(OpKind::CX, {1, 2}));
    c.append(Operation::gate(OpKind::CX, {0, 1}));
    c.append(Operation::gate(OpKind::CX, {1, 2}));
    Circuit m = merge_long_range_cx(c);
    ASSERT_EQ(m.operations().size(), 1u);
    EXPECT_EQ(m.operations()[0].qubits, (std::vector<uint32_t>{0, 2}));

    for (int n = 2; n <= 6; n++) {
        Circuit d = merge_long_range_cx(defer_corrections(decompose_mct(n)));
        EXPECT_TRUE(check_against_oracle(d, n, policy_for(n)).ok) << "n=" << n;
    }
}

std::vector<amplitude> haar_state(unsigned q, RngStream &rng) {
    std::vector<amplitude> v(size_t{1} << q);
    double norm = 0;
    for (auto &a : v) {
        // Box-Muller pairs give i.i.d. complex Gaussians, which normalize to a Haar-random state.
        double u1 = 1 - rng.uniform(), u2 = rng.uniform();
        double r = std::sqrt(-2 * std::log(u1));
        a = amplitude(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2));
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

TEST(Superposition, HaarRandomInputs) {
    for (int n = 2; n <= 5; n++) {
        for (const Circuit &c : {decompose_mct(n), defer_corrections(decompose_mct(n))}) {
            Simulator sim(c);
            RngStream gen(777, static_cast<uint64_t>(n));
            for (int t = 0; t < 64; t++) {
                auto input = haar_state(static_cast<unsigned>(n + 1), gen);
                auto expected = apply_mct_oracle(n, input);
                RngStream rng(31337, static_cast<uint64_t>(t));
                auto result = sim.run(input, NoiseModel::noiseless(), rng);
                EXPECT_NEAR(data_overlap(result.state, expected), 1.0, 1e-10) << "n=" << n << " trial " << t;
            }
        }
    }
}

}  // namespace
}  // namespace teledepth
