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

#include "teledepth/circuit.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "teledepth/decomposer.h"

namespace teledepth {
namespace {

bool has_code(const std::vector<ValidationError> &errors, const std::string &code) {
    return std::any_of(errors.begin(), errors.end(), [&](const ValidationError &e) { return e.code == code; });
}

Circuit three_qubits() {
    Circuit c("t");
    c.add_qubit(QubitKind::CONTROL);
    c.add_qubit(QubitKind::CONTROL);
    c.add_qubit(QubitKind::TARGET);
    return c;
}

TEST(Validate, EmptyCircuitIsOk) {
    EXPECT_TRUE(validate(Circuit()).empty());
}

TEST(Validate, UseAfterMeasure) {
    Circuit c = three_qubits();
    uint32_t b = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    c.append(Operation::measure_z(0, b));
    c.append(Operation::gate(OpKind::X, {0}));
    auto errors = validate(c);
    ASSERT_TRUE(has_code(errors, "use-after-measure"));
    EXPECT_EQ(errors[0].op_index, 1u);
}

TEST(Validate, DanglingConditionBit) {
    Circuit c = three_qubits();
    uint32_t b = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    c.append(Operation::conditional(OpKind::X, {0}, Condition{{b}, false}));
    c.append(Operation::measure_z(1, b));
    EXPECT_TRUE(has_code(validate(c), "dangling-condition-bit"));
}

TEST(Validate, ArityAndRepeats) {
    Circuit c = three_qubits();
    c.append(Operation{OpKind::CCX, {0, 1}, std::nullopt, std::nullopt});
    c.append(Operation{OpKind::CX, {1, 1}, std::nullopt, std::nullopt});
    auto errors = validate(c);
    EXPECT_TRUE(has_code(errors, "arity"));
    EXPECT_TRUE(has_code(errors, "repeated-qubit"));
}

TEST(Validate, ConditionOnMeasurementRejected) {
    Circuit c = three_qubits();
    uint32_t a = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    uint32_t b = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    c.append(Operation::measure_z(0, a));
    Operation m = Operation::measure_z(1, b);
    m.condition = Condition{{a}, false};
    c.append(m);
    EXPECT_TRUE(has_code(validate(c), "condition-on-non-gate"));
}

TEST(Validate, BitWrittenTwice) {
    Circuit c = three_qubits();
    uint32_t a = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    c.append(Operation::measure_z(0, a));
    c.append(Operation::measure_z(1, a));
    EXPECT_TRUE(has_code(validate(c), "cbit-rewritten"));
}

TEST(Validate, UnknownQubit) {
    Circuit c = three_qubits();
    c.append(Operation::gate(OpKind::X, {9}));
    EXPECT_TRUE(has_code(validate(c), "unknown-qubit"));
    EXPECT_THROW(require_valid(c), std::invalid_argument);
}

TEST(Validate, DecomposedMct8IsOk) {
    for (int n = 2; n <= 12; n++) {
        auto errors = validate(decompose_mct(n));
        EXPECT_TRUE(errors.empty()) << "n=" << n << ": " << (errors.empty() ? "" : errors[0].message);
        EXPECT_TRUE(validate(defer_corrections(decompose_mct(n))).empty()) << "n=" << n;
    }
}

TEST(ToffoliDepth, Basics) {
    Circuit c = three_qubits();
    EXPECT_EQ(toffoli_depth(c), 0u);
    EXPECT_EQ(toffoli_count(c), 0u);
    c.append(Operation::gate(OpKind::CCX, {0, 1, 2}));
    EXPECT_EQ(toffoli_depth(c), 1u);

    Circuit d("disjoint");
    for (int i = 0; i < 6; i++) {
        d.add_qubit(i % 3 == 2 ? QubitKind::TARGET : QubitKind::CONTROL);
    }
    d.append(Operation::gate(OpKind::CCX, {0, 1, 2}));
    d.append(Operation::gate(OpKind::CCZ, {3, 4, 5}));
    EXPECT_EQ(toffoli_depth(d), 1u);
    EXPECT_EQ(toffoli_count(d), 2u);
    d.append(Operation::gate(OpKind::CCX, {2, 3, 0}));
    EXPECT_EQ(toffoli_depth(d), 2u);
}

TEST(ToffoliDepth, ClassicalDependencyOrdersLayers) {
    Circuit c("classical");
    for (int i = 0; i < 7; i++) {
        c.add_qubit(QubitKind::CONTROL);
    }
    uint32_t b = c.add_cbit(BitOrigin::Z_MEASUREMENT);
    c.append(Operation::gate(OpKind::CCX, {0, 1, 2}));
    c.append(Operation::measure_z(2, b));
    c.append(Operation::conditional(OpKind::X, {3}, Condition{{b}, false}));
    c.append(Operation::gate(OpKind::CCX, {3, 4, 5}));
    EXPECT_EQ(toffoli_depth(c), 2u);
}

TEST(Metrics, DecomposedMct8) {
    Circuit c = decompose_mct(7);
    EXPECT_EQ(toffoli_count(c), 6u);
    EXPECT_EQ(toffoli_depth(c), 3u);
    auto r = resource_counts(c);
    EXPECT_EQ(r.ancillas, 10u);
    EXPECT_EQ(r.bell_pairs, 5u);
    EXPECT_EQ(r.measurements(), 10u);
    EXPECT_EQ(r.measurements_z, 5u);
    EXPECT_EQ(r.measurements_x, 5u);
}

TEST(Metrics, DecomposedMct5) {
    Circuit c = decompose_mct(4);
    EXPECT_EQ(toffoli_count(c), 3u);
    auto r = resource_counts(c);
    EXPECT_EQ(r.measurements(), 4u);
    EXPECT_EQ(r.ancillas, 4u);
    EXPECT_EQ(r.bell_pairs, 2u);
}

TEST(Metrics, DepthNeverExceedsCount) {
    for (int n = 2; n <= 20; n++) {
        Circuit c = decompose_mct(n);
        EXPECT_LE(toffoli_depth(c), toffoli_count(c));
    }
}

TEST(Conditions, CombineCancelsRepeats) {
    Condition a{{3, 1}, false}, b{{1, 5}, true};
    Condition c = combine_conditions(a, b);
    EXPECT_EQ(c.terms, (std::vector<uint32_t>{3, 5}));
    EXPECT_TRUE(c.parity);
    std::vector<uint8_t> bits{0, 1, 0, 1, 0, 0};
    // 1 ^ 0 ^ 1 = 0 -> does not fire.
    EXPECT_FALSE(c.evaluate(bits));
    bits[5] = 1;
    EXPECT_TRUE(c.evaluate(bits));
    bits[3] = 0;
    EXPECT_FALSE(c.evaluate(bits));
}

TEST(Names, RoundTrip) {
    for (auto kind : {OpKind::X, OpKind::SDG, OpKind::CCZ, OpKind::MCX, OpKind::BELL_PREP, OpKind::CLASSICAL_XOR}) {
        EXPECT_EQ(parse_op_name(op_name(kind)), kind);
    }
    EXPECT_FALSE(parse_op_name("FOO").has_value());
}

TEST(MctGate, KindBySize) {
    std::vector<uint32_t> c0{}, c1{0}, c2{0, 1}, c3{0, 1, 2};
    EXPECT_EQ(mct_gate(c0, 5).kind, OpKind::X);
    EXPECT_EQ(mct_gate(c1, 5).kind, OpKind::CX);
    EXPECT_EQ(mct_gate(c2, 5).kind, OpKind::CCX);
    EXPECT_EQ(mct_gate(c3, 5).kind, OpKind::MCX);
    EXPECT_EQ(multi_z_gate(c2).kind, OpKind::CZ);
}

}  // namespace
}  // namespace teledepth
