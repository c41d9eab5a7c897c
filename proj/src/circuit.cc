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
#include <array>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace teledepth {

namespace {

struct KindInfo {
    OpKind kind;
    std::string_view name;
    size_t arity;
    bool gate;
};

constexpr std::array<KindInfo, 16> KIND_TABLE{{
    {OpKind::X, "X", 1, true},
    {OpKind::Y, "Y", 1, true},
    {OpKind::Z, "Z", 1, true},
    {OpKind::H, "H", 1, true},
    {OpKind::S, "S", 1, true},
    {OpKind::SDG, "SDG", 1, true},
    {OpKind::CX, "CX", 2, true},
    {OpKind::CZ, "CZ", 2, true},
    {OpKind::CCX, "CCX", 3, true},
    {OpKind::CCZ, "CCZ", 3, true},
    {OpKind::MCX, "MCX", 0, true},
    {OpKind::MCZ, "MCZ", 0, true},
    {OpKind::BELL_PREP, "BellPrep", 2, false},
    {OpKind::MEASURE_Z, "MeasureZ", 1, false},
    {OpKind::MEASURE_X, "MeasureX", 1, false},
    {OpKind::CLASSICAL_XOR, "ClassicalXor", 0, false},
}};

const KindInfo &info(OpKind kind) {
    return KIND_TABLE[static_cast<size_t>(kind)];
}

}  // namespace

bool Condition::evaluate(std::span<const uint8_t> bits) const {
    bool v = parity;
    for (uint32_t t : terms) {
        v ^= bits[t] != 0;
    }
    return v;
}

Condition combine_conditions(const Condition &a, const Condition &b) {
    std::vector<uint32_t> all = a.terms;
    all.insert(all.end(), b.terms.begin(), b.terms.end());
    std::sort(all.begin(), all.end());
    Condition out;
    out.parity = a.parity ^ b.parity;
    for (size_t i = 0; i < all.size();) {
        size_t j = i;
        while (j < all.size() && all[j] == all[i]) {
            j++;
        }
        if ((j - i) % 2 == 1) {
            out.terms.push_back(all[i]);
        }
        i = j;
    }
    return out;
}

bool Operation::is_gate() const {
    return is_gate_kind(kind);
}

bool Operation::touches(uint32_t qubit) const {
    return std::find(qubits.begin(), qubits.end(), qubit) != qubits.end();
}

Operation Operation::gate(OpKind kind, std::vector<uint32_t> qubits) {
    return Operation{kind, std::move(qubits), std::nullopt, std::nullopt};
}

Operation Operation::conditional(OpKind kind, std::vector<uint32_t> qubits, Condition condition) {
    return Operation{kind, std::move(qubits), std::nullopt, std::move(condition)};
}

Operation Operation::bell_prep(uint32_t a, uint32_t b) {
    return Operation{OpKind::BELL_PREP, {a, b}, std::nullopt, std::nullopt};
}

Operation Operation::measure_z(uint32_t qubit, uint32_t bit) {
    return Operation{OpKind::MEASURE_Z, {qubit}, bit, std::nullopt};
}

Operation Operation::measure_x(uint32_t qubit, uint32_t bit) {
    return Operation{OpKind::MEASURE_X, {qubit}, bit, std::nullopt};
}

Operation Operation::classical_xor(Condition inputs, uint32_t bit) {
    return Operation{OpKind::CLASSICAL_XOR, {}, bit, std::move(inputs)};
}

bool is_toffoli(OpKind kind) {
    return kind == OpKind::CCX || kind == OpKind::CCZ;
}

bool is_gate_kind(OpKind kind) {
    return info(kind).gate;
}

size_t gate_arity(OpKind kind) {
    return info(kind).arity;
}

std::string_view op_name(OpKind kind) {
    return info(kind).name;
}

std::optional<OpKind> parse_op_name(std::string_view name) {
    for (const auto &e : KIND_TABLE) {
        if (e.name == name) {
            return e.kind;
        }
    }
    return std::nullopt;
}

std::string_view qubit_kind_name(QubitKind kind) {
    switch (kind) {
        case QubitKind::CONTROL:
            return "control";
        case QubitKind::TARGET:
            return "target";
        case QubitKind::ANCILLA:
            return "ancilla";
    }
    return "?";
}

std::optional<QubitKind> parse_qubit_kind(std::string_view name) {
    for (auto k : {QubitKind::CONTROL, QubitKind::TARGET, QubitKind::ANCILLA}) {
        if (qubit_kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view bit_origin_name(BitOrigin origin) {
    switch (origin) {
        case BitOrigin::Z_MEASUREMENT:
            return "z-measurement";
        case BitOrigin::X_MEASUREMENT:
            return "x-measurement";
        case BitOrigin::DERIVED_XOR:
            return "derived-xor";
    }
    return "?";
}

std::optional<BitOrigin> parse_bit_origin(std::string_view name) {
    for (auto o : {BitOrigin::Z_MEASUREMENT, BitOrigin::X_MEASUREMENT, BitOrigin::DERIVED_XOR}) {
        if (bit_origin_name(o) == name) {
            return o;
        }
    }
    return std::nullopt;
}

Operation mct_gate(std::span<const uint32_t> controls, uint32_t target) {
    std::vector<uint32_t> qs(controls.begin(), controls.end());
    qs.push_back(target);
    switch (controls.size()) {
        case 0:
            return Operation::gate(OpKind::X, std::move(qs));
        case 1:
            return Operation::gate(OpKind::CX, std::move(qs));
        case 2:
            return Operation::gate(OpKind::CCX, std::move(qs));
        default:
            return Operation::gate(OpKind::MCX, std::move(qs));
    }
}

Operation multi_z_gate(std::span<const uint32_t> qubits) {
    std::vector<uint32_t> qs(qubits.begin(), qubits.end());
    switch (qs.size()) {
        case 0:
            throw std::invalid_argument("multi_z_gate needs at least one qubit");
        case 1:
            return Operation::gate(OpKind::Z, std::move(qs));
        case 2:
            return Operation::gate(OpKind::CZ, std::move(qs));
        case 3:
            return Operation::gate(OpKind::CCZ, std::move(qs));
        default:
            return Operation::gate(OpKind::MCZ, std::move(qs));
    }
}

uint32_t Circuit::add_qubit(QubitKind kind) {
    auto index = static_cast<uint32_t>(qubits_.size());
    qubits_.push_back({index, kind});
    return index;
}

uint32_t Circuit::add_cbit(BitOrigin origin) {
    auto index = static_cast<uint32_t>(cbits_.size());
    cbits_.push_back({index, origin});
    return index;
}

void Circuit::append(Operation op) {
    ops_.push_back(std::move(op));
}

void Circuit::set_registries(std::vector<QubitRef> qubits, std::vector<ClassicalBit> cbits) {
    std::stable_sort(qubits.begin(), qubits.end(), [](auto &a, auto &b) { return a.index < b.index; });
    std::stable_sort(cbits.begin(), cbits.end(), [](auto &a, auto &b) { return a.index < b.index; });
    qubits_ = std::move(qubits);
    cbits_ = std::move(cbits);
}

QubitKind Circuit::qubit_kind(uint32_t index) const {
    if (index >= qubits_.size()) {
        throw std::out_of_range(fmt::format("qubit {} not in registry", index));
    }
    return qubits_[index].kind;
}

std::vector<uint32_t> Circuit::data_qubits() const {
    std::vector<uint32_t> out;
    for (const auto &q : qubits_) {
        if (q.kind != QubitKind::ANCILLA) {
            out.push_back(q.index);
        }
    }
    return out;
}

bool Circuit::same_structure(const Circuit &other) const {
    return qubits_ == other.qubits_ && cbits_ == other.cbits_ && ops_ == other.ops_;
}

void append_mapped(Circuit &host, const Circuit &block, std::span<const std::optional<uint32_t>> qubit_map) {
    if (qubit_map.size() != block.num_qubits()) {
        throw std::invalid_argument("append_mapped: qubit map size does not match block");
    }
    std::vector<uint32_t> qmap(block.num_qubits());
    for (size_t i = 0; i < qmap.size(); i++) {
        qmap[i] = qubit_map[i].has_value() ? *qubit_map[i] : host.add_qubit(block.qubits()[i].kind);
    }
    std::vector<uint32_t> bmap(block.num_cbits());
    for (size_t i = 0; i < bmap.size(); i++) {
        bmap[i] = host.add_cbit(block.cbits()[i].origin);
    }
    for (Operation op : block.operations()) {
        for (auto &q : op.qubits) {
            q = qmap[q];
        }
        if (op.cbit) {
            op.cbit = bmap[*op.cbit];
        }
        if (op.condition) {
            for (auto &t : op.condition->terms) {
                t = bmap[t];
            }
        }
        host.append(std::move(op));
    }
}

std::vector<ValidationError> validate(const Circuit &circuit) {
    std::vector<ValidationError> errors;
    auto fail = [&](size_t op, std::string code, std::string message) {
        errors.push_back({op, std::move(code), std::move(message)});
    };

    const auto &qubits = circuit.qubits();
    const auto &cbits = circuit.cbits();
    for (size_t i = 0; i < qubits.size(); i++) {
        if (qubits[i].index != i) {
            fail(ValidationError::NO_OP, i > 0 && qubits[i].index == qubits[i - 1].index ? "duplicate-qubit" : "qubit-index-range",
                 fmt::format("qubit registry entry {} has index {}", i, qubits[i].index));
        }
    }
    for (size_t i = 0; i < cbits.size(); i++) {
        if (cbits[i].index != i) {
            fail(ValidationError::NO_OP, i > 0 && cbits[i].index == cbits[i - 1].index ? "duplicate-cbit" : "cbit-index-range",
                 fmt::format("cbit registry entry {} has index {}", i, cbits[i].index));
        }
    }
    if (!errors.empty()) {
        return errors;
    }

    // Per-qubit: 0 untouched, 1 live, 2 measured.
    std::vector<uint8_t> qstate(qubits.size(), 0);
    std::vector<uint8_t> written(cbits.size(), 0);
    const auto &ops = circuit.operations();
    for (size_t k = 0; k < ops.size(); k++) {
        const Operation &op = ops[k];
        const std::string_view name = op_name(op.kind);

        bool qubits_ok = true;
        for (size_t a = 0; a < op.qubits.size(); a++) {
            if (op.qubits[a] >= qubits.size()) {
                fail(k, "unknown-qubit", fmt::format("{} references qubit {} outside the registry", name, op.qubits[a]));
                qubits_ok = false;
            }
            for (size_t b = 0; b < a; b++) {
                if (op.qubits[a] == op.qubits[b]) {
                    fail(k, "repeated-qubit", fmt::format("{} lists qubit {} twice", name, op.qubits[a]));
                }
            }
        }

        size_t arity = gate_arity(op.kind);
        if (op.kind == OpKind::CLASSICAL_XOR) {
            if (!op.qubits.empty()) {
                fail(k, "arity", "ClassicalXor takes no qubits");
            }
        } else if (op.kind == OpKind::MCX || op.kind == OpKind::MCZ) {
            if (op.qubits.size() < 4) {
                fail(k, "arity", fmt::format("{} needs at least 4 qubits, got {}", name, op.qubits.size()));
            }
        } else if (op.qubits.size() != arity) {
            fail(k, "arity", fmt::format("{} needs {} qubits, got {}", name, arity, op.qubits.size()));
        }

        if (op.condition) {
            if (!op.is_gate() && op.kind != OpKind::CLASSICAL_XOR) {
                fail(k, "condition-on-non-gate", fmt::format("{} cannot be conditioned", name));
            }
            if (op.condition->terms.empty()) {
                fail(k, "empty-condition", fmt::format("{} has a condition with no terms", name));
            }
            for (uint32_t t : op.condition->terms) {
                if (t >= cbits.size()) {
                    fail(k, "unknown-cbit", fmt::format("{} reads cbit {} outside the registry", name, t));
                } else if (!written[t]) {
                    fail(k, "dangling-condition-bit", fmt::format("{} reads cbit {} before it is written", name, t));
                }
            }
        } else if (op.kind == OpKind::CLASSICAL_XOR) {
            fail(k, "empty-condition", "ClassicalXor has no inputs");
        }

        bool writes_bit = op.is_measurement() || op.kind == OpKind::CLASSICAL_XOR;
        if (writes_bit != op.cbit.has_value()) {
            fail(k, writes_bit ? "missing-cbit" : "unexpected-cbit",
                 fmt::format("{} {} an output cbit", name, writes_bit ? "requires" : "does not take"));
        }
        if (writes_bit && op.cbit) {
            uint32_t b = *op.cbit;
            if (b >= cbits.size()) {
                fail(k, "unknown-cbit", fmt::format("{} writes cbit {} outside the registry", name, b));
            } else {
                if (written[b]) {
                    fail(k, "cbit-rewritten", fmt::format("{} writes cbit {} a second time", name, b));
                }
                BitOrigin expected = op.kind == OpKind::MEASURE_Z   ? BitOrigin::Z_MEASUREMENT
                                     : op.kind == OpKind::MEASURE_X ? BitOrigin::X_MEASUREMENT
                                                                    : BitOrigin::DERIVED_XOR;
                if (cbits[b].origin != expected) {
                    fail(k, "origin-mismatch",
                         fmt::format("{} writes cbit {} declared as {}", name, b, bit_origin_name(cbits[b].origin)));
                }
                written[b] = 1;
            }
        }

        if (!qubits_ok) {
            continue;
        }
        for (uint32_t q : op.qubits) {
            if (qstate[q] == 2) {
                fail(k, "use-after-measure", fmt::format("{} acts on qubit {} after it was measured", name, q));
            } else if (op.kind == OpKind::BELL_PREP && qstate[q] == 1) {
                fail(k, "bellprep-on-live-qubit", fmt::format("BellPrep on qubit {} which is already in use", q));
            }
        }
        for (uint32_t q : op.qubits) {
            qstate[q] = op.is_measurement() ? 2 : 1;
        }
    }
    return errors;
}

void require_valid(const Circuit &circuit) {
    auto errors = validate(circuit);
    if (errors.empty()) {
        return;
    }
    std::string msg = fmt::format("invalid circuit '{}':", circuit.name());
    for (size_t i = 0; i < errors.size() && i < 5; i++) {
        msg += fmt::format(" [{}] {};", errors[i].code, errors[i].message);
    }
    throw std::invalid_argument(msg);
}

size_t toffoli_count(const Circuit &circuit) {
    return std::count_if(circuit.operations().begin(), circuit.operations().end(),
                         [](const Operation &op) { return is_toffoli(op.kind); });
}

std::vector<size_t> toffoli_layers(const Circuit &circuit) {
    require_valid(circuit);
    std::vector<size_t> qlayer(circuit.num_qubits(), 0);
    std::vector<size_t> blayer(circuit.num_cbits(), 0);
    std::vector<size_t> out;
    out.reserve(circuit.operations().size());
    for (const auto &op : circuit.operations()) {
        size_t layer = 0;
        for (uint32_t q : op.qubits) {
            layer = std::max(layer, qlayer[q]);
        }
        if (op.condition) {
            for (uint32_t t : op.condition->terms) {
                layer = std::max(layer, blayer[t]);
            }
        }
        if (is_toffoli(op.kind)) {
            layer++;
        }
        for (uint32_t q : op.qubits) {
            qlayer[q] = layer;
        }
        if (op.cbit) {
            blayer[*op.cbit] = layer;
        }
        out.push_back(layer);
    }
    return out;
}

size_t toffoli_depth(const Circuit &circuit) {
    auto layers = toffoli_layers(circuit);
    size_t depth = 0;
    for (size_t l : layers) {
        depth = std::max(depth, l);
    }
    return depth;
}

ResourceCounts resource_counts(const Circuit &circuit) {
    ResourceCounts rc;
    for (const auto &q : circuit.qubits()) {
        rc.ancillas += q.kind == QubitKind::ANCILLA;
    }
    for (const auto &op : circuit.operations()) {
        rc.bell_pairs += op.kind == OpKind::BELL_PREP;
        rc.measurements_z += op.kind == OpKind::MEASURE_Z;
        rc.measurements_x += op.kind == OpKind::MEASURE_X;
        rc.conditional_gates += op.is_conditional_gate();
    }
    return rc;
}

std::string describe(const Operation &op) {
    std::string s = fmt::format("{}({})", op_name(op.kind), fmt::join(op.qubits, ","));
    if (op.cbit) {
        s += fmt::format(" -> c{}", *op.cbit);
    }
    if (op.condition) {
        s += fmt::format(" if xor(c{}){}", fmt::join(op.condition->terms, ",c"), op.condition->parity ? "^1" : "");
    }
    return s;
}

}  // namespace teledepth
