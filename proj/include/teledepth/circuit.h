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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace teledepth {

enum class QubitKind : uint8_t { CONTROL, TARGET, ANCILLA };
enum class BitOrigin : uint8_t { Z_MEASUREMENT, X_MEASUREMENT, DERIVED_XOR };

enum class OpKind : uint8_t {
    X,
    Y,
    Z,
    H,
    S,
    SDG,
    CX,
    CZ,
    CCX,
    CCZ,
    MCX,  // >= 3 controls, target last.
    MCZ,  // >= 4 qubits, symmetric.
    BELL_PREP,
    MEASURE_Z,
    MEASURE_X,
    CLASSICAL_XOR,
};

struct QubitRef {
    uint32_t index;
    QubitKind kind;
    bool operator==(const QubitRef &) const = default;
};

struct ClassicalBit {
    uint32_t index;
    BitOrigin origin;
    bool operator==(const ClassicalBit &) const = default;
};

/// XOR-of-bits predicate. A conditioned gate fires iff XOR(terms) ^ parity == 1.
/// For CLASSICAL_XOR the same record describes the written value XOR(terms) ^ parity.
struct Condition {
    std::vector<uint32_t> terms;
    bool parity = false;

    bool evaluate(std::span<const uint8_t> bits) const;
    bool operator==(const Condition &) const = default;
};

/// Condition whose value is a XOR b. Repeated terms cancel; terms come out sorted.
Condition combine_conditions(const Condition &a, const Condition &b);

struct Operation {
    OpKind kind;
    std::vector<uint32_t> qubits;
    std::optional<uint32_t> cbit;
    std::optional<Condition> condition;

    bool is_gate() const;
    bool is_conditional_gate() const {
        return is_gate() && condition.has_value();
    }
    bool is_measurement() const {
        return kind == OpKind::MEASURE_Z || kind == OpKind::MEASURE_X;
    }
    bool touches(uint32_t qubit) const;
    bool operator==(const Operation &) const = default;

    static Operation gate(OpKind kind, std::vector<uint32_t> qubits);
    static Operation conditional(OpKind kind, std::vector<uint32_t> qubits, Condition condition);
    static Operation bell_prep(uint32_t a, uint32_t b);
    static Operation measure_z(uint32_t qubit, uint32_t bit);
    static Operation measure_x(uint32_t qubit, uint32_t bit);
    static Operation classical_xor(Condition inputs, uint32_t bit);
};

bool is_toffoli(OpKind kind);
bool is_gate_kind(OpKind kind);
/// Exact qubit count for the kind, or 0 for the variadic MCX/MCZ kinds.
size_t gate_arity(OpKind kind);
std::string_view op_name(OpKind kind);
std::optional<OpKind> parse_op_name(std::string_view name);
std::string_view qubit_kind_name(QubitKind kind);
std::optional<QubitKind> parse_qubit_kind(std::string_view name);
std::string_view bit_origin_name(BitOrigin origin);
std::optional<BitOrigin> parse_bit_origin(std::string_view name);

/// X, CX, CCX or MCX depending on the number of controls.
Operation mct_gate(std::span<const uint32_t> controls, uint32_t target);
/// Z, CZ, CCZ or MCZ acting on all given qubits.
Operation multi_z_gate(std::span<const uint32_t> qubits);

enum class CircuitSource : uint8_t { SYNTHESIZED, LOADED };

/// Ordered operation list over a qubit registry and a classical-bit registry.
///
/// Qubit and bit indices are dense (0..N-1). Transformations never mutate a circuit in place;
/// they build a new one.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::string name) : name_(std::move(name)) {
    }

    uint32_t add_qubit(QubitKind kind);
    uint32_t add_cbit(BitOrigin origin);
    void append(Operation op);

    /// Registry entries must be supplied in any order; they are stored sorted by index.
    void set_registries(std::vector<QubitRef> qubits, std::vector<ClassicalBit> cbits);
    void set_operations(std::vector<Operation> ops) {
        ops_ = std::move(ops);
    }

    const std::vector<QubitRef> &qubits() const {
        return qubits_;
    }
    const std::vector<ClassicalBit> &cbits() const {
        return cbits_;
    }
    const std::vector<Operation> &operations() const {
        return ops_;
    }
    size_t num_qubits() const {
        return qubits_.size();
    }
    size_t num_cbits() const {
        return cbits_.size();
    }
    QubitKind qubit_kind(uint32_t index) const;

    /// Non-ancilla qubits in ascending index order. Basis-state inputs and outputs use bit k for
    /// the k-th entry of this list.
    std::vector<uint32_t> data_qubits() const;

    const std::string &name() const {
        return name_;
    }
    void set_name(std::string name) {
        name_ = std::move(name);
    }
    CircuitSource source() const {
        return source_;
    }
    void set_source(CircuitSource source) {
        source_ = source;
    }
    /// old index -> new index, recorded by neighbor_layout. Empty when no layout was applied.
    const std::vector<uint32_t> &layout() const {
        return layout_;
    }
    void set_layout(std::vector<uint32_t> layout) {
        layout_ = std::move(layout);
    }

    /// Structural equality: registries and operations (metadata ignored).
    bool same_structure(const Circuit &other) const;

   private:
    std::string name_;
    CircuitSource source_ = CircuitSource::SYNTHESIZED;
    std::vector<QubitRef> qubits_;
    std::vector<ClassicalBit> cbits_;
    std::vector<Operation> ops_;
    std::vector<uint32_t> layout_;
};

/// Appends `block` to `host`. `qubit_map[i]` is the host qubit for block qubit i, or nullopt to
/// allocate a fresh host qubit of the same kind. Block bits are always freshly allocated.
void append_mapped(Circuit &host, const Circuit &block, std::span<const std::optional<uint32_t>> qubit_map);

struct ValidationError {
    static constexpr size_t NO_OP = static_cast<size_t>(-1);
    size_t op_index;
    std::string code;
    std::string message;
};

std::vector<ValidationError> validate(const Circuit &circuit);
/// Throws std::invalid_argument carrying the first few violations.
void require_valid(const Circuit &circuit);

size_t toffoli_count(const Circuit &circuit);

/// Critical-path length counting only CCX/CCZ. Greedy ASAP layering: every operation inherits the
/// highest Toffoli layer among the qubits it touches and the bits it reads or writes; a Toffoli
/// adds one. Throws std::invalid_argument for invalid circuits.
size_t toffoli_depth(const Circuit &circuit);

/// Toffoli layer (1-based) of every operation as computed by toffoli_depth; 0 for operations not
/// preceded by any Toffoli on their dependency cone.
std::vector<size_t> toffoli_layers(const Circuit &circuit);

struct ResourceCounts {
    size_t ancillas = 0;
    size_t bell_pairs = 0;
    size_t measurements_z = 0;
    size_t measurements_x = 0;
    size_t conditional_gates = 0;

    size_t measurements() const {
        return measurements_z + measurements_x;
    }
    bool operator==(const ResourceCounts &) const = default;
};

ResourceCounts resource_counts(const Circuit &circuit);

std::string describe(const Operation &op);

}  // namespace teledepth
