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

#include "teledepth/rewrite_rules.h"

#include <algorithm>

namespace teledepth {

namespace {

Condition slot(uint32_t s) {
    return Condition{{s}, false};
}

Operation cond(OpKind kind, std::vector<uint32_t> qubits) {
    return Operation::conditional(kind, std::move(qubits), slot(CONDITION_SLOT));
}

RewriteRule through(std::string name, OpKind moving, uint32_t on, OpKind anchor, std::vector<Operation> extra) {
    RewriteRule r{std::move(name), 3, cond(moving, {on}), Operation::gate(anchor, {0, 1, 2}), {}};
    r.replacement.push_back(r.anchor);
    r.replacement.push_back(r.conditional);
    for (auto &e : extra) {
        r.replacement.push_back(std::move(e));
    }
    return r;
}

RewriteRule before_measurement(std::string name, OpKind moving, OpKind measurement, bool flips) {
    Operation m{measurement, {0}, MEASURED_SLOT, std::nullopt};
    RewriteRule r{std::move(name), 1, cond(moving, {0}), m, {m}};
    if (flips) {
        r.replacement.push_back(Operation::classical_xor(Condition{{MEASURED_SLOT, CONDITION_SLOT}, false}, DERIVED_SLOT));
    }
    return r;
}

/// Orderings of the anchor's qubits that describe the same gate.
std::vector<std::vector<uint32_t>> equivalent_orderings(const Operation &op) {
    std::vector<std::vector<uint32_t>> out{op.qubits};
    switch (op.kind) {
        case OpKind::CCX:
            out.push_back({op.qubits[1], op.qubits[0], op.qubits[2]});
            break;
        case OpKind::CZ:
        case OpKind::CCZ: {
            auto q = op.qubits;
            std::sort(q.begin(), q.end());
            out.clear();
            do {
                out.push_back(q);
            } while (std::next_permutation(q.begin(), q.end()));
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace

bool RewriteRule::reinterprets_outcome() const {
    return std::any_of(replacement.begin(), replacement.end(),
                       [](const Operation &op) { return op.kind == OpKind::CLASSICAL_XOR; });
}

std::vector<RewriteRule> rewrite_rule_table() {
    std::vector<RewriteRule> rules;
    // Conditional Paulis meeting a Toffoli.
    rules.push_back(through("x-on-ccx-control", OpKind::X, 0, OpKind::CCX, {cond(OpKind::CX, {1, 2})}));
    rules.push_back(through("x-on-ccx-target", OpKind::X, 2, OpKind::CCX, {}));
    rules.push_back(through("z-on-ccx-control", OpKind::Z, 0, OpKind::CCX, {}));
    rules.push_back(through("z-on-ccx-target", OpKind::Z, 2, OpKind::CCX, {cond(OpKind::CZ, {0, 1})}));
    rules.push_back(through("x-on-ccz", OpKind::X, 0, OpKind::CCZ, {cond(OpKind::CZ, {1, 2})}));
    rules.push_back(through("z-on-ccz", OpKind::Z, 0, OpKind::CCZ, {}));
    // Conditional Paulis meeting a measurement of the same qubit.
    rules.push_back(before_measurement("x-before-measure-z", OpKind::X, OpKind::MEASURE_Z, true));
    rules.push_back(before_measurement("z-before-measure-z", OpKind::Z, OpKind::MEASURE_Z, false));
    rules.push_back(before_measurement("z-before-measure-x", OpKind::Z, OpKind::MEASURE_X, true));
    rules.push_back(before_measurement("x-before-measure-x", OpKind::X, OpKind::MEASURE_X, false));
    return rules;
}

std::optional<RuleApplication> apply_rule(const RewriteRule &rule, const Operation &conditional,
                                          const Operation &anchor,
                                          const std::function<uint32_t()> &allocate_derived_bit) {
    if (!conditional.is_conditional_gate() || conditional.kind != rule.conditional.kind ||
        conditional.qubits.size() != 1 || anchor.kind != rule.anchor.kind || anchor.condition.has_value() ||
        anchor.qubits.size() != rule.support) {
        return std::nullopt;
    }
    const uint32_t local_target = rule.conditional.qubits[0];
    for (const auto &binding : equivalent_orderings(anchor)) {
        if (binding[local_target] != conditional.qubits[0]) {
            continue;
        }
        RuleApplication app;
        std::optional<uint32_t> derived;
        auto resolve = [&](const Condition &tmpl) {
            Condition out{{}, tmpl.parity};
            for (uint32_t s : tmpl.terms) {
                if (s == CONDITION_SLOT) {
                    out = combine_conditions(out, *conditional.condition);
                } else if (s == MEASURED_SLOT) {
                    out = combine_conditions(out, Condition{{*anchor.cbit}, false});
                } else {
                    out = combine_conditions(out, Condition{{*derived}, false});
                }
            }
            return out;
        };
        for (const auto &t : rule.replacement) {
            Operation op = t;
            for (auto &q : op.qubits) {
                q = binding[q];
            }
            if (op.cbit) {
                if (*op.cbit == MEASURED_SLOT) {
                    op.cbit = anchor.cbit;
                } else {
                    if (!derived) {
                        derived = allocate_derived_bit();
                    }
                    op.cbit = derived;
                }
            }
            if (op.condition) {
                op.condition = resolve(*op.condition);
            }
            app.replacement.push_back(std::move(op));
        }
        if (derived) {
            app.renamed_bit = std::make_pair(*anchor.cbit, *derived);
        }
        return app;
    }
    return std::nullopt;
}

}  // namespace teledepth
