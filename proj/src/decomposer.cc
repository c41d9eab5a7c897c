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
#include <functional>
#include <numeric>

#include <fmt/format.h>

#include "teledepth/rewrite_rules.h"

namespace teledepth {

namespace {

using ResidualEmitter = std::function<void(Circuit &, std::span<const uint32_t>, uint32_t)>;

TeleportLevelPlan teleport_level(Circuit &host, std::span<const uint32_t> controls, uint32_t target, int k,
                                 const ResidualEmitter &emit_residual) {
    const auto n = static_cast<int>(controls.size());
    if (n < 2) {
        throw std::invalid_argument(fmt::format("teleport_expand needs at least 2 controls, got {}", n));
    }
    if (k < 1 || k > n) {
        throw std::invalid_argument(fmt::format("teleport_expand needs 1 <= k <= n, got k={} n={}", k, n));
    }

    TeleportLevelPlan plan;
    plan.k = k;
    const int groups = n / k;
    for (int g = 0; g < groups; g++) {
        plan.groups.emplace_back(controls.begin() + g * k, controls.begin() + (g + 1) * k);
    }
    plan.leftovers.assign(controls.begin() + groups * k, controls.end());

    for (const auto &group : plan.groups) {
        uint32_t e = host.add_qubit(QubitKind::ANCILLA);
        uint32_t e_out = host.add_qubit(QubitKind::ANCILLA);
        uint32_t z = host.add_cbit(BitOrigin::Z_MEASUREMENT);
        host.append(Operation::bell_prep(e, e_out));
        host.append(mct_gate(group, e));
        host.append(Operation::measure_z(e, z));
        host.append(Operation::conditional(OpKind::X, {e_out}, Condition{{z}, false}));
        plan.bell_pairs.emplace_back(e, e_out);
        plan.z_bits.push_back(z);
        plan.residual_controls.push_back(e_out);
    }
    plan.residual_controls.insert(plan.residual_controls.end(), plan.leftovers.begin(), plan.leftovers.end());

    emit_residual(host, plan.residual_controls, target);

    for (size_t g = 0; g < plan.groups.size(); g++) {
        uint32_t x = host.add_cbit(BitOrigin::X_MEASUREMENT);
        host.append(Operation::measure_x(plan.bell_pairs[g].second, x));
        Operation fix = multi_z_gate(plan.groups[g]);
        fix.condition = Condition{{x}, false};
        host.append(std::move(fix));
        plan.x_bits.push_back(x);
    }
    return plan;
}

void emit_plain(Circuit &host, std::span<const uint32_t> controls, uint32_t target) {
    host.append(mct_gate(controls, target));
}

void emit_recursive(Circuit &host, std::span<const uint32_t> controls, uint32_t target) {
    if (controls.size() <= 2) {
        emit_plain(host, controls, target);
        return;
    }
    teleport_level(host, controls, target, 2, emit_recursive);
}

Circuit mct_frame(int n, const std::string &name) {
    Circuit c(name);
    for (int i = 0; i < n; i++) {
        c.add_qubit(QubitKind::CONTROL);
    }
    c.add_qubit(QubitKind::TARGET);
    return c;
}

std::vector<uint32_t> iota_u32(int n) {
    std::vector<uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

}  // namespace

TeleportLevelPlan teleport_expand(Circuit &host, std::span<const uint32_t> controls, uint32_t target, int k) {
    return teleport_level(host, controls, target, k, emit_plain);
}

Circuit teleport_expand_circuit(int n, int k) {
    Circuit c = mct_frame(n, fmt::format("mct{}-teleport-k{}", n + 1, k));
    auto controls = iota_u32(n);
    teleport_expand(c, controls, static_cast<uint32_t>(n), k);
    return c;
}

Circuit decompose_mct(int n) {
    if (n < 2) {
        throw std::invalid_argument(fmt::format("decompose_mct needs n >= 2 controls, got {}", n));
    }
    Circuit c = mct_frame(n, fmt::format("mct{}", n + 1));
    auto controls = iota_u32(n);
    // The n = 2 base case is one k = 2 teleport whose residual is a CNOT.
    teleport_level(c, controls, static_cast<uint32_t>(n), 2, emit_recursive);
    return c;
}

Circuit defer_corrections(const Circuit &circuit) {
    require_valid(circuit);
    const auto rules = rewrite_rule_table();
    std::vector<Operation> ops = circuit.operations();
    std::vector<ClassicalBit> cbits = circuit.cbits();
    auto allocate = [&]() {
        auto index = static_cast<uint32_t>(cbits.size());
        cbits.push_back({index, BitOrigin::DERIVED_XOR});
        return index;
    };

    const size_t sweep_limit = 10 * std::max<size_t>(ops.size(), 1);
    size_t sweeps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        if (++sweeps > sweep_limit) {
            throw DeferralError(fmt::format("rewrite sweep limit {} exceeded", sweep_limit));
        }
        size_t i = 0;
        while (i < ops.size()) {
            const Operation &op = ops[i];
            if (!op.is_conditional_gate() || op.qubits.size() != 1) {
                i++;
                continue;
            }
            size_t j = i + 1;
            while (j < ops.size() && !ops[j].touches(op.qubits[0])) {
                j++;
            }
            if (j == ops.size()) {
                i++;
                continue;
            }
            std::optional<RuleApplication> app;
            for (const auto &rule : rules) {
                app = apply_rule(rule, op, ops[j], allocate);
                if (app) {
                    break;
                }
            }
            if (!app) {
                i++;
                continue;
            }
            // Everything strictly between i and j is disjoint from the moving gate.
            const size_t width = app->replacement.size();
            ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(j));
            ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(j), app->replacement.begin(), app->replacement.end());
            ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(i));
            if (app->renamed_bit) {
                auto [old_bit, new_bit] = *app->renamed_bit;
                for (size_t k = j - 1 + width; k < ops.size(); k++) {
                    if (ops[k].condition) {
                        for (auto &t : ops[k].condition->terms) {
                            if (t == old_bit) {
                                t = new_bit;
                            }
                        }
                    }
                }
            }
            changed = true;
        }
    }

    Circuit out(circuit.name());
    out.set_source(circuit.source());
    out.set_registries(circuit.qubits(), std::move(cbits));
    out.set_operations(std::move(ops));
    out.set_layout(circuit.layout());

    bool teleports = std::any_of(out.operations().begin(), out.operations().end(),
                                 [](const Operation &op) { return op.is_measurement() || op.condition; });
    auto layers = toffoli_layers(out);
    for (size_t k = 0; teleports && k < layers.size(); k++) {
        if (!is_toffoli(out.operations()[k].kind) || layers[k] <= 1) {
            continue;
        }
        const Operation &blocked = out.operations()[k];
        std::string blocker = "unknown";
        for (size_t p = k; p-- > 0;) {
            const Operation &prev = out.operations()[p];
            bool shares = std::any_of(blocked.qubits.begin(), blocked.qubits.end(),
                                      [&](uint32_t q) { return prev.touches(q); });
            if (shares) {
                blocker = fmt::format("op {} {}", p, describe(prev));
                break;
            }
        }
        throw DeferralError(fmt::format("Toffoli op {} {} stays in layer {}; blocked by {}", k, describe(blocked),
                                        layers[k], blocker));
    }
    return out;
}

Circuit neighbor_layout(const Circuit &circuit) {
    require_valid(circuit);
    constexpr uint32_t UNSET = UINT32_MAX;
    std::vector<uint32_t> perm(circuit.num_qubits(), UNSET);
    uint32_t next = 0;
    for (const auto &op : circuit.operations()) {
        if (!is_toffoli(op.kind)) {
            continue;
        }
        bool fresh = std::all_of(op.qubits.begin(), op.qubits.end(), [&](uint32_t q) { return perm[q] == UNSET; });
        bool placed = std::all_of(op.qubits.begin(), op.qubits.end(), [&](uint32_t q) { return perm[q] != UNSET; });
        if (placed) {
            std::vector<uint32_t> pos;
            for (uint32_t q : op.qubits) {
                pos.push_back(perm[q]);
            }
            std::sort(pos.begin(), pos.end());
            if (pos[2] - pos[0] == 2) {
                continue;
            }
        }
        if (!fresh) {
            throw std::invalid_argument(
                fmt::format("neighbor layout infeasible: {} shares qubits with an earlier Toffoli", describe(op)));
        }
        for (uint32_t q : op.qubits) {
            perm[q] = next++;
        }
    }
    for (auto &p : perm) {
        if (p == UNSET) {
            p = next++;
        }
    }

    std::vector<QubitRef> qubits;
    for (const auto &q : circuit.qubits()) {
        qubits.push_back({perm[q.index], q.kind});
    }
    std::vector<Operation> ops = circuit.operations();
    for (auto &op : ops) {
        for (auto &q : op.qubits) {
            q = perm[q];
        }
    }
    Circuit out(circuit.name());
    out.set_source(circuit.source());
    out.set_registries(std::move(qubits), circuit.cbits());
    out.set_operations(std::move(ops));
    if (!circuit.layout().empty()) {
        // Compose with an earlier layout so the metadata always maps original indices.
        std::vector<uint32_t> composed(circuit.layout().size());
        for (size_t i = 0; i < composed.size(); i++) {
            composed[i] = perm[circuit.layout()[i]];
        }
        perm = std::move(composed);
    }
    out.set_layout(std::move(perm));
    return out;
}

Circuit merge_long_range_cx(const Circuit &circuit) {
    const auto &in = circuit.operations();
    std::vector<Operation> ops;
    size_t i = 0;
    while (i < in.size()) {
        if (i + 3 < in.size()) {
            const Operation &a = in[i], &b = in[i + 1], &c = in[i + 2], &d = in[i + 3];
            bool all_cx = a.kind == OpKind::CX && b.kind == OpKind::CX && c.kind == OpKind::CX && d.kind == OpKind::CX;
            if (all_cx && a.condition == b.condition && a.condition == c.condition && a.condition == d.condition &&
                a.qubits == c.qubits && b.qubits == d.qubits && a.qubits[1] == b.qubits[0] &&
                a.qubits[0] != b.qubits[1]) {
                Operation merged = Operation::gate(OpKind::CX, {a.qubits[0], b.qubits[1]});
                merged.condition = a.condition;
                ops.push_back(std::move(merged));
                i += 4;
                continue;
            }
        }
        ops.push_back(in[i]);
        i++;
    }
    Circuit out = circuit;
    out.set_operations(std::move(ops));
    return out;
}

}  // namespace teledepth
