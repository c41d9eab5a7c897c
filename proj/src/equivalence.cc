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

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace teledepth {

namespace {

DenseMatrix single_qubit(OpKind kind) {
    const double r = 1 / std::sqrt(2.0);
    const amplitude I(0, 1);
    DenseMatrix m{2, std::vector<amplitude>(4)};
    switch (kind) {
        case OpKind::X:
            m.data = {0, 1, 1, 0};
            break;
        case OpKind::Y:
            m.data = {0, -I, I, 0};
            break;
        case OpKind::Z:
            m.data = {1, 0, 0, -1};
            break;
        case OpKind::H:
            m.data = {r, r, r, -r};
            break;
        case OpKind::S:
            m.data = {1, 0, 0, I};
            break;
        case OpKind::SDG:
            m.data = {1, 0, 0, -I};
            break;
        default:
            throw std::invalid_argument(fmt::format("{} is not a single-qubit gate", op_name(kind)));
    }
    return m;
}

struct Branch {
    std::vector<amplitude> state;
    std::vector<uint8_t> bits;
};

std::vector<amplitude> mat_vec(const DenseMatrix &m, const std::vector<amplitude> &v) {
    std::vector<amplitude> out(v.size());
    for (size_t r = 0; r < m.dim; r++) {
        for (size_t c = 0; c < m.dim; c++) {
            out[r] += m.at(r, c) * v[c];
        }
    }
    return out;
}

/// Runs `ops` on every branch, splitting at measurements. Measured qubits stay in the register,
/// projected onto their outcome.
std::vector<Branch> run_branches(std::span<const Operation> ops, unsigned num_qubits, Branch start) {
    std::vector<Branch> branches{std::move(start)};
    for (const auto &op : ops) {
        std::vector<Branch> next;
        for (auto &b : branches) {
            if (op.kind == OpKind::CLASSICAL_XOR) {
                b.bits[*op.cbit] = op.condition->evaluate(b.bits) ? 1 : 0;
                next.push_back(std::move(b));
            } else if (op.is_measurement()) {
                const uint32_t q = op.qubits[0];
                if (op.kind == OpKind::MEASURE_X) {
                    b.state = mat_vec(embed(single_qubit(OpKind::H), op.qubits, num_qubits), b.state);
                }
                for (int outcome = 0; outcome < 2; outcome++) {
                    Branch child = b;
                    for (size_t i = 0; i < child.state.size(); i++) {
                        if (static_cast<int>((i >> q) & 1) != outcome) {
                            child.state[i] = 0;
                        }
                    }
                    child.bits[*op.cbit] = static_cast<uint8_t>(outcome);
                    next.push_back(std::move(child));
                }
            } else if (op.kind == OpKind::BELL_PREP) {
                throw std::invalid_argument("rule certificates do not support BellPrep");
            } else {
                if (!op.condition || op.condition->evaluate(b.bits)) {
                    b.state = mat_vec(embed(gate_matrix(op.kind, op.qubits.size()), op.qubits, num_qubits), b.state);
                }
                next.push_back(std::move(b));
            }
        }
        branches = std::move(next);
    }
    return branches;
}

/// Unnormalized reference-register density matrix for each value of the visible bit.
std::map<int, std::vector<amplitude>> reference_states(const std::vector<Branch> &branches, uint32_t visible_bit,
                                                      unsigned support) {
    const size_t sdim = size_t{1} << support;
    std::map<int, std::vector<amplitude>> out;
    for (int v = 0; v < 2; v++) {
        out[v].assign(sdim * sdim, 0);
    }
    for (const auto &b : branches) {
        auto &rho = out[b.bits[visible_bit]];
        for (size_t r = 0; r < sdim; r++) {
            for (size_t rp = 0; rp < sdim; rp++) {
                amplitude acc = 0;
                for (size_t s = 0; s < sdim; s++) {
                    acc += b.state[s | (r << support)] * std::conj(b.state[s | (rp << support)]);
                }
                rho[r * sdim + rp] += acc;
            }
        }
    }
    return out;
}

}  // namespace

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m{dim, std::vector<amplitude>(dim * dim)};
    for (size_t i = 0; i < dim; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    DenseMatrix out{a.dim, std::vector<amplitude>(a.dim * a.dim)};
    for (size_t i = 0; i < a.dim; i++) {
        for (size_t k = 0; k < a.dim; k++) {
            amplitude x = a.at(i, k);
            if (x == amplitude(0)) {
                continue;
            }
            for (size_t j = 0; j < a.dim; j++) {
                out.at(i, j) += x * b.at(k, j);
            }
        }
    }
    return out;
}

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    double worst = 0;
    for (size_t i = 0; i < a.data.size(); i++) {
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
    }
    return worst;
}

DenseMatrix gate_matrix(OpKind kind, size_t arity) {
    if (gate_arity(kind) == 1) {
        return single_qubit(kind);
    }
    const size_t dim = size_t{1} << arity;
    const size_t all = dim - 1;
    DenseMatrix m{dim, std::vector<amplitude>(dim * dim)};
    switch (kind) {
        case OpKind::CX:
        case OpKind::CCX:
        case OpKind::MCX: {
            const size_t controls = (size_t{1} << (arity - 1)) - 1;
            const size_t target = size_t{1} << (arity - 1);
            for (size_t col = 0; col < dim; col++) {
                size_t row = (col & controls) == controls ? col ^ target : col;
                m.at(row, col) = 1;
            }
            break;
        }
        case OpKind::CZ:
        case OpKind::CCZ:
        case OpKind::MCZ:
            for (size_t col = 0; col < dim; col++) {
                m.at(col, col) = col == all ? -1 : 1;
            }
            break;
        default:
            throw std::invalid_argument(fmt::format("{} has no gate matrix", op_name(kind)));
    }
    return m;
}

DenseMatrix embed(const DenseMatrix &gate, std::span<const uint32_t> qubits, unsigned num_qubits) {
    const size_t dim = size_t{1} << num_qubits;
    if (gate.dim != size_t{1} << qubits.size()) {
        throw std::invalid_argument("gate matrix does not match its qubit list");
    }
    size_t mask = 0;
    for (uint32_t q : qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument(fmt::format("qubit {} outside a {}-qubit register", q, num_qubits));
        }
        mask |= size_t{1} << q;
    }
    DenseMatrix out{dim, std::vector<amplitude>(dim * dim)};
    for (size_t col = 0; col < dim; col++) {
        size_t sub = 0;
        for (size_t j = 0; j < qubits.size(); j++) {
            sub |= ((col >> qubits[j]) & 1) << j;
        }
        for (size_t r = 0; r < gate.dim; r++) {
            amplitude g = gate.at(r, sub);
            if (g == amplitude(0)) {
                continue;
            }
            size_t row = col & ~mask;
            for (size_t j = 0; j < qubits.size(); j++) {
                row |= ((r >> j) & 1) << qubits[j];
            }
            out.at(row, col) += g;
        }
    }
    return out;
}

DenseMatrix sequence_unitary(std::span<const Operation> ops, unsigned num_qubits, std::span<const uint8_t> bits) {
    DenseMatrix u = DenseMatrix::identity(size_t{1} << num_qubits);
    for (const auto &op : ops) {
        if (!op.is_gate()) {
            throw std::invalid_argument(fmt::format("{} is not a gate", describe(op)));
        }
        if (op.condition && !op.condition->evaluate(bits)) {
            continue;
        }
        u = multiply(embed(gate_matrix(op.kind, op.qubits.size()), op.qubits, num_qubits), u);
    }
    return u;
}

RuleCertificate certify_rule(const RewriteRule &rule, double tolerance) {
    RuleCertificate cert;
    cert.rule = rule.name;
    const auto lhs = rule.lhs();
    const bool gates_only = std::all_of(rule.replacement.begin(), rule.replacement.end(),
                                        [](const Operation &op) { return op.is_gate(); }) &&
                            rule.anchor.is_gate();
    const auto support = static_cast<unsigned>(rule.support);
    if (gates_only) {
        cert.method = "unitary";
        for (uint8_t c = 0; c < 2; c++) {
            std::vector<uint8_t> bits{c, 0, 0};
            double d = max_abs_difference(sequence_unitary(lhs, support, bits),
                                          sequence_unitary(rule.replacement, support, bits));
            cert.max_deviation = std::max(cert.max_deviation, d);
        }
    } else {
        cert.method = "choi";
        const unsigned total = 2 * support;
        const size_t sdim = size_t{1} << support;
        // Maximally entangled support/reference state: sum_s |s>|s> / sqrt(2^support).
        std::vector<amplitude> choi(size_t{1} << total);
        for (size_t s = 0; s < sdim; s++) {
            choi[s | (s << support)] = 1 / std::sqrt(static_cast<double>(sdim));
        }
        const uint32_t visible = rule.reinterprets_outcome() ? DERIVED_SLOT : MEASURED_SLOT;
        for (uint8_t c = 0; c < 2; c++) {
            Branch start{choi, {c, 0, 0}};
            auto left = reference_states(run_branches(lhs, total, start), MEASURED_SLOT, support);
            auto right = reference_states(run_branches(rule.replacement, total, start), visible, support);
            for (int v = 0; v < 2; v++) {
                for (size_t i = 0; i < left[v].size(); i++) {
                    cert.max_deviation = std::max(cert.max_deviation, std::abs(left[v][i] - right[v][i]));
                }
            }
        }
    }
    cert.passed = cert.max_deviation <= tolerance;
    return cert;
}

std::vector<RuleCertificate> certify_rule_table(double tolerance) {
    std::vector<RuleCertificate> out;
    for (const auto &rule : rewrite_rule_table()) {
        out.push_back(certify_rule(rule, tolerance));
    }
    return out;
}

}  // namespace teledepth
