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

#include <span>
#include <string>
#include <vector>

#include "teledepth/circuit.h"
#include "teledepth/rewrite_rules.h"
#include "teledepth/state_vector.h"

namespace teledepth {

/// Row-major 2^q x 2^q matrix. Basis bit j belongs to local qubit j.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<amplitude> data;

    amplitude &at(size_t row, size_t col) {
        return data[row * dim + col];
    }
    amplitude at(size_t row, size_t col) const {
        return data[row * dim + col];
    }
    static DenseMatrix identity(size_t dim);
};

DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b);
double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b);

/// Matrix of a gate kind on `arity` local qubits (controls first, target last for X-type gates).
DenseMatrix gate_matrix(OpKind kind, size_t arity);

/// Lifts a gate matrix acting on `qubits` to the full `num_qubits` register.
DenseMatrix embed(const DenseMatrix &gate, std::span<const uint32_t> qubits, unsigned num_qubits);

/// Product of a gate-only sequence. Conditional gates fire according to `bits`.
DenseMatrix sequence_unitary(std::span<const Operation> ops, unsigned num_qubits, std::span<const uint8_t> bits);

struct RuleCertificate {
    std::string rule;
    /// "unitary" for gate-only rules, "choi" for rules with a measurement.
    std::string method;
    bool passed = false;
    double max_deviation = 0;
};

/// Brute-force equivalence of a rule's two sides for both values of the condition bit.
///
/// Gate-only rules compare the dense unitaries. Rules with a measurement run both sides on the
/// Choi state (support entangled with an equal-size reference), branch over outcomes, and compare
/// the reference's unnormalized state for every value of the bit that later operations read.
RuleCertificate certify_rule(const RewriteRule &rule, double tolerance = 1e-12);

std::vector<RuleCertificate> certify_rule_table(double tolerance = 1e-12);

}  // namespace teledepth
