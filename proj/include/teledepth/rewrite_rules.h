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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "teledepth/circuit.h"

namespace teledepth {

/// Local classical-bit slots used by rule templates.
constexpr uint32_t CONDITION_SLOT = 0;  // the bit(s) the moving gate is conditioned on
constexpr uint32_t MEASURED_SLOT = 1;   // outcome written by a measurement anchor
constexpr uint32_t DERIVED_SLOT = 2;    // reinterpreted outcome that replaces MEASURED_SLOT downstream

/// Rewrites `conditional ; anchor` into `replacement`, where `conditional` is a classically
/// conditioned single-qubit gate and `anchor` is the next operation touching its qubit.
///
/// Templates act on local qubits 0..support-1. The anchor's argument order is matched up to the
/// symmetries of its kind (CCX controls, all CCZ/CZ qubits).
struct RewriteRule {
    std::string name;
    size_t support;
    Operation conditional;
    Operation anchor;
    std::vector<Operation> replacement;

    std::vector<Operation> lhs() const {
        return {conditional, anchor};
    }
    bool reinterprets_outcome() const;
};

std::vector<RewriteRule> rewrite_rule_table();

struct RuleApplication {
    std::vector<Operation> replacement;
    /// Set when the anchor's outcome bit was superseded: (old bit, new bit).
    std::optional<std::pair<uint32_t, uint32_t>> renamed_bit;
};

/// Instantiates `rule` against concrete operations, or returns nullopt when it does not match.
/// `allocate_derived_bit` is called at most once, only on a successful match that needs a new bit.
std::optional<RuleApplication> apply_rule(const RewriteRule &rule, const Operation &conditional,
                                          const Operation &anchor,
                                          const std::function<uint32_t()> &allocate_derived_bit);

}  // namespace teledepth
