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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "teledepth/circuit.h"

namespace teledepth {

/// Bookkeeping for one teleportation level: controls = k * groups + leftovers.
struct TeleportLevelPlan {
    int k = 0;
    std::vector<std::vector<uint32_t>> groups;
    std::vector<uint32_t> leftovers;
    /// (e_j, e'_j): e_j receives the group's AND and is Z-measured; e'_j carries it onward.
    std::vector<std::pair<uint32_t, uint32_t>> bell_pairs;
    std::vector<uint32_t> z_bits;
    std::vector<uint32_t> x_bits;
    /// Controls of the residual MCT: every e'_j followed by the leftovers.
    std::vector<uint32_t> residual_controls;
};

/// Appends one teleportation level to `host`, with the residual MCT emitted as a single gate.
///
/// Controls are grouped in ascending order; the last `n mod k` controls are leftovers. Per group:
/// BellPrep, MCT_{k+1} onto e_j, MeasureZ(e_j), X(e'_j) if z_j. Then the residual MCT. Then per
/// group: MeasureX(e'_j) and C^{k-1}Z on the group if x_j.
///
/// Throws std::invalid_argument if fewer than 2 controls, k < 1 or k > n.
TeleportLevelPlan teleport_expand(Circuit &host, std::span<const uint32_t> controls, uint32_t target, int k);

/// Standalone one-level fragment over n controls and one target (qubits 0..n-1, n).
Circuit teleport_expand_circuit(int n, int k);

/// Full k = 2 recursive decomposition of MCT_{n+1}: controls 0..n-1, target n, then ancillas.
Circuit decompose_mct(int n);

class DeferralError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Pushes classically conditioned corrections past the Toffolis they block (and into measurement
/// outcomes where possible) by sweeping the rewrite-rule table to a fixpoint. The result has
/// Toffoli depth 1 for any decompose_mct output.
///
/// Throws DeferralError when the sweep limit (10 * ops) is exceeded or a teleportation circuit
/// still has Toffoli depth > 1 afterwards; the message names the blocking operation.
Circuit defer_corrections(const Circuit &circuit);

/// Relabels qubits so every Toffoli acts on three consecutive indices (in controls-then-target
/// order). Qubits outside any Toffoli follow in their original order. The permutation is stored
/// in Circuit::layout(). Throws std::invalid_argument if two Toffolis share a qubit.
Circuit neighbor_layout(const Circuit &circuit);

/// Optional peephole: CX(a,b) CX(b,t) CX(a,b) CX(b,t) with a common condition becomes CX(a,t).
Circuit merge_long_range_cx(const Circuit &circuit);

}  // namespace teledepth
