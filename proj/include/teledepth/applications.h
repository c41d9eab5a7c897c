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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teledepth/circuit.h"

namespace teledepth {

enum class MctStrategy : uint8_t { UNITARY, TELEPORTATION };

/// Appends MCT(controls -> target). With TELEPORTATION and at least two controls the gate is
/// replaced by its deferred teleportation decomposition on fresh ancillas.
void append_mct(Circuit &circuit, std::span<const uint32_t> controls, uint32_t target, MctStrategy strategy);

/// Increment modulo 2^q on qubits 0..q-1 (qubit 0 least significant): MCT_q, MCT_{q-1}, ...,
/// CNOT, X, most significant target first. Throws std::invalid_argument for q < 2.
Circuit build_adder(int q, MctStrategy strategy);

/// `circuit` applied `times` times in a row; every repetition gets its own ancillas and bits.
Circuit repeat_circuit(const Circuit &circuit, int times);

struct AdderDepthRow {
    int q;
    size_t teleportation;
    /// Sum of the per-MCT depth lower bounds: an optimistic proxy, not a construction.
    int64_t dutta_proxy;
};

/// Rows for q in [q_min, q_max]; teleportation depth is measured on built circuits.
std::vector<AdderDepthRow> adder_depth_table(int q_min, int q_max);
/// CSV `q,teleportation,dutta_proxy,vedral`; the vedral column is empty (no formula available).
std::string adder_depth_csv(const std::vector<AdderDepthRow> &rows);

/// Single-word QROM lookup. Qubit layout: r, a_0..a_{w-1}, s, d_0..d_{m-1} where address[k] is
/// the bit a_k must equal and word[k] the bit written to d_k. The word is XORed into d when
/// (r and address match) differs from s; s itself is restored. Both strings contain only '0' and '1'.
Circuit build_qrom_word(std::string_view address, std::string_view word, MctStrategy strategy);
/// Reference map of build_qrom_word on the data register.
uint64_t qrom_oracle(std::string_view address, std::string_view word, uint64_t input);

/// y ^= x_0 & ... & x_{f-1} on qubits x_0..x_{f-1}, y. Throws for feature_count < 2.
Circuit build_neuron(int feature_count, MctStrategy strategy);

/// c ^= [f == pattern] on qubits f_0..f_{k-1}, c; zero pattern bits are wrapped in X gates.
Circuit build_decision_rule(std::string_view pattern, MctStrategy strategy);
uint64_t decision_rule_oracle(std::string_view pattern, uint64_t input);

}  // namespace teledepth
