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
#include <vector>

#include "teledepth/circuit.h"

namespace teledepth {

struct NoiseModel {
    double p_toffoli = 0;
    double p_2q = 0;
    double p_1q = 0;
    double p_init = 0;
    double p_readout = 0;
    double p_epr = 0;

    static NoiseModel noiseless() {
        return {};
    }
    /// Two-qubit errors a tenth of the Toffoli rate, single-qubit errors a hundredth; initialization
    /// matches single-qubit gates and readout matches two-qubit gates.
    static NoiseModel from_hierarchy(double p_toffoli, double p_epr);

    bool is_noiseless() const;
    /// Throws std::invalid_argument unless every probability lies in [0, 1].
    void check() const;
    bool operator==(const NoiseModel &) const = default;
};

enum class Channel : uint8_t {
    DEPOLARIZING,  // uniform Pauli string over 4^k (identity included) with probability p
    BIT_FLIP,      // X with probability p
    READOUT_FLIP,  // flip the recorded classical outcome with probability p
};

struct ChannelApplication {
    Channel channel;
    std::vector<uint32_t> qubits;
    double p;
    bool operator==(const ChannelApplication &) const = default;
};

/// Channels that follow `op`. Unfired conditional gates, ClassicalXor and the multi-controlled
/// reference gates (MCX/MCZ) get none. Channels with p = 0 are omitted.
std::vector<ChannelApplication> noise_insertion_policy(const Operation &op, const NoiseModel &noise,
                                                       bool fired = true);

/// Channel applied to a qubit when it is initialized to |0>.
std::vector<ChannelApplication> initialization_policy(uint32_t qubit, const NoiseModel &noise);

}  // namespace teledepth
