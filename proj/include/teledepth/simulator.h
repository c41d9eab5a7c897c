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
#include <variant>
#include <vector>

#include "teledepth/circuit.h"
#include "teledepth/noise.h"
#include "teledepth/rng.h"
#include "teledepth/state_vector.h"

namespace teledepth {

/// Raised when a circuit would need more live qubits than the simulator allows.
class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Live-qubit cap: TELEDEPTH_MAX_QUBITS if set to a positive integer, otherwise 26.
size_t max_live_qubits();

/// Basis index over the data qubits (bit k = k-th data qubit) or a full data-register state.
using TrajectoryInput = std::variant<uint64_t, std::vector<amplitude>>;

struct TrajectoryOptions {
    /// Raw outcomes for the first measurements in execution order; later ones are sampled.
    std::vector<uint8_t> forced_outcomes;
    /// Apply p_init bitflips to the data register before the first operation.
    bool data_init_noise = true;
    bool record_errors = false;
};

struct ErrorEvent {
    static constexpr size_t BEFORE_FIRST_OP = static_cast<size_t>(-1);
    size_t op_index;
    Channel channel;
    std::vector<uint32_t> qubits;
    /// Base-4 digit j is the Pauli on qubits[j] (1 = X, 2 = Y, 3 = Z). 1 for flips.
    uint32_t pauli;
};

struct TrajectoryResult {
    /// Classical register after the run, indexed by cbit; includes readout flips.
    std::vector<uint8_t> bits;
    /// Raw measurement outcomes in execution order, before readout flips.
    std::vector<uint8_t> outcomes;
    StateVector state;
    std::vector<ErrorEvent> errors;
    /// False when a forced outcome had zero probability; the run stops at that measurement.
    bool possible = true;
    uint64_t seed = 0;
    uint64_t stream = 0;
};

/// State-vector trajectory runner for one circuit.
///
/// Data qubits occupy positions 0..D-1 for the whole run; ancillas are allocated to |0> on first
/// use and removed when measured. Random numbers are drawn in a fixed order: data init flips,
/// then per operation (ancilla init flips, the measurement draw, the noise channels).
class Simulator {
   public:
    /// Validates the circuit and checks the live-qubit peak against `max_qubits`.
    explicit Simulator(Circuit circuit, size_t max_qubits = max_live_qubits());

    TrajectoryResult run(const TrajectoryInput &input, const NoiseModel &noise, RngStream &rng,
                         const TrajectoryOptions &options = {}) const;

    const Circuit &circuit() const {
        return circuit_;
    }
    const std::vector<uint32_t> &data_qubits() const {
        return data_;
    }
    size_t num_measurements() const {
        return measurements_;
    }
    size_t peak_live_qubits() const {
        return peak_;
    }

   private:
    Circuit circuit_;
    std::vector<uint32_t> data_;
    size_t measurements_ = 0;
    size_t peak_ = 0;
};

TrajectoryResult run_trajectory(const Circuit &circuit, const TrajectoryInput &input, const NoiseModel &noise,
                                uint64_t seed, uint64_t stream = 0, const TrajectoryOptions &options = {});

/// Unraveled depolarizing channel on 1..3 live qubits: with probability p applies a Pauli string
/// drawn uniformly from all 4^k (identity included). Returns the string code, or -1 if no event.
int apply_depolarizing(StateVector &state, std::span<const uint32_t> qubits, double p, RngStream &rng);

/// X on a live qubit with probability p. Returns whether it fired.
bool apply_bitflip(StateVector &state, uint32_t qubit, double p, RngStream &rng);

/// Samples a computational-basis readout of `qubits` (bit k = qubits[k]) from the full state,
/// marginalizing everything else. Uses one uniform draw.
uint64_t sample_readout(const StateVector &state, std::span<const uint32_t> qubits, RngStream &rng);

/// QFT|i> on q qubits: amplitude j is exp(2 pi i j i / 2^q) / sqrt(2^q).
std::vector<amplitude> qft_prepare(uint64_t i, unsigned q);

}  // namespace teledepth
