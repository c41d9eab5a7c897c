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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace teledepth {

using amplitude = std::complex<double>;

/// Dense amplitudes over the live qubits only.
///
/// Positions are bit indices into the amplitude array. Qubits are allocated on first use (to |0>)
/// at the highest position and removed on measurement; removal compacts the array and shifts
/// every higher position down by one.
class StateVector {
   public:
    /// Maps circuit qubit `qubit` to position `i` for qubits[i]; the initial state is |0...0>.
    explicit StateVector(std::span<const uint32_t> qubits = {});
    /// `amplitudes.size()` must equal 2^qubits.size().
    StateVector(std::span<const uint32_t> qubits, std::vector<amplitude> amplitudes);

    size_t num_live() const {
        return live_.size();
    }
    const std::vector<amplitude> &amplitudes() const {
        return amps_;
    }
    std::vector<amplitude> &mutable_amplitudes() {
        return amps_;
    }
    /// Position -> circuit qubit.
    const std::vector<uint32_t> &live_qubits() const {
        return live_;
    }
    bool is_live(uint32_t qubit) const;
    /// Throws std::logic_error if the qubit is not live.
    unsigned position(uint32_t qubit) const;

    /// Reserves room for `qubits` live qubits so allocation never reallocates.
    void reserve(size_t qubits) {
        amps_.reserve(size_t{1} << qubits);
    }
    /// Appends a |0> qubit at the top position.
    unsigned allocate(uint32_t qubit);

    // Kernels. `controls` is a bit mask of positions that must all be 1.
    void apply_x(unsigned pos, uint64_t controls = 0);
    void apply_y(unsigned pos);
    /// Negates every amplitude whose index has all bits of `mask` set (Z, CZ, CCZ, ...).
    void apply_phase_flip(uint64_t mask);
    void apply_h(unsigned pos);
    /// diag(1, phase) on one position (S, Sdg).
    void apply_phase(unsigned pos, amplitude phase);
    /// 1 = X, 2 = Y, 3 = Z, 0 = identity.
    void apply_pauli(unsigned pos, unsigned pauli);

    double probability_one(unsigned pos) const;
    /// Projects position `pos` onto `outcome`, renormalizes and removes the qubit. The caller
    /// must ensure the outcome has nonzero probability `p`.
    void collapse(unsigned pos, int outcome, double p);

    double norm_squared() const;

   private:
    std::vector<amplitude> amps_;
    std::vector<uint32_t> live_;
    std::vector<int32_t> where_;  // qubit -> position, -1 if not live
};

}  // namespace teledepth
