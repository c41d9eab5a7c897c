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

#include "teledepth/state_vector.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace teledepth {

namespace {

/// Inserts a zero bit at position `pos` of `i`.
inline uint64_t insert_zero(uint64_t i, unsigned pos) {
    uint64_t low = i & ((uint64_t{1} << pos) - 1);
    return ((i >> pos) << (pos + 1)) | low;
}

}  // namespace

StateVector::StateVector(std::span<const uint32_t> qubits) : amps_(size_t{1} << qubits.size()) {
    amps_[0] = 1;
    for (uint32_t q : qubits) {
        if (q >= where_.size()) {
            where_.resize(q + 1, -1);
        }
        if (where_[q] >= 0) {
            throw std::invalid_argument(fmt::format("qubit {} listed twice", q));
        }
        where_[q] = static_cast<int32_t>(live_.size());
        live_.push_back(q);
    }
}

StateVector::StateVector(std::span<const uint32_t> qubits, std::vector<amplitude> amplitudes) : StateVector(qubits) {
    if (amplitudes.size() != amps_.size()) {
        throw std::invalid_argument(
            fmt::format("state has {} amplitudes, expected {}", amplitudes.size(), amps_.size()));
    }
    amps_ = std::move(amplitudes);
}

bool StateVector::is_live(uint32_t qubit) const {
    return qubit < where_.size() && where_[qubit] >= 0;
}

unsigned StateVector::position(uint32_t qubit) const {
    if (!is_live(qubit)) {
        throw std::logic_error(fmt::format("qubit {} is not live", qubit));
    }
    return static_cast<unsigned>(where_[qubit]);
}

unsigned StateVector::allocate(uint32_t qubit) {
    if (is_live(qubit)) {
        throw std::logic_error(fmt::format("qubit {} is already live", qubit));
    }
    if (qubit >= where_.size()) {
        where_.resize(qubit + 1, -1);
    }
    auto pos = static_cast<unsigned>(live_.size());
    // The new top bit is 0: the existing amplitudes keep their indices and the upper half is zero.
    amps_.resize(amps_.size() * 2, amplitude(0));
    where_[qubit] = static_cast<int32_t>(pos);
    live_.push_back(qubit);
    return pos;
}

void StateVector::apply_x(unsigned pos, uint64_t controls) {
    const uint64_t bit = uint64_t{1} << pos;
    const size_t half = amps_.size() / 2;
    for (size_t i = 0; i < half; i++) {
        uint64_t lo = insert_zero(i, pos);
        if ((lo & controls) == controls) {
            std::swap(amps_[lo], amps_[lo | bit]);
        }
    }
}

void StateVector::apply_y(unsigned pos) {
    const uint64_t bit = uint64_t{1} << pos;
    const size_t half = amps_.size() / 2;
    const amplitude I(0, 1);
    for (size_t i = 0; i < half; i++) {
        uint64_t lo = insert_zero(i, pos);
        amplitude a0 = amps_[lo], a1 = amps_[lo | bit];
        amps_[lo] = -I * a1;
        amps_[lo | bit] = I * a0;
    }
}

void StateVector::apply_phase_flip(uint64_t mask) {
    if (mask == 0) {
        return;
    }
    // Enumerate only the indices that contain `mask` by depositing the free bits around it.
    const unsigned free_bits = static_cast<unsigned>(live_.size()) - std::popcount(mask);
    const size_t count = size_t{1} << free_bits;
    for (size_t i = 0; i < count; i++) {
        uint64_t idx = i;
        for (uint64_t m = mask; m != 0; m &= m - 1) {
            idx = insert_zero(idx, static_cast<unsigned>(std::countr_zero(m)));
        }
        amps_[idx | mask] = -amps_[idx | mask];
    }
}

void StateVector::apply_h(unsigned pos) {
    const uint64_t bit = uint64_t{1} << pos;
    const size_t half = amps_.size() / 2;
    const double r = 1 / std::sqrt(2.0);
    for (size_t i = 0; i < half; i++) {
        uint64_t lo = insert_zero(i, pos);
        amplitude a0 = amps_[lo], a1 = amps_[lo | bit];
        amps_[lo] = r * (a0 + a1);
        amps_[lo | bit] = r * (a0 - a1);
    }
}

void StateVector::apply_phase(unsigned pos, amplitude phase) {
    const uint64_t bit = uint64_t{1} << pos;
    const size_t half = amps_.size() / 2;
    for (size_t i = 0; i < half; i++) {
        amps_[insert_zero(i, pos) | bit] *= phase;
    }
}

void StateVector::apply_pauli(unsigned pos, unsigned pauli) {
    switch (pauli) {
        case 0:
            break;
        case 1:
            apply_x(pos);
            break;
        case 2:
            apply_y(pos);
            break;
        case 3:
            apply_phase_flip(uint64_t{1} << pos);
            break;
        default:
            throw std::invalid_argument(fmt::format("bad Pauli code {}", pauli));
    }
}

double StateVector::probability_one(unsigned pos) const {
    const uint64_t bit = uint64_t{1} << pos;
    const size_t half = amps_.size() / 2;
    double p = 0;
    for (size_t i = 0; i < half; i++) {
        p += std::norm(amps_[insert_zero(i, pos) | bit]);
    }
    return p;
}

void StateVector::collapse(unsigned pos, int outcome, double p) {
    const uint64_t keep = outcome ? (uint64_t{1} << pos) : 0;
    const size_t half = amps_.size() / 2;
    const double scale = 1 / std::sqrt(p);
    // In place: the source index is never below the destination, so nothing is overwritten early.
    for (size_t i = 0; i < half; i++) {
        amps_[i] = amps_[insert_zero(i, pos) | keep] * scale;
    }
    amps_.resize(half);
    uint32_t qubit = live_[pos];
    where_[qubit] = -1;
    live_.erase(live_.begin() + pos);
    for (size_t k = pos; k < live_.size(); k++) {
        where_[live_[k]] = static_cast<int32_t>(k);
    }
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace teledepth
