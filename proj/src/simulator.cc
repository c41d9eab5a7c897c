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

#include "teledepth/simulator.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include <fmt/format.h>

namespace teledepth {

namespace {

constexpr double NORM_TOLERANCE = 1e-6;
constexpr double IMPOSSIBLE = 1e-14;

void record(TrajectoryResult &result, const TrajectoryOptions &options, size_t op, Channel channel,
            std::vector<uint32_t> qubits, uint32_t pauli) {
    if (options.record_errors) {
        result.errors.push_back({op, channel, std::move(qubits), pauli});
    }
}

uint64_t position_mask(const StateVector &state, std::span<const uint32_t> qubits) {
    uint64_t mask = 0;
    for (uint32_t q : qubits) {
        mask |= uint64_t{1} << state.position(q);
    }
    return mask;
}

void apply_gate(StateVector &state, const Operation &op) {
    const auto &q = op.qubits;
    switch (op.kind) {
        case OpKind::X:
            state.apply_x(state.position(q[0]));
            break;
        case OpKind::Y:
            state.apply_y(state.position(q[0]));
            break;
        case OpKind::Z:
        case OpKind::CZ:
        case OpKind::CCZ:
        case OpKind::MCZ:
            state.apply_phase_flip(position_mask(state, q));
            break;
        case OpKind::H:
            state.apply_h(state.position(q[0]));
            break;
        case OpKind::S:
            state.apply_phase(state.position(q[0]), amplitude(0, 1));
            break;
        case OpKind::SDG:
            state.apply_phase(state.position(q[0]), amplitude(0, -1));
            break;
        case OpKind::CX:
        case OpKind::CCX:
        case OpKind::MCX: {
            std::span<const uint32_t> controls(q.data(), q.size() - 1);
            state.apply_x(state.position(q.back()), position_mask(state, controls));
            break;
        }
        default:
            throw std::logic_error(fmt::format("{} is not a gate", op_name(op.kind)));
    }
}

}  // namespace

size_t max_live_qubits() {
    if (const char *env = std::getenv("TELEDEPTH_MAX_QUBITS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 40) {
            return static_cast<size_t>(v);
        }
    }
    return 26;
}

Simulator::Simulator(Circuit circuit, size_t max_qubits) : circuit_(std::move(circuit)) {
    require_valid(circuit_);
    data_ = circuit_.data_qubits();
    std::vector<uint8_t> live(circuit_.num_qubits(), 0);
    size_t count = data_.size();
    for (uint32_t q : data_) {
        live[q] = 1;
    }
    peak_ = count;
    for (const auto &op : circuit_.operations()) {
        for (uint32_t q : op.qubits) {
            if (!live[q]) {
                live[q] = 1;
                count++;
            }
        }
        peak_ = std::max(peak_, count);
        if (op.is_measurement()) {
            live[op.qubits[0]] = 0;
            count--;
            measurements_++;
        }
    }
    if (peak_ > max_qubits) {
        throw CapacityError(fmt::format("circuit '{}' needs {} live qubits; the cap is {}", circuit_.name(), peak_,
                                        max_qubits));
    }
}

TrajectoryResult Simulator::run(const TrajectoryInput &input, const NoiseModel &noise, RngStream &rng,
                                const TrajectoryOptions &options) const {
    const size_t d = data_.size();
    TrajectoryResult result;
    result.seed = rng.seed();
    result.stream = rng.stream();
    result.bits.assign(circuit_.num_cbits(), 0);

    if (const auto *index = std::get_if<uint64_t>(&input)) {
        if (d < 64 && *index >> d != 0) {
            throw std::invalid_argument(fmt::format("basis input {} out of range for {} data qubits", *index, d));
        }
        std::vector<amplitude> amps(size_t{1} << d);
        amps[*index] = 1;
        result.state = StateVector(data_, std::move(amps));
    } else {
        result.state = StateVector(data_, std::get<std::vector<amplitude>>(input));
    }
    StateVector &state = result.state;
    state.reserve(peak_);

    if (options.data_init_noise && noise.p_init > 0) {
        for (uint32_t q : data_) {
            if (apply_bitflip(state, q, noise.p_init, rng)) {
                record(result, options, ErrorEvent::BEFORE_FIRST_OP, Channel::BIT_FLIP, {q}, 1);
            }
        }
    }

    size_t measured = 0;
    const auto &ops = circuit_.operations();
    for (size_t k = 0; k < ops.size(); k++) {
        const Operation &op = ops[k];
        for (uint32_t q : op.qubits) {
            if (!state.is_live(q)) {
                state.allocate(q);
                if (apply_bitflip(state, q, noise.p_init, rng)) {
                    record(result, options, k, Channel::BIT_FLIP, {q}, 1);
                }
            }
        }

        bool fired = true;
        switch (op.kind) {
            case OpKind::BELL_PREP: {
                unsigned a = state.position(op.qubits[0]);
                state.apply_h(a);
                state.apply_x(state.position(op.qubits[1]), uint64_t{1} << a);
                break;
            }
            case OpKind::MEASURE_Z:
            case OpKind::MEASURE_X: {
                unsigned pos = state.position(op.qubits[0]);
                if (op.kind == OpKind::MEASURE_X) {
                    state.apply_h(pos);
                }
                double p1 = state.probability_one(pos);
                int outcome;
                if (measured < options.forced_outcomes.size()) {
                    outcome = options.forced_outcomes[measured] ? 1 : 0;
                    if ((outcome ? p1 : 1 - p1) < IMPOSSIBLE) {
                        result.possible = false;
                        return result;
                    }
                } else {
                    outcome = rng.uniform() < p1 ? 1 : 0;
                }
                measured++;
                state.collapse(pos, outcome, outcome ? p1 : 1 - p1);
                result.outcomes.push_back(static_cast<uint8_t>(outcome));
                result.bits[*op.cbit] = static_cast<uint8_t>(outcome);
                break;
            }
            case OpKind::CLASSICAL_XOR:
                result.bits[*op.cbit] = op.condition->evaluate(result.bits) ? 1 : 0;
                break;
            default:
                fired = !op.condition || op.condition->evaluate(result.bits);
                if (fired) {
                    apply_gate(state, op);
                }
                break;
        }

        for (const auto &ch : noise_insertion_policy(op, noise, fired)) {
            switch (ch.channel) {
                case Channel::DEPOLARIZING: {
                    int pauli = apply_depolarizing(state, ch.qubits, ch.p, rng);
                    if (pauli > 0) {
                        record(result, options, k, ch.channel, ch.qubits, static_cast<uint32_t>(pauli));
                    }
                    break;
                }
                case Channel::BIT_FLIP:
                    if (apply_bitflip(state, ch.qubits[0], ch.p, rng)) {
                        record(result, options, k, ch.channel, ch.qubits, 1);
                    }
                    break;
                case Channel::READOUT_FLIP:
                    if (rng.bernoulli(ch.p)) {
                        result.bits[*op.cbit] ^= 1;
                        record(result, options, k, ch.channel, ch.qubits, 1);
                    }
                    break;
            }
        }
    }

    double norm = state.norm_squared();
    if (std::abs(norm - 1) > NORM_TOLERANCE) {
        throw std::runtime_error(fmt::format("state norm drifted to {} in '{}'", norm, circuit_.name()));
    }
    return result;
}

TrajectoryResult run_trajectory(const Circuit &circuit, const TrajectoryInput &input, const NoiseModel &noise,
                                uint64_t seed, uint64_t stream, const TrajectoryOptions &options) {
    Simulator sim(circuit);
    RngStream rng(seed, stream);
    return sim.run(input, noise, rng, options);
}

int apply_depolarizing(StateVector &state, std::span<const uint32_t> qubits, double p, RngStream &rng) {
    if (qubits.empty() || qubits.size() > 3) {
        throw std::invalid_argument(fmt::format("depolarizing channel needs 1..3 qubits, got {}", qubits.size()));
    }
    if (!rng.bernoulli(p)) {
        return -1;
    }
    uint32_t code = rng.below(1u << (2 * qubits.size()));
    for (size_t j = 0; j < qubits.size(); j++) {
        state.apply_pauli(state.position(qubits[j]), (code >> (2 * j)) & 3);
    }
    return static_cast<int>(code);
}

bool apply_bitflip(StateVector &state, uint32_t qubit, double p, RngStream &rng) {
    if (!rng.bernoulli(p)) {
        return false;
    }
    state.apply_x(state.position(qubit));
    return true;
}

uint64_t sample_readout(const StateVector &state, std::span<const uint32_t> qubits, RngStream &rng) {
    const auto &amps = state.amplitudes();
    double u = rng.uniform();
    size_t chosen = amps.size() - 1;
    double acc = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        acc += std::norm(amps[i]);
        if (u < acc) {
            chosen = i;
            break;
        }
    }
    // Rounding can leave acc slightly below 1; fall back to the last nonzero amplitude.
    if (acc <= u) {
        while (chosen > 0 && std::norm(amps[chosen]) == 0) {
            chosen--;
        }
    }
    uint64_t out = 0;
    for (size_t k = 0; k < qubits.size(); k++) {
        out |= static_cast<uint64_t>((chosen >> state.position(qubits[k])) & 1) << k;
    }
    return out;
}

std::vector<amplitude> qft_prepare(uint64_t i, unsigned q) {
    if (q >= 63 || i >> q != 0) {
        throw std::invalid_argument(fmt::format("qft_prepare: index {} out of range for {} qubits", i, q));
    }
    const uint64_t dim = uint64_t{1} << q;
    const double scale = 1 / std::sqrt(static_cast<double>(dim));
    std::vector<amplitude> out(dim);
    for (uint64_t j = 0; j < dim; j++) {
        // Reduce the phase numerator modulo 2^q before converting so large products stay exact.
        uint64_t r = (j * i) & (dim - 1);
        if ((r * 4) % dim == 0) {
            static const amplitude quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            out[j] = scale * quarter[(r * 4 / dim) & 3];
        } else {
            double angle = 2 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(dim);
            out[j] = std::polar(scale, angle);
        }
    }
    return out;
}

}  // namespace teledepth
