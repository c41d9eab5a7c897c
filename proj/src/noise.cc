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

#include "teledepth/noise.h"

#include <stdexcept>

#include <fmt/format.h>

namespace teledepth {

NoiseModel NoiseModel::from_hierarchy(double p_toffoli, double p_epr) {
    NoiseModel m;
    m.p_toffoli = p_toffoli;
    m.p_2q = p_toffoli / 10;
    m.p_1q = p_toffoli / 100;
    m.p_init = m.p_1q;
    m.p_readout = m.p_2q;
    m.p_epr = p_epr;
    m.check();
    return m;
}

bool NoiseModel::is_noiseless() const {
    return p_toffoli == 0 && p_2q == 0 && p_1q == 0 && p_init == 0 && p_readout == 0 && p_epr == 0;
}

void NoiseModel::check() const {
    const std::pair<const char *, double> fields[] = {{"p_toffoli", p_toffoli}, {"p_2q", p_2q},
                                                      {"p_1q", p_1q},           {"p_init", p_init},
                                                      {"p_readout", p_readout}, {"p_epr", p_epr}};
    for (auto [name, p] : fields) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument(fmt::format("{} = {} is not a probability", name, p));
        }
    }
}

std::vector<ChannelApplication> noise_insertion_policy(const Operation &op, const NoiseModel &noise, bool fired) {
    std::vector<ChannelApplication> out;
    auto add = [&](Channel c, std::vector<uint32_t> qs, double p) {
        if (p > 0) {
            out.push_back({c, std::move(qs), p});
        }
    };
    if (!fired) {
        return out;
    }
    switch (op.kind) {
        case OpKind::CCX:
        case OpKind::CCZ:
            add(Channel::DEPOLARIZING, op.qubits, noise.p_toffoli);
            break;
        case OpKind::CX:
        case OpKind::CZ:
            add(Channel::DEPOLARIZING, op.qubits, noise.p_2q);
            break;
        case OpKind::X:
        case OpKind::Y:
        case OpKind::Z:
        case OpKind::H:
        case OpKind::S:
        case OpKind::SDG:
            add(Channel::DEPOLARIZING, op.qubits, noise.p_1q);
            break;
        case OpKind::BELL_PREP:
            add(Channel::DEPOLARIZING, op.qubits, noise.p_epr);
            break;
        case OpKind::MEASURE_Z:
        case OpKind::MEASURE_X:
            add(Channel::READOUT_FLIP, op.qubits, noise.p_readout);
            break;
        case OpKind::MCX:
        case OpKind::MCZ:
        case OpKind::CLASSICAL_XOR:
            break;
    }
    return out;
}

std::vector<ChannelApplication> initialization_policy(uint32_t qubit, const NoiseModel &noise) {
    if (noise.p_init <= 0) {
        return {};
    }
    return {{Channel::BIT_FLIP, {qubit}, noise.p_init}};
}

}  // namespace teledepth
