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

#include "teledepth/applications.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "teledepth/decomposer.h"
#include "teledepth/schedule.h"

namespace teledepth {

namespace {

void check_bits(std::string_view s, std::string_view what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch == '0' || ch == '1'; })) {
        throw std::invalid_argument(fmt::format("{} must be a non-empty string of 0/1, got '{}'", what, s));
    }
}

void flip_zeros(Circuit &c, std::string_view pattern, std::span<const uint32_t> qubits) {
    for (size_t k = 0; k < pattern.size(); k++) {
        if (pattern[k] == '0') {
            c.append(Operation::gate(OpKind::X, {qubits[k]}));
        }
    }
}

std::vector<uint32_t> add_qubits(Circuit &c, size_t count, QubitKind kind) {
    std::vector<uint32_t> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back(c.add_qubit(kind));
    }
    return out;
}

const char *strategy_tag(MctStrategy s) {
    return s == MctStrategy::TELEPORTATION ? "teleport" : "unitary";
}

}  // namespace

void append_mct(Circuit &circuit, std::span<const uint32_t> controls, uint32_t target, MctStrategy strategy) {
    if (strategy == MctStrategy::UNITARY || controls.size() < 2) {
        circuit.append(mct_gate(controls, target));
        return;
    }
    const int n = static_cast<int>(controls.size());
    Circuit block = defer_corrections(decompose_mct(n));
    std::vector<std::optional<uint32_t>> map(block.num_qubits());
    for (int i = 0; i < n; i++) {
        map[i] = controls[i];
    }
    map[n] = target;
    append_mapped(circuit, block, map);
}

Circuit build_adder(int q, MctStrategy strategy) {
    if (q < 2) {
        throw std::invalid_argument(fmt::format("adder needs q >= 2, got {}", q));
    }
    Circuit c(fmt::format("adder{}-{}", q, strategy_tag(strategy)));
    auto reg = add_qubits(c, static_cast<size_t>(q), QubitKind::TARGET);
    for (int t = q - 1; t >= 0; t--) {
        append_mct(c, std::span<const uint32_t>(reg.data(), static_cast<size_t>(t)), reg[t], strategy);
    }
    return c;
}

Circuit repeat_circuit(const Circuit &circuit, int times) {
    Circuit out(fmt::format("{}x{}", circuit.name(), times));
    std::vector<std::optional<uint32_t>> map(circuit.num_qubits());
    for (uint32_t d : circuit.data_qubits()) {
        map[d] = out.add_qubit(circuit.qubit_kind(d));
    }
    for (int k = 0; k < times; k++) {
        append_mapped(out, circuit, map);
    }
    return out;
}

std::vector<AdderDepthRow> adder_depth_table(int q_min, int q_max) {
    if (q_min < 3 || q_max < q_min) {
        throw std::invalid_argument(fmt::format("adder depth table needs 3 <= q_min <= q_max, got [{}, {}]", q_min, q_max));
    }
    std::vector<AdderDepthRow> rows;
    for (int q = q_min; q <= q_max; q++) {
        int64_t proxy = 0;
        for (int j = 2; j <= q - 1; j++) {
            proxy += ceil_log2(j);
        }
        rows.push_back({q, toffoli_depth(build_adder(q, MctStrategy::TELEPORTATION)), proxy});
    }
    return rows;
}

std::string adder_depth_csv(const std::vector<AdderDepthRow> &rows) {
    std::string out = "q,teleportation,dutta_proxy,vedral\n";
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},\n", r.q, r.teleportation, r.dutta_proxy);
    }
    return out;
}

Circuit build_qrom_word(std::string_view address, std::string_view word, MctStrategy strategy) {
    check_bits(address, "address");
    check_bits(word, "word");
    Circuit c(fmt::format("qrom-{}-{}-{}", address, word, strategy_tag(strategy)));
    uint32_t r = c.add_qubit(QubitKind::CONTROL);
    auto a = add_qubits(c, address.size(), QubitKind::CONTROL);
    uint32_t s = c.add_qubit(QubitKind::TARGET);
    auto d = add_qubits(c, word.size(), QubitKind::TARGET);

    std::vector<uint32_t> controls{r};
    controls.insert(controls.end(), a.begin(), a.end());
    flip_zeros(c, address, a);
    append_mct(c, controls, s, strategy);
    for (size_t k = 0; k < word.size(); k++) {
        if (word[k] == '1') {
            c.append(Operation::gate(OpKind::CX, {s, d[k]}));
        }
    }
    append_mct(c, controls, s, strategy);
    flip_zeros(c, address, a);
    return c;
}

uint64_t qrom_oracle(std::string_view address, std::string_view word, uint64_t input) {
    const size_t w = address.size();
    bool match = (input & 1) != 0;
    for (size_t k = 0; k < w; k++) {
        match = match && ((input >> (1 + k)) & 1) == static_cast<uint64_t>(address[k] == '1');
    }
    const bool flag = ((input >> (w + 1)) & 1) != 0;
    if (match == flag) {
        return input;
    }
    uint64_t out = input;
    for (size_t k = 0; k < word.size(); k++) {
        if (word[k] == '1') {
            out ^= uint64_t{1} << (w + 2 + k);
        }
    }
    return out;
}

Circuit build_neuron(int feature_count, MctStrategy strategy) {
    if (feature_count < 2) {
        throw std::invalid_argument(fmt::format("neuron needs at least 2 features, got {}", feature_count));
    }
    Circuit c(fmt::format("neuron{}-{}", feature_count, strategy_tag(strategy)));
    auto x = add_qubits(c, static_cast<size_t>(feature_count), QubitKind::CONTROL);
    uint32_t y = c.add_qubit(QubitKind::TARGET);
    append_mct(c, x, y, strategy);
    return c;
}

Circuit build_decision_rule(std::string_view pattern, MctStrategy strategy) {
    check_bits(pattern, "pattern");
    if (pattern.size() < 2) {
        throw std::invalid_argument("decision rule needs at least 2 features");
    }
    Circuit c(fmt::format("rule-{}-{}", pattern, strategy_tag(strategy)));
    auto f = add_qubits(c, pattern.size(), QubitKind::CONTROL);
    uint32_t cls = c.add_qubit(QubitKind::TARGET);
    flip_zeros(c, pattern, f);
    append_mct(c, f, cls, strategy);
    flip_zeros(c, pattern, f);
    return c;
}

uint64_t decision_rule_oracle(std::string_view pattern, uint64_t input) {
    uint64_t want = 0;
    for (size_t k = 0; k < pattern.size(); k++) {
        want |= static_cast<uint64_t>(pattern[k] == '1') << k;
    }
    const uint64_t mask = (uint64_t{1} << pattern.size()) - 1;
    return (input & mask) == want ? input ^ (uint64_t{1} << pattern.size()) : input;
}

}  // namespace teledepth
