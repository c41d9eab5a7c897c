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

#include "teledepth/fidelity.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "teledepth/parallel.h"
#include "teledepth/rng.h"
#include "teledepth/simulator.h"

namespace teledepth {

namespace {

constexpr double CLAMP = 1e-12;
// Distinct seed domain for the QFT-basis estimate so it never shares streams with F_z.
constexpr uint64_t COMPLEMENTARY_DOMAIN = 0x5c0f'1d3a'77e2'9b41ULL;

void check_register(const Simulator &sim, int n) {
    if (n < 1 || sim.data_qubits().size() != static_cast<size_t>(n) + 1) {
        throw std::invalid_argument(fmt::format("circuit '{}' has {} data qubits, expected n + 1 = {}",
                                                sim.circuit().name(), sim.data_qubits().size(), n + 1));
    }
}

uint64_t readout_flips(unsigned bits, double p, RngStream &rng) {
    uint64_t f = 0;
    for (unsigned k = 0; k < bits; k++) {
        if (rng.bernoulli(p)) {
            f |= uint64_t{1} << k;
        }
    }
    return f;
}

ClassicalFidelity summarize(const std::vector<size_t> &per_input, size_t shots) {
    ClassicalFidelity out;
    for (size_t s : per_input) {
        out.successes += s;
    }
    out.trials = per_input.size() * shots;
    out.value = static_cast<double>(out.successes) / static_cast<double>(out.trials);
    out.std_error = std::sqrt(out.value * (1 - out.value) / static_cast<double>(out.trials));
    out.wilson = wilson_interval(out.successes, out.trials);
    return out;
}

}  // namespace

std::vector<uint8_t> mct_oracle(int n, std::span<const uint8_t> bits) {
    if (n < 0 || bits.size() != static_cast<size_t>(n) + 1) {
        throw std::invalid_argument(fmt::format("mct_oracle: expected {} bits, got {}", n + 1, bits.size()));
    }
    std::vector<uint8_t> out(bits.begin(), bits.end());
    bool all = std::all_of(bits.begin(), bits.begin() + n, [](uint8_t b) { return b != 0; });
    out[n] = static_cast<uint8_t>((bits[n] != 0) ^ all);
    return out;
}

uint64_t mct_oracle_index(int n, uint64_t input) {
    const uint64_t controls = (uint64_t{1} << n) - 1;
    return (input & controls) == controls ? input ^ (uint64_t{1} << n) : input;
}

std::vector<amplitude> apply_mct_oracle(int n, std::span<const amplitude> data_state) {
    if (data_state.size() != size_t{1} << (n + 1)) {
        throw std::invalid_argument("apply_mct_oracle: state size does not match n + 1 qubits");
    }
    std::vector<amplitude> out(data_state.size());
    for (uint64_t j = 0; j < data_state.size(); j++) {
        out[mct_oracle_index(n, j)] = data_state[j];
    }
    return out;
}

Interval wilson_interval(size_t successes, size_t trials, double z) {
    if (trials == 0) {
        return {0, 1};
    }
    const double N = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / N;
    const double z2 = z * z;
    const double denom = 1 + z2 / N;
    const double center = (p + z2 / (2 * N)) / denom;
    const double half = z / denom * std::sqrt(p * (1 - p) / N + z2 / (4 * N * N));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double data_overlap(const StateVector &state, std::span<const amplitude> expected) {
    const auto &amps = state.amplitudes();
    const size_t dim = expected.size();
    if (amps.size() % dim != 0) {
        throw std::invalid_argument("data_overlap: register size mismatch");
    }
    double total = 0;
    for (size_t base = 0; base < amps.size(); base += dim) {
        amplitude inner = 0;
        for (size_t d = 0; d < dim; d++) {
            inner += std::conj(expected[d]) * amps[base + d];
        }
        total += std::norm(inner);
    }
    return total;
}

ClassicalFidelity classical_fidelity_z(const Circuit &circuit, int n, const NoiseModel &noise, size_t shots,
                                       uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("classical_fidelity_z needs at least one shot");
    }
    Simulator sim(circuit);
    check_register(sim, n);
    const auto data = sim.data_qubits();
    const size_t inputs = size_t{1} << (n + 1);
    std::vector<size_t> per_input(inputs, 0);
    parallel_for(inputs, [&](size_t i) {
        const uint64_t expected = mct_oracle_index(n, i);
        for (size_t s = 0; s < shots; s++) {
            RngStream rng(seed, i * shots + s);
            auto result = sim.run(uint64_t{i}, noise, rng);
            uint64_t read = sample_readout(result.state, data, rng);
            read ^= readout_flips(static_cast<unsigned>(data.size()), noise.p_readout, rng);
            per_input[i] += read == expected ? 1 : 0;
        }
    });
    return summarize(per_input, shots);
}

ClassicalFidelity classical_fidelity_c(const Circuit &circuit, int n, const NoiseModel &noise, size_t shots,
                                       uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("classical_fidelity_c needs at least one shot");
    }
    Simulator sim(circuit);
    check_register(sim, n);
    const auto q = static_cast<unsigned>(n + 1);
    const size_t inputs = size_t{1} << q;
    const uint64_t cseed = splitmix64(seed ^ COMPLEMENTARY_DOMAIN);

    // Ideal outputs MCT * QFT|j> for every j; the rotated readout of outcome j compares against these.
    std::vector<std::vector<amplitude>> ideal(inputs);
    for (uint64_t j = 0; j < inputs; j++) {
        ideal[j] = apply_mct_oracle(n, qft_prepare(j, q));
    }

    std::vector<size_t> per_input(inputs, 0);
    TrajectoryOptions options;
    options.data_init_noise = false;
    parallel_for(inputs, [&](size_t i) {
        for (size_t s = 0; s < shots; s++) {
            RngStream rng(cseed, i * shots + s);
            uint64_t prepared = i ^ readout_flips(q, noise.p_init, rng);
            auto result = sim.run(qft_prepare(prepared, q), noise, rng, options);
            uint64_t target = i ^ readout_flips(q, noise.p_readout, rng);
            double p = data_overlap(result.state, ideal[target]);
            if (p > 1 - CLAMP) {
                p = 1;
            }
            per_input[i] += rng.uniform() < p ? 1 : 0;
        }
    });
    return summarize(per_input, shots);
}

std::pair<double, double> hofmann_bounds(double f_z, double f_c) {
    return {f_z + f_c - 1, std::min(f_z, f_c)};
}

FidelityEstimate estimate_fidelity(const Circuit &circuit, int n, const NoiseModel &noise, size_t shots,
                                   uint64_t seed) {
    auto z = classical_fidelity_z(circuit, n, noise, shots, seed);
    auto c = classical_fidelity_c(circuit, n, noise, shots, seed);
    FidelityEstimate e;
    e.f_z = z.value;
    e.f_c = c.value;
    std::tie(e.lower, e.upper) = hofmann_bounds(e.f_z, e.f_c);
    e.shots_per_input = shots;
    e.inputs_count = size_t{1} << (n + 1);
    e.f_z_stderr = z.std_error;
    e.f_c_stderr = c.std_error;
    e.f_z_wilson = z.wilson;
    e.f_c_wilson = c.wilson;
    return e;
}

OracleCheck check_permutation(const Circuit &circuit, const std::function<uint64_t(uint64_t)> &f,
                              const BranchPolicy &policy, double tolerance) {
    Simulator sim(circuit);
    const auto q = static_cast<unsigned>(sim.data_qubits().size());
    if (q > 20) {
        throw std::invalid_argument(fmt::format("{} data qubits are too many for an exhaustive input check", q));
    }
    const size_t inputs = size_t{1} << q;
    std::vector<uint8_t> hit(inputs, 0);
    for (uint64_t j = 0; j < inputs; j++) {
        uint64_t image = f(j);
        if (image >= inputs || hit[image]) {
            throw std::invalid_argument("check_permutation: the reference map is not a permutation");
        }
        hit[image] = 1;
    }
    const size_t m = sim.num_measurements();
    if (policy.exhaustive && m > 20) {
        throw std::invalid_argument(fmt::format("{} measurements are too many for exhaustive branches", m));
    }
    const size_t branches = policy.exhaustive ? size_t{1} << m : std::max<size_t>(policy.samples, 1);
    const NoiseModel ideal = NoiseModel::noiseless();

    // Work item w < inputs: basis input w. Otherwise QFT-basis input w - inputs.
    struct Partial {
        size_t trajectories = 0;
        double worst = 1;
        std::string failure;
    };
    std::vector<Partial> partial(2 * inputs);
    parallel_for(2 * inputs, [&](size_t w) {
        const bool phase = w >= inputs;
        const uint64_t i = phase ? w - inputs : w;
        std::vector<amplitude> expected;
        TrajectoryInput input;
        if (phase) {
            auto prepared = qft_prepare(i, q);
            expected.assign(inputs, 0);
            for (uint64_t j = 0; j < inputs; j++) {
                expected[f(j)] = prepared[j];
            }
            input = std::move(prepared);
        } else {
            expected.assign(inputs, 0);
            expected[f(i)] = 1;
            input = uint64_t{i};
        }
        Partial &out = partial[w];
        for (size_t b = 0; b < branches; b++) {
            TrajectoryOptions options;
            if (policy.exhaustive) {
                for (size_t k = 0; k < m; k++) {
                    options.forced_outcomes.push_back(static_cast<uint8_t>((b >> k) & 1));
                }
            }
            RngStream rng(policy.seed, w * branches + b);
            auto result = sim.run(input, ideal, rng, options);
            if (!result.possible) {
                continue;
            }
            out.trajectories++;
            double p = data_overlap(result.state, expected);
            out.worst = std::min(out.worst, p);
            if (p < 1 - tolerance && out.failure.empty()) {
                out.failure = fmt::format("{} input {} branch {}: success probability {:.12f}",
                                          phase ? "QFT-basis" : "basis", i, b, p);
            }
        }
    });

    OracleCheck check;
    check.inputs = 2 * inputs;
    for (const auto &p : partial) {
        check.trajectories += p.trajectories;
        check.worst = std::min(check.worst, p.worst);
        if (!p.failure.empty() && check.first_failure.empty()) {
            check.first_failure = p.failure;
        }
    }
    check.ok = check.first_failure.empty();
    return check;
}

OracleCheck check_against_oracle(const Circuit &circuit, int n, const BranchPolicy &policy, double tolerance) {
    check_register(Simulator(circuit), n);
    return check_permutation(circuit, [n](uint64_t i) { return mct_oracle_index(n, i); }, policy, tolerance);
}

}  // namespace teledepth
