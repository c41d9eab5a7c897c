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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "teledepth/circuit.h"
#include "teledepth/noise.h"
#include "teledepth/state_vector.h"

namespace teledepth {

/// Output of MCT_{n+1}: bits 0..n-1 are the controls and bit n the target, which is XORed with
/// the AND of the controls. Throws std::invalid_argument unless bits.size() == n + 1.
std::vector<uint8_t> mct_oracle(int n, std::span<const uint8_t> bits);
/// Same on a packed basis index (bit k = data qubit k).
uint64_t mct_oracle_index(int n, uint64_t input);
/// The oracle as a permutation of data-register amplitudes.
std::vector<amplitude> apply_mct_oracle(int n, std::span<const amplitude> data_state);

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Wilson score interval for `successes` out of `trials` at z standard deviations.
Interval wilson_interval(size_t successes, size_t trials, double z = 3.0);

struct ClassicalFidelity {
    double value = 0;
    size_t successes = 0;
    size_t trials = 0;
    double std_error = 0;
    /// Three-sigma Wilson interval.
    Interval wilson;
};

/// Average over all 2^{n+1} basis inputs of the fraction of shots whose noisy data readout equals
/// the oracle output. Ancilla outcomes are ignored. Throws std::invalid_argument if shots < 1 or
/// the circuit does not have n + 1 data qubits.
ClassicalFidelity classical_fidelity_z(const Circuit &circuit, int n, const NoiseModel &noise, size_t shots,
                                       uint64_t seed);

/// Same in the QFT basis: input QFT|i> (after p_init flips on i), success means the ideally
/// rotated readout (with p_readout flips) returns i.
ClassicalFidelity classical_fidelity_c(const Circuit &circuit, int n, const NoiseModel &noise, size_t shots,
                                       uint64_t seed);

/// (f_z + f_c - 1, min(f_z, f_c)).
std::pair<double, double> hofmann_bounds(double f_z, double f_c);

struct FidelityEstimate {
    double f_z = 0;
    double f_c = 0;
    double lower = 0;
    double upper = 0;
    size_t shots_per_input = 0;
    size_t inputs_count = 0;
    double f_z_stderr = 0;
    double f_c_stderr = 0;
    Interval f_z_wilson;
    Interval f_c_wilson;
};

FidelityEstimate estimate_fidelity(const Circuit &circuit, int n, const NoiseModel &noise, size_t shots,
                                   uint64_t seed);

/// Probability that a measurement of the data register (positions 0..D-1) in the basis containing
/// `expected` finds `expected`, with every other live qubit traced out.
double data_overlap(const StateVector &state, std::span<const amplitude> expected);

struct OracleCheck {
    bool ok = true;
    size_t inputs = 0;
    size_t trajectories = 0;
    /// Smallest success probability seen over all checked trajectories.
    double worst = 1;
    std::string first_failure;
};

struct BranchPolicy {
    /// Force every measurement-outcome string; otherwise sample `samples` branches per input.
    bool exhaustive = true;
    size_t samples = 256;
    uint64_t seed = 0;
};

/// Noiseless check that the circuit acts on its data register as the basis permutation `f`
/// (throws std::invalid_argument if `f` is not a bijection).
/// Runs every basis input and every QFT-basis input (which exposes relative-phase errors); each
/// trajectory must reproduce the ideal output with probability 1 - tolerance.
OracleCheck check_permutation(const Circuit &circuit, const std::function<uint64_t(uint64_t)> &f,
                              const BranchPolicy &policy, double tolerance = 1e-10);

/// check_permutation with the MCT_{n+1} oracle; also checks that there are n + 1 data qubits.
OracleCheck check_against_oracle(const Circuit &circuit, int n, const BranchPolicy &policy,
                                 double tolerance = 1e-10);

}  // namespace teledepth
