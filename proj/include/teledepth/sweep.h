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
#include <stdexcept>
#include <string>
#include <vector>

#include "teledepth/circuit.h"
#include "teledepth/fidelity.h"
#include "teledepth/noise.h"

namespace teledepth {

/// Rate axis from `lo` to `hi` inclusive with `points` values, geometric unless `linear`.
struct GridSpec {
    size_t points = 19;
    double lo = 1e-3;
    double hi = 1e-1;
    bool linear = false;

    std::vector<double> axis() const;
};

struct SweepCell {
    NoiseModel noise;
    FidelityEstimate estimate;
    uint64_t seed = 0;
};

/// Cells are row-major: Toffoli rate outer, entanglement rate inner.
struct SweepGrid {
    int n = 0;
    std::vector<double> toffoli_rates;
    std::vector<double> epr_rates;
    std::vector<SweepCell> cells;
    size_t shots = 0;
    uint64_t master_seed = 0;

    const SweepCell &at(size_t toffoli_index, size_t epr_index) const {
        return cells[toffoli_index * epr_rates.size() + epr_index];
    }
};

struct SweepLimits {
    int max_n = 7;
    /// Upper bound on amplitude updates: 2^peak_live * ops * trajectories.
    double max_work = 1e15;
};

class ResourceCapError : public std::runtime_error {
   public:
    ResourceCapError(const std::string &what, double estimate) : std::runtime_error(what), estimate_(estimate) {
    }
    double estimate() const {
        return estimate_;
    }

   private:
    double estimate_;
};

/// Seed of cell `index`, derived from the master seed.
uint64_t cell_seed(uint64_t master, uint64_t index);

double estimate_sweep_work(const Circuit &circuit, int n, const GridSpec &grid, size_t shots);

/// Evaluates F_z, F_c and the Hofmann bounds of `circuit` on every (p_toffoli, p_epr) cell, with
/// the other rates following the standard hierarchy. Checks the limits before running.
SweepGrid run_sweep(const Circuit &circuit, int n, const GridSpec &grid, size_t shots, uint64_t seed,
                    const SweepLimits &limits = {});

/// Sweep of the deferred teleportation decomposition of MCT_{n+1}.
SweepGrid run_sweep(int n, const GridSpec &grid, size_t shots, uint64_t seed, const SweepLimits &limits = {});

/// Cellwise a - b of f_z, f_c, lower and upper. Throws std::invalid_argument on shape mismatch.
SweepGrid delta_fidelity(const SweepGrid &a, const SweepGrid &b);

/// CSV with header n,p_toffoli,p_epr,p_2q,p_1q,p_init,p_readout,f_z,f_c,lower,upper,shots,seed.
/// Doubles use the shortest representation that round-trips.
std::string sweep_csv(const SweepGrid &grid);

}  // namespace teledepth
