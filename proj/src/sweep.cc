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

#include "teledepth/sweep.h"

#include <cmath>

#include <fmt/format.h>

#include "teledepth/decomposer.h"
#include "teledepth/rng.h"
#include "teledepth/simulator.h"

namespace teledepth {

std::vector<double> GridSpec::axis() const {
    if (points < 1) {
        throw std::invalid_argument("grid needs at least one point per axis");
    }
    if (!(lo > 0 && hi >= lo && hi <= 1)) {
        throw std::invalid_argument(fmt::format("bad rate range [{}, {}]", lo, hi));
    }
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    const double parts = static_cast<double>(points - 1);
    for (size_t k = 0; k < points; k++) {
        double t = static_cast<double>(k) / parts;
        out[k] = linear ? lo + (hi - lo) * t : lo * std::pow(hi / lo, t);
    }
    // Pin the endpoints so they print exactly as given.
    out.front() = lo;
    out.back() = hi;
    return out;
}

uint64_t cell_seed(uint64_t master, uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

double estimate_sweep_work(const Circuit &circuit, int n, const GridSpec &grid, size_t shots) {
    Simulator sim(circuit);
    const double cells = static_cast<double>(grid.points) * static_cast<double>(grid.points);
    const double trajectories = cells * 2 * std::ldexp(1.0, n + 1) * static_cast<double>(shots);
    const double per_op = std::ldexp(1.0, static_cast<int>(sim.peak_live_qubits()));
    return per_op * static_cast<double>(circuit.operations().size()) * trajectories;
}

SweepGrid run_sweep(const Circuit &circuit, int n, const GridSpec &grid, size_t shots, uint64_t seed,
                    const SweepLimits &limits) {
    if (n > limits.max_n) {
        throw ResourceCapError(fmt::format("n = {} exceeds the sweep cap of {}", n, limits.max_n), 0);
    }
    if (shots < 1) {
        throw std::invalid_argument("sweep needs at least one shot");
    }
    const double work = estimate_sweep_work(circuit, n, grid, shots);
    if (work > limits.max_work) {
        throw ResourceCapError(
            fmt::format("estimated work {:.3g} amplitude updates exceeds the cap {:.3g}", work, limits.max_work), work);
    }

    SweepGrid out;
    out.n = n;
    out.toffoli_rates = grid.axis();
    out.epr_rates = grid.axis();
    out.shots = shots;
    out.master_seed = seed;
    for (double pt : out.toffoli_rates) {
        for (double pe : out.epr_rates) {
            SweepCell cell;
            cell.noise = NoiseModel::from_hierarchy(pt, pe);
            cell.seed = cell_seed(seed, out.cells.size());
            cell.estimate = estimate_fidelity(circuit, n, cell.noise, shots, cell.seed);
            out.cells.push_back(cell);
        }
    }
    return out;
}

SweepGrid run_sweep(int n, const GridSpec &grid, size_t shots, uint64_t seed, const SweepLimits &limits) {
    if (n > limits.max_n) {
        throw ResourceCapError(fmt::format("n = {} exceeds the sweep cap of {}", n, limits.max_n), 0);
    }
    return run_sweep(defer_corrections(decompose_mct(n)), n, grid, shots, seed, limits);
}

SweepGrid delta_fidelity(const SweepGrid &a, const SweepGrid &b) {
    if (a.n != b.n || a.toffoli_rates != b.toffoli_rates || a.epr_rates != b.epr_rates ||
        a.cells.size() != b.cells.size()) {
        throw std::invalid_argument("delta_fidelity needs grids over the same n and rates");
    }
    SweepGrid out = a;
    for (size_t k = 0; k < out.cells.size(); k++) {
        auto &e = out.cells[k].estimate;
        const auto &o = b.cells[k].estimate;
        e.f_z -= o.f_z;
        e.f_c -= o.f_c;
        e.lower -= o.lower;
        e.upper -= o.upper;
    }
    return out;
}

std::string sweep_csv(const SweepGrid &grid) {
    std::string out = "n,p_toffoli,p_epr,p_2q,p_1q,p_init,p_readout,f_z,f_c,lower,upper,shots,seed\n";
    for (const auto &c : grid.cells) {
        const auto &m = c.noise;
        const auto &e = c.estimate;
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", grid.n, m.p_toffoli, m.p_epr, m.p_2q, m.p_1q,
                           m.p_init, m.p_readout, e.f_z, e.f_c, e.lower, e.upper, grid.shots, c.seed);
    }
    return out;
}

}  // namespace teledepth
