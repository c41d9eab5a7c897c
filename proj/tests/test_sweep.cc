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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "teledepth/decomposer.h"

namespace teledepth {
namespace {

size_t count_lines(const std::string &s) {
    return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

TEST(GridSpec, LogAxisPinsEndpoints) {
    GridSpec g;
    auto axis = g.axis();
    ASSERT_EQ(axis.size(), 19u);
    EXPECT_EQ(axis.front(), 1e-3);
    EXPECT_EQ(axis.back(), 1e-1);
    EXPECT_NEAR(axis[9], 1e-2, 1e-15);
    for (size_t k = 1; k + 1 < axis.size(); k++) {
        EXPECT_NEAR(axis[k] / axis[k - 1], axis[k + 1] / axis[k], 1e-12);
    }
}

TEST(GridSpec, LinearAndDegenerateAxes) {
    GridSpec g{3, 0.0, 0.2, true};
    EXPECT_THROW(g.axis(), std::invalid_argument);  // rate 0 is rejected
    g.lo = 0.1;
    auto axis = g.axis();
    ASSERT_EQ(axis.size(), 3u);
    EXPECT_NEAR(axis[1], 0.15, 1e-15);
    EXPECT_EQ((GridSpec{1, 0.01, 0.1, false}.axis()), std::vector<double>{0.01});
    EXPECT_THROW((GridSpec{0, 0.01, 0.1, false}.axis()), std::invalid_argument);
    EXPECT_THROW((GridSpec{3, 0.1, 0.01, false}.axis()), std::invalid_argument);
}

TEST(Sweep, CellSeedsAreDistinctAndStable) {
    EXPECT_EQ(cell_seed(7, 3), cell_seed(7, 3));
    EXPECT_NE(cell_seed(7, 3), cell_seed(7, 4));
    EXPECT_NE(cell_seed(7, 3), cell_seed(8, 3));
}

TEST(Sweep, SmallGridShapeBoundsAndCsv) {
    GridSpec g{3, 1e-3, 1e-1, false};
    SweepGrid grid = run_sweep(3, g, 20, 7);
    ASSERT_EQ(grid.cells.size(), 9u);
    for (const auto &c : grid.cells) {
        EXPECT_LE(c.estimate.lower, c.estimate.upper);
        EXPECT_GE(c.estimate.f_z, 0.0);
        EXPECT_LE(c.estimate.f_z, 1.0);
    }
    EXPECT_EQ(grid.at(2, 1).noise.p_toffoli, 1e-1);
    EXPECT_NEAR(grid.at(2, 1).noise.p_epr, 1e-2, 1e-15);
    std::string csv = sweep_csv(grid);
    EXPECT_EQ(count_lines(csv), 10u);
    EXPECT_EQ(csv.rfind("n,p_toffoli,p_epr,p_2q,p_1q,p_init,p_readout,f_z,f_c,lower,upper,shots,seed\n", 0), 0u);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Sweep, RepeatedRunIsIdentical) {
    GridSpec g{2, 1e-2, 1e-1, false};
    EXPECT_EQ(sweep_csv(run_sweep(3, g, 10, 11)), sweep_csv(run_sweep(3, g, 10, 11)));
    EXPECT_NE(sweep_csv(run_sweep(3, g, 10, 11)), sweep_csv(run_sweep(3, g, 10, 12)));
}

TEST(Sweep, FidelityNonincreasingAlongEachAxis) {
    GridSpec g{3, 1e-3, 1e-1, false};
    SweepGrid grid = run_sweep(3, g, 200, 5);
    auto ok = [](const FidelityEstimate &better, const FidelityEstimate &worse) {
        double sz = std::hypot(better.f_z_stderr, worse.f_z_stderr);
        double sc = std::hypot(better.f_c_stderr, worse.f_c_stderr);
        return worse.f_z <= better.f_z + 3 * std::max(sz, 1e-3) && worse.f_c <= better.f_c + 3 * std::max(sc, 1e-3);
    };
    for (size_t a = 0; a < 3; a++) {
        for (size_t b = 0; b + 1 < 3; b++) {
            EXPECT_TRUE(ok(grid.at(b, a).estimate, grid.at(b + 1, a).estimate)) << "toffoli axis " << b << "," << a;
            EXPECT_TRUE(ok(grid.at(a, b).estimate, grid.at(a, b + 1).estimate)) << "epr axis " << a << "," << b;
        }
    }
    // The far corner is clearly worse than the near corner.
    EXPECT_LT(grid.at(2, 2).estimate.f_z, grid.at(0, 0).estimate.f_z);
}

TEST(Sweep, DeltaOfGridWithItselfIsZero) {
    GridSpec g{2, 1e-2, 1e-1, false};
    SweepGrid grid = run_sweep(2, g, 10, 3);
    SweepGrid d = delta_fidelity(grid, grid);
    for (const auto &c : d.cells) {
        EXPECT_EQ(c.estimate.f_z, 0.0);
        EXPECT_EQ(c.estimate.f_c, 0.0);
        EXPECT_EQ(c.estimate.lower, 0.0);
        EXPECT_EQ(c.estimate.upper, 0.0);
    }
    SweepGrid other = run_sweep(3, g, 10, 3);
    EXPECT_THROW(delta_fidelity(grid, other), std::invalid_argument);
}

TEST(Sweep, ResourceCapsRaiseBeforeRunning) {
    GridSpec g{3, 1e-3, 1e-1, false};
    EXPECT_THROW(run_sweep(8, g, 1, 0), ResourceCapError);
    try {
        run_sweep(3, g, 20, 0, SweepLimits{7, 10.0});
        FAIL() << "expected a cap error";
    } catch (const ResourceCapError &e) {
        EXPECT_GT(e.estimate(), 10.0);
    }
    Circuit c = defer_corrections(decompose_mct(7));
    double full = estimate_sweep_work(c, 7, GridSpec{18, 1e-3, 1e-1, false}, 100);
    EXPECT_LT(full, SweepLimits{}.max_work);
}

}  // namespace
}  // namespace teledepth
