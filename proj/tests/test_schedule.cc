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

#include "teledepth/schedule.h"

#include <stdexcept>

#include <gtest/gtest.h>

namespace teledepth {
namespace {

TEST(LevelParams, SmallValues) {
    EXPECT_EQ(level_params(7), (LevelParams{3, 1}));
    EXPECT_EQ(level_params(4), (LevelParams{2, 0}));
    EXPECT_EQ(level_params(2), (LevelParams{1, 0}));
    EXPECT_EQ(level_params(3), (LevelParams{1, 1}));
    EXPECT_THROW(level_params(1), std::invalid_argument);
}

TEST(BuildSchedule, Examples) {
    auto s7 = build_schedule(7);
    ASSERT_EQ(s7.i_max(), 2);
    EXPECT_EQ(s7.levels[0], (RecursionLevel{7, 3, 1}));
    EXPECT_EQ(s7.levels[1], (RecursionLevel{4, 2, 0}));

    auto s2 = build_schedule(2);
    ASSERT_EQ(s2.i_max(), 1);
    EXPECT_EQ(s2.levels[0], (RecursionLevel{2, 1, 0}));

    auto s16 = build_schedule(16);
    ASSERT_EQ(s16.i_max(), 3);
    EXPECT_EQ(s16.levels[0], (RecursionLevel{16, 8, 0}));
    EXPECT_EQ(s16.levels[1], (RecursionLevel{8, 4, 0}));
    EXPECT_EQ(s16.levels[2], (RecursionLevel{4, 2, 0}));

    EXPECT_THROW(build_schedule(0), std::invalid_argument);
}

TEST(ClosedForm, Examples) {
    EXPECT_EQ(i_max_closed_form(2), 1);
    EXPECT_EQ(i_max_closed_form(3), 1);
    EXPECT_EQ(i_max_closed_form(1024), 9);
    EXPECT_EQ(ceil_log2(1), 0);
    EXPECT_EQ(ceil_log2(1024), 10);
    EXPECT_EQ(ceil_log2(1025), 11);
}

TEST(Counts, Examples) {
    EXPECT_EQ(toffoli_count_formula(build_schedule(7)), 6);
    EXPECT_EQ(toffoli_count_formula(build_schedule(2)), 2);
    EXPECT_EQ(toffoli_count_formula(build_schedule(4)), 3);
    EXPECT_EQ(epr_and_ancilla(build_schedule(7)), (EntanglementCost{5, 10}));
    EXPECT_EQ(epr_and_ancilla(build_schedule(2)), (EntanglementCost{1, 2}));
    EXPECT_EQ(epr_and_ancilla(build_schedule(4)), (EntanglementCost{2, 4}));
}

// Brute-force cross-check of the closed form and the halving law over the whole range.
TEST(ScheduleProperty, ClosedFormMatchesIterationUpTo65536) {
    int64_t previous_count = 0;
    for (int64_t n = 2; n <= 65536; n++) {
        auto s = build_schedule(n);
        ASSERT_EQ(i_max_closed_form(n), s.i_max()) << "n=" << n;
        int64_t current = n;
        for (size_t i = 0; i < s.levels.size(); i++) {
            const auto &lv = s.levels[i];
            ASSERT_EQ(lv.controls, current);
            ASSERT_EQ(lv.controls, 2 * lv.groups + lv.leftover);
            ASSERT_GE(lv.groups, 1);
            int64_t div = int64_t{1} << i;
            ASSERT_EQ(lv.controls, (n + div - 1) / div) << "n=" << n << " level " << i;
            current = lv.groups + lv.leftover;
            ASSERT_EQ(current, (lv.controls + 1) / 2);
        }
        // The n = 2 base case ends with a single teleported control.
        ASSERT_EQ(current, n == 2 ? 1 : 2);
        int64_t count = toffoli_count_formula(s);
        ASSERT_GE(count, previous_count) << "n=" << n;
        previous_count = count;
    }
}

}  // namespace
}  // namespace teledepth
