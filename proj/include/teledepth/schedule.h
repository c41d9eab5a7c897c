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
#include <vector>

namespace teledepth {

/// One teleportation level with k = 2: `controls` = 2 * groups + leftover.
struct RecursionLevel {
    int64_t controls;
    int64_t groups;
    int64_t leftover;
    bool operator==(const RecursionLevel &) const = default;
};

struct LevelParams {
    int64_t groups;
    int64_t leftover;
    bool operator==(const LevelParams &) const = default;
};

/// Recursion record of the k = 2 teleportation decomposition of an MCT with `n` controls.
struct Schedule {
    int64_t n = 0;
    std::vector<RecursionLevel> levels;

    int64_t i_max() const {
        return static_cast<int64_t>(levels.size());
    }
    int64_t total_groups() const;
};

/// All functions below throw std::invalid_argument for n < 2.
LevelParams level_params(int64_t n);
Schedule build_schedule(int64_t n);

/// Exact ceil(log2(n)) for n >= 1.
int64_t ceil_log2(int64_t n);

/// 1 for n = 2, ceil(log2 n) - 1 otherwise. Integer-only.
int64_t i_max_closed_form(int64_t n);

/// 1 + sum of groups over all levels.
int64_t toffoli_count_formula(const Schedule &schedule);

struct EntanglementCost {
    int64_t bell_pairs;
    int64_t ancillas;
    bool operator==(const EntanglementCost &) const = default;
};

EntanglementCost epr_and_ancilla(const Schedule &schedule);

}  // namespace teledepth
