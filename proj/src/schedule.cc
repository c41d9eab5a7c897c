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

#include <bit>
#include <stdexcept>
#include <string>

namespace teledepth {

namespace {

void require_at_least_two(int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("an MCT decomposition needs at least 2 controls, got " + std::to_string(n));
    }
}

}  // namespace

int64_t Schedule::total_groups() const {
    int64_t s = 0;
    for (const auto &l : levels) {
        s += l.groups;
    }
    return s;
}

LevelParams level_params(int64_t n) {
    require_at_least_two(n);
    // (-1)^n
    int64_t sign = n % 2 == 0 ? 1 : -1;
    int64_t leftover = (1 - sign) / 2;
    int64_t groups = (2 * n - 1 + sign) / 4;
    return {groups, leftover};
}

Schedule build_schedule(int64_t n) {
    require_at_least_two(n);
    Schedule s;
    s.n = n;
    int64_t current = n;
    while (true) {
        auto p = level_params(current);
        s.levels.push_back({current, p.groups, p.leftover});
        // n = 2 is the single-level base case; everything else stops once the residual is a Toffoli.
        if (current == 2 || p.groups + p.leftover == 2) {
            break;
        }
        current = p.groups + p.leftover;
    }
    return s;
}

int64_t ceil_log2(int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("ceil_log2 needs n >= 1");
    }
    auto u = static_cast<uint64_t>(n);
    return static_cast<int64_t>(std::bit_width(u - 1));
}

int64_t i_max_closed_form(int64_t n) {
    require_at_least_two(n);
    return n == 2 ? 1 : ceil_log2(n) - 1;
}

int64_t toffoli_count_formula(const Schedule &schedule) {
    return 1 + schedule.total_groups();
}

EntanglementCost epr_and_ancilla(const Schedule &schedule) {
    int64_t pairs = schedule.total_groups();
    return {pairs, 2 * pairs};
}

}  // namespace teledepth
