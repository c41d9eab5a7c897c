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
#include <optional>
#include <string>
#include <vector>

namespace teledepth {

/// Cost of one decomposition at a given control count. Quantities without a published formula
/// stay empty.
struct CostValue {
    std::optional<double> toffoli_depth_raw;
    std::optional<int64_t> toffoli_count;
    std::optional<int64_t> ancillas;
};

struct CostFormula {
    std::string name;
    std::string note;
    std::function<CostValue(int64_t)> evaluate;
};

/// nie, khattar_1anc, khattar_2anc, dutta_bound and teleportation, in that order.
std::vector<CostFormula> comparison_registry();

struct ComparisonRow {
    int64_t n;
    std::string method;
    /// Ceiling of the raw value; depth is integral.
    std::optional<int64_t> toffoli_depth;
    std::optional<double> toffoli_depth_raw;
    std::optional<int64_t> toffoli_count;
    std::optional<int64_t> ancillas;
};

/// One row per (n, method) for n in [n_min, n_max]. Throws std::invalid_argument outside [2, 2^16].
std::vector<ComparisonRow> comparison_table(int64_t n_min, int64_t n_max);

/// CSV `n,method,toffoli_depth,toffoli_depth_raw,toffoli_count,ancillas`; unavailable cells empty.
std::string comparison_csv(const std::vector<ComparisonRow> &rows);

}  // namespace teledepth
