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

#include "teledepth/comparisons.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "teledepth/schedule.h"

namespace teledepth {

namespace {

template <typename T>
std::string cell(const std::optional<T> &v) {
    return v ? fmt::format("{}", *v) : std::string();
}

}  // namespace

std::vector<CostFormula> comparison_registry() {
    std::vector<CostFormula> r;
    r.push_back({"nie", "depth 20 log2 n with one ancilla; count not quoted", [](int64_t n) {
                     return CostValue{20 * std::log2(static_cast<double>(n)), std::nullopt, 1};
                 }});
    r.push_back({"khattar_1anc", "depth 2n - 3 with one ancilla; count not quoted", [](int64_t n) {
                     return CostValue{static_cast<double>(2 * n - 3), std::nullopt, 1};
                 }});
    r.push_back({"khattar_2anc", "depth approximately 4 log2 n with two ancillas; count not quoted", [](int64_t n) {
                     return CostValue{4 * std::log2(static_cast<double>(n)), std::nullopt, 2};
                 }});
    r.push_back({"dutta_bound", "lower bound ceil(log2 n) on depth; count and ancillas not quoted", [](int64_t n) {
                     return CostValue{static_cast<double>(ceil_log2(n)), std::nullopt, std::nullopt};
                 }});
    r.push_back({"teleportation", "depth 1; count 1 + sum of groups; two ancillas per Bell pair", [](int64_t n) {
                     auto s = build_schedule(n);
                     return CostValue{1.0, toffoli_count_formula(s), epr_and_ancilla(s).ancillas};
                 }});
    return r;
}

std::vector<ComparisonRow> comparison_table(int64_t n_min, int64_t n_max) {
    if (n_min < 2 || n_max > 65536 || n_min > n_max) {
        throw std::invalid_argument(fmt::format("comparison range [{}, {}] must lie within [2, 65536]", n_min, n_max));
    }
    const auto registry = comparison_registry();
    std::vector<ComparisonRow> rows;
    for (int64_t n = n_min; n <= n_max; n++) {
        for (const auto &f : registry) {
            CostValue v = f.evaluate(n);
            ComparisonRow row{n, f.name, std::nullopt, v.toffoli_depth_raw, v.toffoli_count, v.ancillas};
            if (v.toffoli_depth_raw) {
                row.toffoli_depth = static_cast<int64_t>(std::ceil(*v.toffoli_depth_raw));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows) {
    std::string out = "n,method,toffoli_depth,toffoli_depth_raw,toffoli_count,ancillas\n";
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", r.n, r.method, cell(r.toffoli_depth), cell(r.toffoli_depth_raw),
                           cell(r.toffoli_count), cell(r.ancillas));
    }
    return out;
}

}  // namespace teledepth
