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

#include "teledepth/rng.h"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace teledepth {
namespace {

using Block = std::array<uint32_t, 4>;

TEST(Philox, KnownAnswerZero) {
    EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
    EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
    EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RngStream, Reproducible) {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 100; i++) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(RngStream, StreamsDiffer) {
    RngStream a(42, 0), b(42, 1), c(43, 0);
    std::set<uint64_t> seen{a.next_u64(), b.next_u64(), c.next_u64()};
    EXPECT_EQ(seen.size(), 3u);
}

TEST(RngStream, FirstWordsComeFromBlockZero) {
    RngStream s(0, 0);
    auto block = philox4x32_10({0, 0, 0, 0}, {0, 0});
    for (uint32_t w : block) {
        EXPECT_EQ(s.next_u32(), w);
    }
}

TEST(RngStream, UniformMoments) {
    RngStream s(1, 2);
    const int n = 200000;
    double sum = 0, sq = 0;
    for (int i = 0; i < n; i++) {
        double u = s.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sq += u * u;
    }
    EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
    EXPECT_NEAR(sq / n, 1.0 / 3, 0.005);
}

TEST(RngStream, BelowIsUnbiased) {
    RngStream s(5, 5);
    const int n = 64000;
    std::array<int, 64> hist{};
    for (int i = 0; i < n; i++) {
        uint32_t v = s.below(64);
        ASSERT_LT(v, 64u);
        hist[v]++;
    }
    for (int h : hist) {
        EXPECT_NEAR(h, 1000, 5 * std::sqrt(1000.0));
    }
}

TEST(RngStream, BernoulliEdges) {
    RngStream s(9, 9);
    for (int i = 0; i < 1000; i++) {
        EXPECT_FALSE(s.bernoulli(0));
        EXPECT_TRUE(s.bernoulli(1));
    }
}

TEST(SplitMix, KnownValue) {
    // First output of the reference splitmix64 generator seeded with 0.
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

}  // namespace
}  // namespace teledepth
