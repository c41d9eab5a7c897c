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

#include <array>
#include <cstdint>

namespace teledepth {

/// Philox4x32-10 block function (Salmon et al., Random123).
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// splitmix64 finalizer; used to derive child seeds.
uint64_t splitmix64(uint64_t x);

/// Counter-based random stream. The key is the 64-bit seed, the counter is
/// (block index lo, block index hi, stream lo, stream hi). Two streams with different
/// (seed, stream) pairs never share a counter, so trajectories can run in any order.
class RngStream {
   public:
    RngStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {
    }

    uint32_t next_u32();
    uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [0, n), unbiased (Lemire with rejection).
    uint32_t below(uint32_t n);
    bool bernoulli(double p) {
        return p > 0 && uniform() < p;
    }

    uint64_t seed() const {
        return seed_;
    }
    uint64_t stream() const {
        return stream_;
    }

   private:
    void refill();

    uint64_t seed_;
    uint64_t stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int available_ = 0;
};

}  // namespace teledepth
