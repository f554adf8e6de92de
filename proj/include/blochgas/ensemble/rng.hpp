// Copyright 2026 The Blochgas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>

namespace blochgas::ensemble {

// Counter-based stream generator: each draw is the splitmix64 finalizer
// applied to key + counter * gamma. Streams are keyed by (seed, stream), so
// per-run substreams are independent of scheduling and execution order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next_u64() { return mix(key_ + (counter_++) * 0x9E3779B97F4A7C15ull); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Exponential waiting time with the given rate (> 0).
    double exponential(double rate) { return -std::log(1.0 - uniform01()) / rate; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace blochgas::ensemble
