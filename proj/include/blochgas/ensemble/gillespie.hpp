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

#include <cstdint>
#include <vector>

namespace blochgas::ensemble {

struct McConfig {
    int n_atoms = 0;
    double gamma = 1.0;
    int runs = 1;
    std::uint64_t seed = 0;
    std::vector<double> sample_times;  // ascending, nonnegative
};

// Sampled excited fractions, one row per run.
struct McSamples {
    std::vector<double> times;
    int runs = 0;
    std::vector<double> fractions;  // row-major runs x times

    double at(int run, std::size_t time_idx) const {
        return fractions[static_cast<std::size_t>(run) * times.size() + time_idx];
    }
    double mean(std::size_t time_idx) const;
    double std_error(std::size_t time_idx) const;
};

// Event-driven simulation of the pair-decay counting process: with m excited
// atoms the next event fires after an exponential time with total rate
// (gamma/N) m(m-1)/2 and removes one excited pair. Each run draws from its
// own counter-based substream of the master seed, so results are identical
// for any thread count and execution order.
McSamples gillespie_decay(const McConfig& cfg, int m0_excited, int threads = 1);

}  // namespace blochgas::ensemble
