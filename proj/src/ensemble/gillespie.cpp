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

#include "blochgas/ensemble/gillespie.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "blochgas/ensemble/rng.hpp"

namespace blochgas::ensemble {

double McSamples::mean(std::size_t time_idx) const {
    double acc = 0.0;
    for (int r = 0; r < runs; ++r) {
        acc += at(r, time_idx);
    }
    return acc / runs;
}

double McSamples::std_error(std::size_t time_idx) const {
    if (runs < 2) {
        return 0.0;
    }
    const double m = mean(time_idx);
    double ss = 0.0;
    for (int r = 0; r < runs; ++r) {
        const double d = at(r, time_idx) - m;
        ss += d * d;
    }
    return std::sqrt(ss / (static_cast<double>(runs) * (runs - 1)));
}

namespace {

void validate(const McConfig& cfg, int m0) {
    if (cfg.n_atoms < 2) {
        throw std::invalid_argument("gillespie_decay: need at least two atoms");
    }
    if (cfg.gamma <= 0.0) {
        throw std::invalid_argument("gillespie_decay: gamma must be positive");
    }
    if (cfg.runs < 1) {
        throw std::invalid_argument("gillespie_decay: runs must be >= 1");
    }
    if (m0 < 0 || m0 > cfg.n_atoms) {
        throw std::invalid_argument("gillespie_decay: m0 out of range");
    }
    if (m0 % 2 != 0) {
        throw std::invalid_argument("gillespie_decay: m0 must be even");
    }
    double prev = -std::numeric_limits<double>::infinity();
    for (double t : cfg.sample_times) {
        if (t < 0.0 || t <= prev) {
            throw std::invalid_argument("gillespie_decay: sample times must be ascending and >= 0");
        }
        prev = t;
    }
    if (cfg.sample_times.empty()) {
        throw std::invalid_argument("gillespie_decay: no sample times");
    }
}

void simulate_run(const McConfig& cfg, int m0, int run, double* row) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(run));
    int m = m0;
    double now = 0.0;
    double next_event = std::numeric_limits<double>::infinity();
    if (m >= 2) {
        const double rate = cfg.gamma / cfg.n_atoms * (0.5 * m * (m - 1));
        next_event = rng.exponential(rate);
    }
    for (std::size_t j = 0; j < cfg.sample_times.size(); ++j) {
        const double target = cfg.sample_times[j];
        while (next_event <= target) {
            now = next_event;
            m -= 2;
            if (m >= 2) {
                const double rate = cfg.gamma / cfg.n_atoms * (0.5 * m * (m - 1));
                next_event = now + rng.exponential(rate);
            } else {
                next_event = std::numeric_limits<double>::infinity();
            }
        }
        row[j] = static_cast<double>(m) / cfg.n_atoms;
    }
}

}  // namespace

McSamples gillespie_decay(const McConfig& cfg, int m0_excited, int threads) {
    validate(cfg, m0_excited);
    McSamples out;
    out.times = cfg.sample_times;
    out.runs = cfg.runs;
    out.fractions.assign(static_cast<std::size_t>(cfg.runs) * cfg.sample_times.size(), 0.0);

    const std::size_t stride = cfg.sample_times.size();
    auto work = [&](int first, int last) {
        for (int r = first; r < last; ++r) {
            simulate_run(cfg, m0_excited, r, out.fractions.data() + r * stride);
        }
    };

    const int workers = std::max(1, std::min(threads, cfg.runs));
    if (workers == 1) {
        work(0, cfg.runs);
    } else {
        // Rows are disjoint, so the result is identical for any split.
        std::vector<std::thread> pool;
        const int chunk = (cfg.runs + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int first = w * chunk;
            const int last = std::min(cfg.runs, first + chunk);
            if (first < last) {
                pool.emplace_back(work, first, last);
            }
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return out;
}

}  // namespace blochgas::ensemble
