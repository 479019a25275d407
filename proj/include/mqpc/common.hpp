// Copyright 2026 The mqpc Authors
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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace mqpc {

// All randomness flows through an explicitly seeded engine; there is no
// global RNG state anywhere in the library.
using Rng = std::mt19937_64;

// Canonical residue in [0, d).
inline int mod_d(long long value, int d) {
    long long r = value % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

// Uniform integer in [0, bound) by rejection sampling. Unlike
// std::uniform_int_distribution the mapping from engine output to result is
// fully pinned down, so seeded runs reproduce across toolchains.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw = rng();
    while (draw >= limit) {
        draw = rng();
    }
    return draw % bound;
}

inline int uniform_label(Rng& rng, int d) {
    return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(d)));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Samples an index from a probability vector. Probabilities are expected to
// sum to 1; the last positive entry absorbs rounding slack.
inline std::size_t sample_discrete(Rng& rng, std::span<const double> probabilities) {
    const double r = uniform_unit(rng);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] <= 0.0) {
            continue;
        }
        acc += probabilities[i];
        last_positive = i;
        if (r < acc) {
            return i;
        }
    }
    return last_positive;
}

// Which engine drives a protocol session: the symbolic label algebra or the
// dense state-vector oracle that re-verifies every measurement branch.
enum class EngineKind { symbolic, oracle };

inline const char* engine_name(EngineKind kind) {
    return kind == EngineKind::symbolic ? "symbolic" : "oracle";
}

}  // namespace mqpc
