// Copyright 2026 The stabent Authors
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

#ifndef STABENT_RANDOM_H
#define STABENT_RANDOM_H

#include <cstdint>
#include <random>
#include <vector>

#include "stabent/gf2.h"

namespace stabent {

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent generator for trial `stream` of a run seeded with `seed`.
/// Depends only on (seed, stream), so trials can run in any order.
inline Rng stream_rng(uint64_t seed, uint64_t stream) {
    uint64_t a = splitmix64(seed);
    uint64_t b = splitmix64(a ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
    std::seed_seq seq{uint32_t(a), uint32_t(a >> 32), uint32_t(b), uint32_t(b >> 32)};
    return Rng(seq);
}

/// Uniformly random vector of the given length.
inline BitVector random_bits(size_t num_bits, Rng &rng) {
    BitVector v(num_bits);
    for (uint64_t &w : v.words()) {
        w = rng();
    }
    v.mask_padding();
    return v;
}

/// Uniform element of the span of `basis` (vectors of length num_cols).
inline BitVector random_combination(const std::vector<BitVector> &basis, size_t num_cols, Rng &rng) {
    BitVector out(num_cols);
    BitVector coeffs = random_bits(basis.size(), rng);
    for (size_t k = 0; k < basis.size(); k++) {
        if (coeffs.get(k)) {
            out ^= basis[k];
        }
    }
    return out;
}

}  // namespace stabent

#endif
