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

#ifndef STABENT_TESTS_HELPERS_H
#define STABENT_TESTS_HELPERS_H

#include <random>

#include "stabent/gf2.h"
#include "stabent/random.h"

namespace stabent::testing {

inline BitMatrix random_matrix(size_t rows, size_t cols, Rng &rng) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

// Pearson statistic against a uniform distribution over counts.size() cells.
inline double chi_square_uniform(const std::vector<size_t> &counts) {
    double total = 0;
    for (size_t c : counts) {
        total += c;
    }
    double expected = total / counts.size();
    double stat = 0;
    for (size_t c : counts) {
        stat += (c - expected) * (c - expected) / expected;
    }
    return stat;
}

// Upper 1e-3 quantile of chi-square with 5 degrees of freedom.
constexpr double kChiSquare5At1e3 = 20.515;

}  // namespace stabent::testing

#endif
