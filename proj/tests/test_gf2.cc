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

#include <stdexcept>

#include "doctest.h"
#include "helpers.h"
#include "stabent/gf2.h"

using namespace stabent;

TEST_CASE("rank examples") {
    CHECK(rank(BitMatrix::identity(5)) == 5);
    CHECK(rank(BitMatrix(3, 5)) == 0);
    CHECK(rank(BitMatrix::from_rows({"11", "11"})) == 1);
}

TEST_CASE("rank leaves input unchanged") {
    BitMatrix m = BitMatrix::from_rows({"110", "011", "101"});
    BitMatrix copy = m;
    CHECK(rank(m) == 2);
    CHECK(m == copy);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(BitMatrix::identity(2)).num_rows() == 0);
    CHECK(kernel_basis(BitMatrix(2, 3)).num_rows() == 3);
    BitMatrix k = kernel_basis(BitMatrix::from_rows({"110", "011"}));
    REQUIRE(k.num_rows() == 1);
    CHECK(k.row(0).str() == "111");
}

TEST_CASE("row_reduce examples") {
    RowEchelon id = row_reduce(BitMatrix::identity(4));
    CHECK(id.matrix == BitMatrix::identity(4));
    CHECK(id.pivots == std::vector<size_t>{0, 1, 2, 3});

    RowEchelon dup = row_reduce(BitMatrix::from_rows({"11", "11"}));
    CHECK(dup.matrix == BitMatrix::from_rows({"11", "00"}));
    CHECK(dup.pivots == std::vector<size_t>{0});

    RowEchelon zero = row_reduce(BitMatrix(2, 3));
    CHECK(zero.matrix == BitMatrix(2, 3));
    CHECK(zero.pivots.empty());
}

TEST_CASE("subspace sums and intersections") {
    BitMatrix e1 = BitMatrix::from_rows({"10"});
    BitMatrix e2 = BitMatrix::from_rows({"01"});
    BitMatrix e12 = BitMatrix::from_rows({"11"});
    BitMatrix u = BitMatrix::from_rows({"110", "011"});

    BitMatrix self[] = {u, u};
    CHECK(subspace_sum_dim(self) == 2);
    BitMatrix pair[] = {e1, e2};
    CHECK(subspace_sum_dim(pair) == 2);
    BitMatrix triple[] = {e1, e12, e2};
    CHECK(subspace_sum_dim(triple) == 2);

    CHECK(subspace_intersection_dim(u, u) == 2);
    CHECK(subspace_intersection_dim(e1, e2) == 0);
    CHECK(subspace_intersection_dim(BitMatrix::from_rows({"100", "010"}), BitMatrix::from_rows({"010", "001"})) == 1);
}

TEST_CASE("shape mismatches throw") {
    CHECK_THROWS_AS(BitMatrix(2, 2) + BitMatrix(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(subspace_intersection_dim(BitMatrix(1, 2), BitMatrix(1, 3)), std::invalid_argument);
    BitVector a(3);
    CHECK_THROWS_AS(a ^= BitVector(4), std::invalid_argument);
    CHECK_THROWS_AS(BitVector::from_string("012"), std::invalid_argument);
}

TEST_CASE("padding stays zero across word boundaries") {
    BitVector v(70);
    for (size_t k = 0; k < 70; k++) {
        v.set(k, true);
    }
    CHECK(v.popcount() == 70);
    CHECK(v.words()[1] == (uint64_t{1} << 6) - 1);
    v.words()[1] = ~uint64_t{0};
    v.mask_padding();
    CHECK(v.popcount() == 70);
}

TEST_CASE("rank-nullity, kernel and row space on random matrices") {
    for (size_t t = 0; t < 200; t++) {
        Rng rng = stream_rng(11, t);
        size_t rows = 1 + rng() % 40;
        size_t cols = 1 + rng() % 140;
        BitMatrix m = testing::random_matrix(rows, cols, rng);
        size_t r = rank(m);
        BitMatrix k = kernel_basis(m);
        CHECK(r <= std::min(rows, cols));
        CHECK(r + k.num_rows() == cols);
        for (const BitVector &v : k.rows()) {
            CHECK_FALSE(m.right_multiply(v).any());
        }
        CHECK(rank(k) == k.num_rows());
        BitMatrix both[] = {m, row_reduce(m).matrix};
        CHECK(rank(stack(both)) == r);
    }
}

TEST_CASE("rank is subadditive") {
    for (size_t t = 0; t < 200; t++) {
        Rng rng = stream_rng(12, t);
        size_t rows = 1 + rng() % 30;
        size_t cols = 1 + rng() % 90;
        BitMatrix a = testing::random_matrix(rows, cols, rng);
        BitMatrix b = testing::random_matrix(rows, cols, rng);
        CHECK(rank(a + b) <= rank(a) + rank(b));
    }
}

TEST_CASE("inverse") {
    CHECK_FALSE(inverse(BitMatrix::from_rows({"11", "11"})).has_value());
    for (size_t t = 0; t < 100; t++) {
        Rng rng = stream_rng(13, t);
        size_t n = 1 + rng() % 70;
        BitMatrix m = testing::random_matrix(n, n, rng);
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == n));
        if (inv) {
            CHECK(m * *inv == BitMatrix::identity(n));
            CHECK(*inv * m == BitMatrix::identity(n));
        }
    }
}

TEST_CASE("restrict_to_annihilator") {
    Rng rng = stream_rng(14, 0);
    BitMatrix m = testing::random_matrix(10, 30, rng);
    std::vector<BitVector> basis = row_reduce(m).matrix.rows();
    basis.resize(rank(m));
    size_t before = basis.size();
    BitVector f(30);
    f.set(3, true);
    f.set(17, true);
    auto removed = restrict_to_annihilator(basis, f);
    for (const BitVector &b : basis) {
        CHECK_FALSE(b.dot(f));
    }
    if (removed) {
        CHECK(removed->dot(f));
        CHECK(basis.size() == before - 1);
    } else {
        CHECK(basis.size() == before);
    }
    BitMatrix all(0, 30);
    for (const BitVector &b : basis) {
        all.push_row(b);
    }
    CHECK(rank(all) == basis.size());
    CHECK_FALSE(restrict_to_annihilator(basis, f).has_value());
}

TEST_CASE("SpanTracker matches rank") {
    for (size_t t = 0; t < 50; t++) {
        Rng rng = stream_rng(15, t);
        size_t cols = 1 + rng() % 100;
        SpanTracker span(cols);
        BitMatrix seen(0, cols);
        for (size_t k = 0; k < 40; k++) {
            BitVector v = testing::random_matrix(1, cols, rng).row(0);
            if (k % 3 == 2 && seen.num_rows() >= 2) {
                v = seen.row(0) ^ seen.row(seen.num_rows() - 1);
            }
            bool was_spanned = span.contains(v);
            seen.push_row(v);
            CHECK(span.insert(v) == !was_spanned);
            CHECK(span.dim() == rank(seen));
        }
    }
}
