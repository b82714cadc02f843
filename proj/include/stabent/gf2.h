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

#ifndef STABENT_GF2_H
#define STABENT_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabent {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past `size()` in the last word are kept at zero so that word-level
/// comparisons and popcounts never see garbage.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters (index 0 first).
    static BitVector from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    /// Inner product over GF(2).
    bool dot(const BitVector &other) const;
    bool any() const;
    size_t popcount() const;

    /// Clears any bits beyond size(); used after filling words directly.
    void mask_padding();

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_rows(std::span<const std::string_view> rows);
    static BitMatrix from_rows(std::initializer_list<std::string_view> rows);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }

    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }

    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }

    void push_row(BitVector row);

    BitMatrix transposed() const;
    BitMatrix operator+(const BitMatrix &other) const;
    /// Ordinary matrix product over GF(2).
    BitMatrix operator*(const BitMatrix &other) const;
    /// Row vector times matrix.
    BitVector left_multiply(const BitVector &v) const;
    /// Matrix times column vector.
    BitVector right_multiply(const BitVector &v) const;
    bool operator==(const BitMatrix &other) const = default;

    std::string str() const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RowEchelon {
    BitMatrix matrix;
    std::vector<size_t> pivots;
};

size_t rank(const BitMatrix &m);

/// Gaussian elimination of `rows` in place, pivoting only on columns
/// [0, num_pivot_cols). Returns the pivot columns; rows at index
/// >= pivots.size() are zero on that column prefix afterwards. With
/// full_reduce, pivot columns are also cleared above each pivot.
std::vector<size_t> eliminate_prefix(std::vector<BitVector> &rows, size_t num_pivot_cols, bool full_reduce = false);

/// Rows span {v : m v = 0}.
BitMatrix kernel_basis(const BitMatrix &m);

/// Reduced row-echelon form. Zero rows are kept (at the bottom), so the
/// result has the same shape as the input.
RowEchelon row_reduce(const BitMatrix &m);

/// Vertically stacks matrices that share a column count.
BitMatrix stack(std::span<const BitMatrix> parts);

/// dim(U_1 + ... + U_m) where each U_i is the row space of bases[i].
size_t subspace_sum_dim(std::span<const BitMatrix> bases);

/// dim(U ∩ V) for row spaces U and V.
size_t subspace_intersection_dim(const BitMatrix &u, const BitMatrix &v);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> inverse(const BitMatrix &m);

/// Replaces the basis of a subspace U by a basis of {u in U : u·f = 0}.
/// Returns the basis vector that was eliminated (one with u·f = 1), or
/// nullopt when f already annihilates U and nothing changed.
std::optional<BitVector> restrict_to_annihilator(std::vector<BitVector> &basis, const BitVector &f);

/// Incrementally maintained reduced basis of a subspace. Supports O(dim)
/// membership tests and insertions.
class SpanTracker {
   public:
    explicit SpanTracker(size_t num_cols) : num_cols_(num_cols) {
    }

    size_t dim() const {
        return basis_.size();
    }
    /// Reduces v against the stored basis. Returns the residue.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const;
    /// Adds v; returns false (and changes nothing) when v is already spanned.
    bool insert(BitVector v);

   private:
    size_t num_cols_;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace stabent

#endif
