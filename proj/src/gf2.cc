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

#include "stabent/gf2.h"

#include <stdexcept>
#include <utility>

namespace stabent {

namespace {

size_t words_for(size_t num_bits) {
    return (num_bits + 63) >> 6;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            v.set(k, true);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
    }
    return v;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

bool BitVector::dot(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

void BitVector::mask_padding() {
    size_t tail = num_bits_ & 63;
    if (tail && !words_.empty()) {
        words_.back() &= (uint64_t{1} << tail) - 1;
    }
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const std::string_view> rows) {
    if (rows.empty()) {
        return BitMatrix();
    }
    BitMatrix m(0, rows[0].size());
    for (std::string_view r : rows) {
        m.push_row(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
    return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void BitMatrix::push_row(BitVector row) {
    if (rows_.empty() && num_cols_ == 0) {
        num_cols_ = row.size();
    }
    if (row.size() != num_cols_) {
        throw std::invalid_argument("BitMatrix::push_row: column count mismatch");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < num_cols_; c++) {
            if (rows_[r].get(c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::operator+(const BitMatrix &other) const {
    if (other.num_rows() != num_rows() || other.num_cols_ != num_cols_) {
        throw std::invalid_argument("BitMatrix shape mismatch");
    }
    BitMatrix sum = *this;
    for (size_t r = 0; r < rows_.size(); r++) {
        sum.rows_[r] ^= other.rows_[r];
    }
    return sum;
}

BitVector BitMatrix::left_multiply(const BitVector &v) const {
    if (v.size() != rows_.size()) {
        throw std::invalid_argument("BitMatrix::left_multiply: length mismatch");
    }
    BitVector out(num_cols_);
    for (size_t r = 0; r < rows_.size(); r++) {
        if (v.get(r)) {
            out ^= rows_[r];
        }
    }
    return out;
}

BitVector BitMatrix::right_multiply(const BitVector &v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("BitMatrix::right_multiply: length mismatch");
    }
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix &other) const {
    if (num_cols_ != other.num_rows()) {
        throw std::invalid_argument("BitMatrix product shape mismatch");
    }
    BitMatrix out(0, other.num_cols());
    for (const BitVector &r : rows_) {
        out.push_row(other.left_multiply(r));
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string out;
    for (const BitVector &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

std::vector<size_t> eliminate_prefix(std::vector<BitVector> &rows, size_t num_pivot_cols, bool full_reduce) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col = 0; col < num_pivot_cols && next < rows.size(); col++) {
        size_t w = col >> 6;
        uint64_t mask = uint64_t{1} << (col & 63);
        size_t found = next;
        while (found < rows.size() && !(rows[found].words()[w] & mask)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        const BitVector &pivot_row = rows[next];
        for (size_t r = full_reduce ? 0 : next + 1; r < rows.size(); r++) {
            if (r != next && (rows[r].words()[w] & mask)) {
                rows[r] ^= pivot_row;
            }
        }
        pivots.push_back(col);
        next++;
    }
    return pivots;
}

size_t rank(const BitMatrix &m) {
    std::vector<BitVector> rows = m.rows();
    return eliminate_prefix(rows, m.num_cols(), false).size();
}

RowEchelon row_reduce(const BitMatrix &m) {
    std::vector<BitVector> rows = m.rows();
    std::vector<size_t> pivots = eliminate_prefix(rows, m.num_cols(), true);
    BitMatrix reduced(0, m.num_cols());
    for (BitVector &r : rows) {
        reduced.push_row(std::move(r));
    }
    return {std::move(reduced), std::move(pivots)};
}

BitMatrix kernel_basis(const BitMatrix &m) {
    size_t n = m.num_cols();
    RowEchelon ech = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : ech.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(0, n);
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(n);
        v.set(free, true);
        for (size_t r = 0; r < ech.pivots.size(); r++) {
            if (ech.matrix.get(r, free)) {
                v.set(ech.pivots[r], true);
            }
        }
        basis.push_row(std::move(v));
    }
    return basis;
}

BitMatrix stack(std::span<const BitMatrix> parts) {
    if (parts.empty()) {
        return BitMatrix();
    }
    BitMatrix out(0, parts[0].num_cols());
    for (const BitMatrix &p : parts) {
        if (p.num_cols() != out.num_cols()) {
            throw std::invalid_argument("stack: column count mismatch");
        }
        for (const BitVector &r : p.rows()) {
            out.push_row(r);
        }
    }
    return out;
}

size_t subspace_sum_dim(std::span<const BitMatrix> bases) {
    return rank(stack(bases));
}

size_t subspace_intersection_dim(const BitMatrix &u, const BitMatrix &v) {
    if (u.num_cols() != v.num_cols()) {
        throw std::invalid_argument("subspace_intersection_dim: column count mismatch");
    }
    BitMatrix both[] = {u, v};
    return rank(u) + rank(v) - subspace_sum_dim(both);
}

std::optional<BitMatrix> inverse(const BitMatrix &m) {
    size_t n = m.num_rows();
    if (m.num_cols() != n) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    // Eliminate on [m | I].
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (size_t r = 0; r < n; r++) {
        BitVector aug(2 * n);
        for (size_t c = 0; c < n; c++) {
            aug.set(c, m.get(r, c));
        }
        aug.set(n + r, true);
        rows.push_back(std::move(aug));
    }
    std::vector<size_t> pivots = eliminate_prefix(rows, n, true);
    if (pivots.size() != n) {
        return std::nullopt;
    }
    BitMatrix inv(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            inv.set(r, c, rows[r].get(n + c));
        }
    }
    return inv;
}

std::optional<BitVector> restrict_to_annihilator(std::vector<BitVector> &basis, const BitVector &f) {
    size_t pivot = basis.size();
    for (size_t k = 0; k < basis.size(); k++) {
        if (basis[k].dot(f)) {
            pivot = k;
            break;
        }
    }
    if (pivot == basis.size()) {
        return std::nullopt;
    }
    for (size_t k = pivot + 1; k < basis.size(); k++) {
        if (basis[k].dot(f)) {
            basis[k] ^= basis[pivot];
        }
    }
    BitVector removed = std::move(basis[pivot]);
    basis.erase(basis.begin() + pivot);
    return removed;
}

BitVector SpanTracker::reduce(BitVector v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("SpanTracker: length mismatch");
    }
    for (size_t k = 0; k < basis_.size(); k++) {
        if (v.get(pivots_[k])) {
            v ^= basis_[k];
        }
    }
    return v;
}

bool SpanTracker::contains(const BitVector &v) const {
    return !reduce(v).any();
}

bool SpanTracker::insert(BitVector v) {
    v = reduce(std::move(v));
    if (!v.any()) {
        return false;
    }
    size_t pivot = 0;
    for (size_t w = 0; w < v.num_words(); w++) {
        if (v.words()[w]) {
            pivot = (w << 6) + std::countr_zero(v.words()[w]);
            break;
        }
    }
    // Keep the basis fully reduced so reduce() is a single pass.
    for (BitVector &b : basis_) {
        if (b.get(pivot)) {
            b ^= v;
        }
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace stabent
