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

#include "stabent/pauli.h"

#include <stdexcept>
#include <utility>

#include "stabent/errors.h"

namespace stabent {

namespace {

void require_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(p.num_qubits()) + " vs " + std::to_string(q.num_qubits()));
    }
}

size_t and_popcount(const BitVector &a, const BitVector &b) {
    size_t total = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (size_t k = 0; k < wa.size(); k++) {
        total += std::popcount(wa[k] & wb[k]);
    }
    return total;
}

}  // namespace

PauliOperator::PauliOperator(size_t n) : x_(n), z_(n) {
}

PauliOperator::PauliOperator(BitVector x, BitVector z, uint8_t phase_exponent)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase_exponent & 3) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliOperator: x and z lengths differ");
    }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    size_t pos = 0;
    uint8_t phase = 0;
    auto starts_with = [&](std::string_view prefix) {
        return text.substr(pos, prefix.size()) == prefix;
    };
    if (starts_with("+")) {
        pos += 1;
    } else if (starts_with("-")) {
        phase += 2;
        pos += 1;
    } else if (starts_with("−")) {
        phase += 2;
        pos += std::string_view("−").size();
    }
    if (starts_with("i")) {
        phase += 1;
        pos += 1;
    }
    size_t n = text.size() - pos;
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        switch (text[pos + q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set_xz(q, true, false);
                break;
            case 'Z':
                p.set_xz(q, false, true);
                break;
            case 'Y':
                p.set_xz(q, true, true);
                phase += 1;
                break;
            default:
                throw ParseError(
                    std::string("unexpected character '") + text[pos + q] + "' in Pauli string", 1, pos + q + 1);
        }
    }
    p.phase_ = phase & 3;
    return p;
}

PauliOperator PauliOperator::from_symplectic(const BitVector &xz, bool negative) {
    if (xz.size() % 2) {
        throw std::invalid_argument("from_symplectic: odd length");
    }
    size_t n = xz.size() / 2;
    PauliOperator p(n);
    size_t ys = 0;
    for (size_t q = 0; q < n; q++) {
        bool x = xz.get(q);
        bool z = xz.get(n + q);
        p.set_xz(q, x, z);
        ys += x && z;
    }
    p.phase_ = (ys + (negative ? 2 : 0)) & 3;
    return p;
}

PauliOperator PauliOperator::single(size_t n, size_t q, char kind) {
    if (q >= n) {
        throw std::out_of_range("PauliOperator::single: qubit out of range");
    }
    PauliOperator p(n);
    switch (kind) {
        case 'X':
            p.set_xz(q, true, false);
            break;
        case 'Z':
            p.set_xz(q, false, true);
            break;
        case 'Y':
            p.set_xz(q, true, true);
            p.phase_ = 1;
            break;
        default:
            throw std::invalid_argument("PauliOperator::single: kind must be X, Y or Z");
    }
    return p;
}

bool PauliOperator::is_hermitian() const {
    return (phase_ & 1) == (and_popcount(x_, z_) & 1);
}

bool PauliOperator::is_negative() const {
    return ((phase_ - and_popcount(x_, z_)) & 3) == 2;
}

BitVector PauliOperator::symplectic() const {
    size_t n = num_qubits();
    BitVector v(2 * n);
    for (size_t q = 0; q < n; q++) {
        v.set(q, x_.get(q));
        v.set(n + q, z_.get(q));
    }
    return v;
}

std::string PauliOperator::str() const {
    // Express as i^r · (Hermitian form with each Y written literally).
    uint8_t residual = (phase_ - and_popcount(x_, z_)) & 3;
    static constexpr const char *prefixes[] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[residual];
    for (size_t q = 0; q < num_qubits(); q++) {
        out += "IXZY"[x_.get(q) + 2 * z_.get(q)];
    }
    return out;
}

bool symplectic_product(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q);
    return (and_popcount(p.x(), q.z()) + and_popcount(p.z(), q.x())) & 1;
}

bool symplectic_product(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size() || a.size() % 2) {
        throw std::invalid_argument("symplectic_product: length mismatch");
    }
    size_t n = a.size() / 2;
    bool acc = false;
    for (size_t q = 0; q < n; q++) {
        acc ^= (a.get(q) & b.get(n + q)) ^ (a.get(n + q) & b.get(q));
    }
    return acc;
}

BitVector symplectic_dual(const BitVector &xz) {
    if (xz.size() % 2) {
        throw std::invalid_argument("symplectic_dual: odd length");
    }
    size_t n = xz.size() / 2;
    BitVector out(xz.size());
    for (size_t q = 0; q < n; q++) {
        out.set(q, xz.get(n + q));
        out.set(n + q, xz.get(q));
    }
    return out;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q);
    // X^a Z^b X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d}.
    uint8_t phase = p.phase_exponent() + q.phase_exponent() + 2 * (and_popcount(p.z(), q.x()) & 1);
    return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z(), phase);
}

PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

PauliOperator restrict(const PauliOperator &p, std::span<const size_t> qubits) {
    PauliOperator out(qubits.size());
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k] >= p.num_qubits()) {
            throw std::out_of_range("restrict: qubit index " + std::to_string(qubits[k]) + " out of range");
        }
        out.set_xz(k, p.x_bit(qubits[k]), p.z_bit(qubits[k]));
    }
    return out;
}

bool is_identity_on(const PauliOperator &p, std::span<const size_t> qubits) {
    for (size_t q : qubits) {
        if (q >= p.num_qubits()) {
            throw std::out_of_range("is_identity_on: qubit index " + std::to_string(q) + " out of range");
        }
        if (p.x_bit(q) || p.z_bit(q)) {
            return false;
        }
    }
    return true;
}

PauliOperator tensor(const PauliOperator &p, const PauliOperator &q) {
    size_t a = p.num_qubits();
    PauliOperator out(a + q.num_qubits());
    for (size_t k = 0; k < a; k++) {
        out.set_xz(k, p.x_bit(k), p.z_bit(k));
    }
    for (size_t k = 0; k < q.num_qubits(); k++) {
        out.set_xz(a + k, q.x_bit(k), q.z_bit(k));
    }
    out.set_phase_exponent(p.phase_exponent() + q.phase_exponent());
    return out;
}

}  // namespace stabent
