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

#ifndef STABENT_PAULI_H
#define STABENT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "stabent/gf2.h"

namespace stabent {

/// An n-qubit Pauli operator i^phase · X^x Z^z.
///
/// The x/z bit vectors are the binary symplectic representation. The phase
/// exponent is tracked mod 4 so that products are exact; subgroup and metric
/// computations only ever look at the phase-stripped vector (x|z).
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on n qubits.
    explicit PauliOperator(size_t n);
    PauliOperator(BitVector x, BitVector z, uint8_t phase_exponent = 0);

    /// Parses the text form: optional sign ("+", "-", "−", "i", "+i", "-i")
    /// followed by one of I/X/Y/Z per qubit. Y is i·XZ.
    static PauliOperator from_string(std::string_view text);

    /// Hermitian Pauli with the given (x|z) vector; negative=true gives the
    /// -1 eigen-sign.
    static PauliOperator from_symplectic(const BitVector &xz, bool negative = false);

    /// Single-qubit X or Z on qubit q of n.
    static PauliOperator single(size_t n, size_t q, char kind);

    size_t num_qubits() const {
        return x_.size();
    }
    const BitVector &x() const {
        return x_;
    }
    const BitVector &z() const {
        return z_;
    }
    uint8_t phase_exponent() const {
        return phase_;
    }
    void set_phase_exponent(uint8_t phase) {
        phase_ = phase & 3;
    }

    bool x_bit(size_t q) const {
        return x_.get(q);
    }
    bool z_bit(size_t q) const {
        return z_.get(q);
    }
    void set_xz(size_t q, bool x, bool z) {
        x_.set(q, x);
        z_.set(q, z);
    }

    bool is_identity() const {
        return !x_.any() && !z_.any();
    }
    /// True when the operator squares to +I (phase ≡ x·z mod 2).
    bool is_hermitian() const;
    /// For Hermitian operators: whether the operator is -1 times the
    /// canonical Hermitian form (each Y counted as +Y).
    bool is_negative() const;

    /// Phase-stripped symplectic vector (x|z), length 2n.
    BitVector symplectic() const;

    bool operator==(const PauliOperator &other) const = default;

    std::string str() const;

   private:
    BitVector x_;
    BitVector z_;
    uint8_t phase_ = 0;
};

/// ω(P, Q): 1 when P and Q anticommute.
bool symplectic_product(const PauliOperator &p, const PauliOperator &q);

/// ω on symplectic vectors (x|z) of length 2n.
bool symplectic_product(const BitVector &a, const BitVector &b);

/// The vector (z|x) obtained by swapping the halves of (x|z), so that
/// ω(a, b) = a · symplectic_dual(b). Lets hot loops test many vectors
/// against one fixed vector with word-wide dot products.
BitVector symplectic_dual(const BitVector &xz);

/// Group product P·Q with exact phase.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);

/// Tensor factor of P on `qubits`, in the listed order, with phase 0.
PauliOperator restrict(const PauliOperator &p, std::span<const size_t> qubits);

/// Whether P acts as identity on every listed qubit.
bool is_identity_on(const PauliOperator &p, std::span<const size_t> qubits);

/// Tensor product P ⊗ Q (P on the low qubits).
PauliOperator tensor(const PauliOperator &p, const PauliOperator &q);

}  // namespace stabent

#endif
