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

#ifndef STABENT_CLIFFORD_H
#define STABENT_CLIFFORD_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stabent/gf2.h"
#include "stabent/pauli.h"
#include "stabent/random.h"
#include "stabent/stabilizer.h"

namespace stabent {

/// A Clifford group element modulo global phase, stored as its action on
/// the 2n standard Pauli generators.
///
/// Generators are ordered X_0, Z_0, X_1, Z_1, ... so generator 2q and
/// 2q+1 form the q-th anticommuting pair. Row j of matrix() is the (x|z)
/// vector of the image of generator j; sign bit j says whether that image
/// carries a -1. Rows pair up the same way the generators do, so the
/// symplectic condition is ω(row 2q, row 2q+1) = 1 and ω = 0 for every
/// other pair of rows.
class CliffordElement {
   public:
    CliffordElement() = default;
    CliffordElement(BitMatrix matrix, BitVector signs);

    static CliffordElement identity(size_t n);
    /// Images of X_0, Z_0, X_1, Z_1, ... Each image must be Hermitian.
    static CliffordElement from_images(const std::vector<PauliOperator> &images);

    static CliffordElement hadamard(size_t n, size_t q);
    static CliffordElement phase(size_t n, size_t q);
    static CliffordElement cnot(size_t n, size_t control, size_t target);

    size_t num_qubits() const {
        return signs_.size() / 2;
    }
    const BitMatrix &matrix() const {
        return matrix_;
    }
    const BitVector &signs() const {
        return signs_;
    }

    /// Image of generator j as a Hermitian Pauli.
    PauliOperator image(size_t j) const;
    PauliOperator image_of_x(size_t q) const {
        return image(2 * q);
    }
    PauliOperator image_of_z(size_t q) const {
        return image(2 * q + 1);
    }

    bool is_symplectic() const;

    bool operator==(const CliffordElement &other) const = default;

   private:
    BitMatrix matrix_;
    BitVector signs_;
};

/// c P c†.
PauliOperator apply(const CliffordElement &c, const PauliOperator &p);

/// c S c†, generator by generator.
StabilizerGroup apply(const CliffordElement &c, const StabilizerGroup &s);

/// c1 ∘ c2: apply(compose(c1, c2), P) == apply(c1, apply(c2, P)).
CliffordElement compose(const CliffordElement &c1, const CliffordElement &c2);

CliffordElement inverse(const CliffordElement &c);

/// Uniform over Sp(2n, 2) with independent uniform signs. The images of
/// each generator pair are drawn in turn, uniformly among completions
/// consistent with the pairs already fixed.
CliffordElement sample_uniform_clifford(size_t n, Rng &rng);

/// 2n - dim ker(M1 - M2). Signs are ignored.
size_t distance(const CliffordElement &c1, const CliffordElement &c2);

/// The stabilizer of c|0...0>: images of Z_0, ..., Z_{n-1}.
StabilizerGroup stabilizer_of_zero_state(const CliffordElement &c);

/// Text form: 2n lines, line j the signed image of generator j
/// (X_0, Z_0, X_1, Z_1, ...). Blank and '#' lines are skipped.
CliffordElement parse_clifford(std::string_view text);
std::string format_clifford(const CliffordElement &c);

}  // namespace stabent

#endif
