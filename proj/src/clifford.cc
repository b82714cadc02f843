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

#include "stabent/clifford.h"

#include <stdexcept>
#include <utility>

#include "stabent/errors.h"

namespace stabent {

namespace {

void require_same_size(size_t a, size_t b) {
    if (a != b) {
        throw std::invalid_argument("Clifford size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

// Builds the element whose generator images are given by symplectic rows,
// then picks signs so that c maps each image back to +generator.
CliffordElement with_positive_round_trip(const CliffordElement &c, BitMatrix rows) {
    size_t n2 = rows.num_rows();
    CliffordElement candidate(std::move(rows), BitVector(n2));
    BitVector signs(n2);
    for (size_t j = 0; j < n2; j++) {
        PauliOperator back = apply(c, candidate.image(j));
        if (back.is_negative()) {
            signs.set(j, true);
        }
    }
    return CliffordElement(candidate.matrix(), signs);
}

}  // namespace

CliffordElement::CliffordElement(BitMatrix matrix, BitVector signs) : matrix_(std::move(matrix)), signs_(std::move(signs)) {
    if (matrix_.num_rows() != signs_.size() || matrix_.num_cols() != signs_.size() || signs_.size() % 2) {
        throw std::invalid_argument("CliffordElement: matrix must be 2n x 2n with 2n signs");
    }
}

CliffordElement CliffordElement::identity(size_t n) {
    BitMatrix m(0, 2 * n);
    for (size_t q = 0; q < n; q++) {
        m.push_row(PauliOperator::single(n, q, 'X').symplectic());
        m.push_row(PauliOperator::single(n, q, 'Z').symplectic());
    }
    return CliffordElement(std::move(m), BitVector(2 * n));
}

CliffordElement CliffordElement::from_images(const std::vector<PauliOperator> &images) {
    if (images.size() % 2) {
        throw std::invalid_argument("from_images: need an even number of images");
    }
    size_t n = images.size() / 2;
    BitMatrix m(0, 2 * n);
    BitVector signs(2 * n);
    for (size_t j = 0; j < images.size(); j++) {
        if (images[j].num_qubits() != n) {
            throw std::invalid_argument("from_images: image " + std::to_string(j) + " has the wrong qubit count");
        }
        if (!images[j].is_hermitian()) {
            throw ValidityError("from_images: image " + std::to_string(j) + " is not Hermitian");
        }
        m.push_row(images[j].symplectic());
        signs.set(j, images[j].is_negative());
    }
    CliffordElement c(std::move(m), std::move(signs));
    if (!c.is_symplectic()) {
        throw ValidityError("from_images: images do not preserve commutation relations");
    }
    return c;
}

CliffordElement CliffordElement::hadamard(size_t n, size_t q) {
    std::vector<PauliOperator> images;
    for (size_t k = 0; k < n; k++) {
        images.push_back(PauliOperator::single(n, k, k == q ? 'Z' : 'X'));
        images.push_back(PauliOperator::single(n, k, k == q ? 'X' : 'Z'));
    }
    return from_images(images);
}

CliffordElement CliffordElement::phase(size_t n, size_t q) {
    // S X S† = Y, S Z S† = Z.
    std::vector<PauliOperator> images;
    for (size_t k = 0; k < n; k++) {
        images.push_back(PauliOperator::single(n, k, k == q ? 'Y' : 'X'));
        images.push_back(PauliOperator::single(n, k, 'Z'));
    }
    return from_images(images);
}

CliffordElement CliffordElement::cnot(size_t n, size_t control, size_t target) {
    if (control == target || control >= n || target >= n) {
        throw std::invalid_argument("cnot: bad qubit indices");
    }
    // X_c -> X_c X_t, Z_t -> Z_c Z_t.
    std::vector<PauliOperator> images;
    for (size_t k = 0; k < n; k++) {
        PauliOperator x = PauliOperator::single(n, k, 'X');
        PauliOperator z = PauliOperator::single(n, k, 'Z');
        if (k == control) {
            x = x * PauliOperator::single(n, target, 'X');
        }
        if (k == target) {
            z = PauliOperator::single(n, control, 'Z') * z;
        }
        images.push_back(std::move(x));
        images.push_back(std::move(z));
    }
    return from_images(images);
}

PauliOperator CliffordElement::image(size_t j) const {
    return PauliOperator::from_symplectic(matrix_.row(j), signs_.get(j));
}

bool CliffordElement::is_symplectic() const {
    size_t n2 = signs_.size();
    for (size_t a = 0; a < n2; a++) {
        BitVector dual = symplectic_dual(matrix_.row(a));
        for (size_t b = a + 1; b < n2; b++) {
            bool expected = (a % 2 == 0) && b == a + 1;
            if (matrix_.row(b).dot(dual) != expected) {
                return false;
            }
        }
    }
    return true;
}

PauliOperator apply(const CliffordElement &c, const PauliOperator &p) {
    size_t n = c.num_qubits();
    require_same_size(n, p.num_qubits());
    // P = i^e X^x Z^z, so cPc† = i^e Π c X_q c† · Π c Z_q c† in that order.
    PauliOperator out(n);
    out.set_phase_exponent(p.phase_exponent());
    for (size_t q = 0; q < n; q++) {
        if (p.x_bit(q)) {
            out = out * c.image_of_x(q);
        }
    }
    for (size_t q = 0; q < n; q++) {
        if (p.z_bit(q)) {
            out = out * c.image_of_z(q);
        }
    }
    return out;
}

StabilizerGroup apply(const CliffordElement &c, const StabilizerGroup &s) {
    require_same_size(c.num_qubits(), s.num_qubits());
    std::vector<PauliOperator> gens;
    gens.reserve(s.dim());
    for (const PauliOperator &g : s.generators()) {
        gens.push_back(apply(c, g));
    }
    return StabilizerGroup(s.num_qubits(), std::move(gens));
}

CliffordElement compose(const CliffordElement &c1, const CliffordElement &c2) {
    require_same_size(c1.num_qubits(), c2.num_qubits());
    size_t n2 = 2 * c1.num_qubits();
    BitMatrix m(0, n2);
    BitVector signs(n2);
    for (size_t j = 0; j < n2; j++) {
        PauliOperator img = apply(c1, c2.image(j));
        m.push_row(img.symplectic());
        signs.set(j, img.is_negative());
    }
    return CliffordElement(std::move(m), std::move(signs));
}

CliffordElement inverse(const CliffordElement &c) {
    // With P the identity element's matrix (generator order -> (x|z)
    // coordinates), c acts on (x|z) row vectors as b -> b P^{-1} M. The
    // inverse map b -> b M^{-1} P therefore has matrix P M^{-1} P.
    std::optional<BitMatrix> inv = stabent::inverse(c.matrix());
    if (!inv) {
        throw ValidityError("inverse: matrix is singular");
    }
    const BitMatrix perm = CliffordElement::identity(c.num_qubits()).matrix();
    return with_positive_round_trip(c, perm * *inv * perm);
}

CliffordElement sample_uniform_clifford(size_t n, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("sample_uniform_clifford: n must be positive");
    }
    size_t dim = 2 * n;
    // Basis of the symplectic complement of the pairs fixed so far.
    std::vector<BitVector> complement = BitMatrix::identity(dim).rows();
    BitMatrix m(0, dim);
    for (size_t q = 0; q < n; q++) {
        BitVector v(dim);
        do {
            v = random_combination(complement, dim, rng);
        } while (!v.any());
        // w = b + (uniform element of complement ∩ v^⊥), where b is the
        // eliminated basis vector with ω(b, v) = 1.
        std::optional<BitVector> b = restrict_to_annihilator(complement, symplectic_dual(v));
        BitVector w = *b ^ random_combination(complement, dim, rng);
        restrict_to_annihilator(complement, symplectic_dual(w));
        m.push_row(std::move(v));
        m.push_row(std::move(w));
    }
    return CliffordElement(std::move(m), random_bits(dim, rng));
}

size_t distance(const CliffordElement &c1, const CliffordElement &c2) {
    require_same_size(c1.num_qubits(), c2.num_qubits());
    // 2n - dim ker(M1 + M2) = rank(M1 + M2).
    return rank(c1.matrix() + c2.matrix());
}

StabilizerGroup stabilizer_of_zero_state(const CliffordElement &c) {
    size_t n = c.num_qubits();
    std::vector<PauliOperator> gens;
    gens.reserve(n);
    for (size_t q = 0; q < n; q++) {
        gens.push_back(c.image_of_z(q));
    }
    return StabilizerGroup(n, std::move(gens));
}

CliffordElement parse_clifford(std::string_view text) {
    std::vector<PauliOperator> images;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        line_no++;
        pos = end + 1;
        size_t lead = line.find_first_not_of(" \t\r");
        if (lead == std::string_view::npos || line[lead] == '#') {
            continue;
        }
        size_t trail = line.find_last_not_of(" \t\r");
        try {
            images.push_back(PauliOperator::from_string(line.substr(lead, trail - lead + 1)));
        } catch (const ParseError &e) {
            throw ParseError("bad Pauli string", line_no, lead + e.column());
        }
        if (images.back().num_qubits() != images.front().num_qubits()) {
            throw ParseError("inconsistent qubit count", line_no, lead + 1);
        }
    }
    if (images.empty() || images.size() != 2 * images[0].num_qubits()) {
        throw ParseError("expected 2n image lines for n qubits", line_no, 1);
    }
    return CliffordElement::from_images(images);
}

std::string format_clifford(const CliffordElement &c) {
    std::string out;
    for (size_t j = 0; j < 2 * c.num_qubits(); j++) {
        out += c.image(j).str();
        out += '\n';
    }
    return out;
}

}  // namespace stabent
