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

#include "stabent/oracle.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "stabent/errors.h"

namespace stabent::oracle {

namespace {

using cd = std::complex<double>;

constexpr cd phase_factor(uint8_t e) {
    switch (e & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

uint64_t mask_of(const BitVector &v) {
    uint64_t m = 0;
    for (size_t k = 0; k < v.size(); k++) {
        m |= uint64_t(v.get(k)) << k;
    }
    return m;
}

// ω on masks whose low n bits are x and next n bits are z.
bool omega(uint64_t a, uint64_t b, size_t n) {
    uint64_t low = (uint64_t{1} << n) - 1;
    uint64_t ax = a & low, az = a >> n, bx = b & low, bz = b >> n;
    return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

std::set<uint64_t> xor_closure(const std::vector<uint64_t> &vectors) {
    std::set<uint64_t> span{0};
    for (uint64_t v : vectors) {
        if (span.count(v)) {
            continue;
        }
        std::vector<uint64_t> added;
        for (uint64_t s : span) {
            added.push_back(s ^ v);
        }
        span.insert(added.begin(), added.end());
    }
    return span;
}

void require_dense(size_t n, size_t cap) {
    if (n > cap) {
        throw CapacityError("dense oracle limited to " + std::to_string(cap) + " qubits, got " + std::to_string(n));
    }
}

size_t exact_log2(size_t count) {
    return std::countr_zero(count);
}

}  // namespace

StateVector apply_pauli(const PauliOperator &p, const StateVector &psi) {
    size_t n = p.num_qubits();
    if (psi.size() != (Eigen::Index(1) << n)) {
        throw std::invalid_argument("apply_pauli: state size mismatch");
    }
    uint64_t x = mask_of(p.x());
    uint64_t z = mask_of(p.z());
    cd global = phase_factor(p.phase_exponent());
    StateVector out = StateVector::Zero(psi.size());
    for (uint64_t j = 0; j < uint64_t(psi.size()); j++) {
        // X^x Z^z |j> = (-1)^{z·j} |j ⊕ x>.
        double sign = (std::popcount(z & j) & 1) ? -1.0 : 1.0;
        out[j ^ x] += global * sign * psi[j];
    }
    return out;
}

DensityMatrix pauli_matrix(const PauliOperator &p) {
    size_t dim = size_t{1} << p.num_qubits();
    DensityMatrix m(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        StateVector e = StateVector::Zero(dim);
        e[c] = 1;
        m.col(c) = apply_pauli(p, e);
    }
    return m;
}

StateVector state_vector(const StabilizerGroup &s, const Limits &limits) {
    require_dense(s.num_qubits(), limits.max_dense_qubits);
    if (!s.is_pure()) {
        throw std::invalid_argument("state_vector: group is not pure; use density_matrix");
    }
    size_t dim = size_t{1} << s.num_qubits();
    for (size_t start = 0; start < dim; start++) {
        StateVector psi = StateVector::Zero(dim);
        psi[start] = 1;
        for (const PauliOperator &g : s.generators()) {
            psi = 0.5 * (psi + apply_pauli(g, psi));
        }
        double norm = psi.norm();
        if (norm > 1e-6) {
            return psi / norm;
        }
    }
    throw ValidityError("state_vector: projector is zero (inconsistent generators)");
}

DensityMatrix density_matrix(const StabilizerGroup &s, const Limits &limits) {
    require_dense(s.num_qubits(), limits.max_mixed_qubits);
    size_t dim = size_t{1} << s.num_qubits();
    DensityMatrix proj(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        StateVector col = StateVector::Zero(dim);
        col[c] = 1;
        for (const PauliOperator &g : s.generators()) {
            col = 0.5 * (col + apply_pauli(g, col));
        }
        proj.col(c) = col;
    }
    cd trace = proj.trace();
    if (std::abs(trace) < 1e-9) {
        throw ValidityError("density_matrix: projector is zero (inconsistent generators)");
    }
    return proj / trace;
}

DensityMatrix reduce(const StateVector &psi, std::span<const size_t> party) {
    size_t n = std::countr_zero(size_t(psi.size()));
    size_t a = party.size();
    size_t rest = n - a;
    std::vector<bool> in_party(n, false);
    for (size_t q : party) {
        in_party.at(q) = true;
    }
    std::vector<size_t> others;
    for (size_t q = 0; q < n; q++) {
        if (!in_party[q]) {
            others.push_back(q);
        }
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index(1) << a, Eigen::Index(1) << rest);
    for (uint64_t j = 0; j < uint64_t(psi.size()); j++) {
        uint64_t row = 0;
        uint64_t col = 0;
        for (size_t k = 0; k < a; k++) {
            row |= ((j >> party[k]) & 1) << k;
        }
        for (size_t k = 0; k < rest; k++) {
            col |= ((j >> others[k]) & 1) << k;
        }
        m(row, col) = psi[j];
    }
    return m * m.adjoint();
}

DensityMatrix reduce(const DensityMatrix &rho, std::span<const size_t> party) {
    size_t n = std::countr_zero(size_t(rho.rows()));
    size_t a = party.size();
    std::vector<bool> in_party(n, false);
    for (size_t q : party) {
        in_party.at(q) = true;
    }
    uint64_t party_mask = 0;
    for (size_t q : party) {
        party_mask |= uint64_t{1} << q;
    }
    auto project = [&](uint64_t j) {
        uint64_t r = 0;
        for (size_t k = 0; k < a; k++) {
            r |= ((j >> party[k]) & 1) << k;
        }
        return r;
    };
    DensityMatrix out = DensityMatrix::Zero(Eigen::Index(1) << a, Eigen::Index(1) << a);
    for (uint64_t i = 0; i < uint64_t(rho.rows()); i++) {
        for (uint64_t j = 0; j < uint64_t(rho.cols()); j++) {
            // Trace over the complement: only entries agreeing off the party.
            if ((i & ~party_mask) != (j & ~party_mask)) {
                continue;
            }
            out(project(i), project(j)) += rho(i, j);
        }
    }
    return out;
}

double entropy(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
    double h = 0;
    for (double lambda : solver.eigenvalues()) {
        if (lambda > 1e-14) {
            h -= lambda * std::log2(lambda);
        }
    }
    return h;
}

size_t matrix_rank(const DensityMatrix &rho, double tolerance) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
    size_t r = 0;
    for (double lambda : solver.eigenvalues()) {
        r += lambda > tolerance;
    }
    return r;
}

double entropy_of_reduction(const StabilizerGroup &s, std::span<const size_t> party, const Limits &limits) {
    if (s.is_pure()) {
        return entropy(reduce(state_vector(s, limits), party));
    }
    return entropy(reduce(density_matrix(s, limits), party));
}

std::vector<PauliOperator> enumerate_group(const StabilizerGroup &s, const Limits &limits) {
    if (s.dim() > limits.max_enumeration_dim) {
        throw CapacityError("enumerate_group limited to dim " + std::to_string(limits.max_enumeration_dim));
    }
    std::vector<PauliOperator> out{PauliOperator(s.num_qubits())};
    for (const PauliOperator &g : s.generators()) {
        size_t existing = out.size();
        for (size_t k = 0; k < existing; k++) {
            out.push_back(out[k] * g);
        }
    }
    return out;
}

size_t subgroup_trivial_dim(const StabilizerGroup &s, std::span<const size_t> party, const Limits &limits) {
    size_t count = 0;
    for (const PauliOperator &g : enumerate_group(s, limits)) {
        count += is_identity_on(g, party);
    }
    return exact_log2(count);
}

size_t ghz_count(const StabilizerGroup &s, const Partition &partition, const Limits &limits) {
    if (2 * s.num_qubits() > 64) {
        throw CapacityError("oracle::ghz_count limited to 32 qubits");
    }
    std::vector<uint64_t> local;
    for (const PauliOperator &g : enumerate_group(s, limits)) {
        for (size_t p = 0; p < partition.num_parties(); p++) {
            if (is_identity_on(g, partition.qubits(p))) {
                local.push_back(mask_of(g.symplectic()));
                break;
            }
        }
    }
    return s.dim() - exact_log2(xor_closure(local).size());
}

size_t clifford_distance(const CliffordElement &c1, const CliffordElement &c2) {
    if (c1.num_qubits() != 1 || c2.num_qubits() != 1) {
        throw CapacityError("oracle::clifford_distance only handles n = 1");
    }
    auto image = [](const CliffordElement &c, unsigned s) {
        uint64_t out = 0;
        for (size_t j = 0; j < 2; j++) {
            if ((s >> j) & 1) {
                out ^= mask_of(c.matrix().row(j));
            }
        }
        return out;
    };
    // Nonzero vectors of F_2^2 in generator coordinates; any two distinct
    // ones generate P_1, and larger generating sets never do better.
    size_t best = SIZE_MAX;
    for (unsigned s1 = 1; s1 < 4; s1++) {
        for (unsigned s2 = s1 + 1; s2 < 4; s2++) {
            size_t differ = (image(c1, s1) != image(c2, s1)) + (image(c1, s2) != image(c2, s2));
            best = std::min(best, differ);
        }
    }
    return best;
}

std::vector<StabilizerGroup> all_pure_states(size_t n) {
    if (n == 0 || n > 3) {
        throw CapacityError("all_pure_states handles 1 <= n <= 3");
    }
    uint64_t num_vectors = uint64_t{1} << (2 * n);
    std::set<std::set<uint64_t>> seen;
    std::vector<std::vector<uint64_t>> subspaces;
    std::vector<uint64_t> chosen;
    auto recurse = [&](auto &&self, uint64_t start) -> void {
        if (chosen.size() == n) {
            std::set<uint64_t> span = xor_closure(chosen);
            if (span.size() == (size_t{1} << n) && seen.insert(span).second) {
                subspaces.push_back(chosen);
            }
            return;
        }
        for (uint64_t v = start; v < num_vectors; v++) {
            bool commutes = true;
            for (uint64_t u : chosen) {
                commutes &= !omega(u, v, n);
            }
            if (!commutes) {
                continue;
            }
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 1);

    std::vector<StabilizerGroup> states;
    for (const auto &basis : subspaces) {
        for (uint64_t signs = 0; signs < (uint64_t{1} << n); signs++) {
            std::vector<PauliOperator> gens;
            for (size_t k = 0; k < n; k++) {
                BitVector v(2 * n);
                for (size_t b = 0; b < 2 * n; b++) {
                    v.set(b, (basis[k] >> b) & 1);
                }
                gens.push_back(PauliOperator::from_symplectic(v, (signs >> k) & 1));
            }
            states.emplace_back(n, std::move(gens));
        }
    }
    return states;
}

std::vector<CliffordElement> all_symplectic(size_t n) {
    if (n == 0 || n > 2) {
        throw CapacityError("all_symplectic handles 1 <= n <= 2");
    }
    size_t dim = 2 * n;
    uint64_t rows_count = uint64_t{1} << dim;
    std::vector<CliffordElement> out;
    std::vector<uint64_t> rows(dim, 0);
    auto recurse = [&](auto &&self, size_t j) -> void {
        if (j == dim) {
            BitMatrix m(0, dim);
            for (uint64_t r : rows) {
                BitVector v(dim);
                for (size_t b = 0; b < dim; b++) {
                    v.set(b, (r >> b) & 1);
                }
                m.push_row(std::move(v));
            }
            out.emplace_back(std::move(m), BitVector(dim));
            return;
        }
        for (uint64_t r = 0; r < rows_count; r++) {
            bool ok = true;
            for (size_t i = 0; i < j && ok; i++) {
                bool expected = (i % 2 == 0) && j == i + 1;
                ok = omega(rows[i], r, n) == expected;
            }
            if (ok) {
                rows[j] = r;
                self(self, j + 1);
            }
        }
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace stabent::oracle
