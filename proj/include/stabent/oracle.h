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

#ifndef STABENT_ORACLE_H
#define STABENT_ORACLE_H

// Brute-force ground truth for small instances: dense state vectors and
// density matrices, exhaustive group enumeration, exhaustive metric search.
// Nothing here shares code paths with the elimination-based routines it is
// used to check.

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "stabent/clifford.h"
#include "stabent/pauli.h"
#include "stabent/stabilizer.h"

namespace stabent::oracle {

struct Limits {
    size_t max_dense_qubits = 12;
    size_t max_mixed_qubits = 10;
    size_t max_enumeration_dim = 16;
};

using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

/// Basis index bit q is qubit q.
StateVector apply_pauli(const PauliOperator &p, const StateVector &psi);

/// Full 2^n x 2^n matrix of a Pauli.
DensityMatrix pauli_matrix(const PauliOperator &p);

/// The state fixed by a pure stabilizer group, normalized. Global phase is
/// arbitrary.
StateVector state_vector(const StabilizerGroup &s, const Limits &limits = {});

/// Π / Tr Π with Π = ∏ (I + g)/2; works for pure and mixed groups.
DensityMatrix density_matrix(const StabilizerGroup &s, const Limits &limits = {});

DensityMatrix reduce(const StateVector &psi, std::span<const size_t> party);
DensityMatrix reduce(const DensityMatrix &rho, std::span<const size_t> party);

/// Von Neumann entropy in bits.
double entropy(const DensityMatrix &rho);
/// Number of eigenvalues above `tolerance`.
size_t matrix_rank(const DensityMatrix &rho, double tolerance = 1e-9);

double entropy_of_reduction(const StabilizerGroup &s, std::span<const size_t> party, const Limits &limits = {});

/// All 2^dim signed group elements.
std::vector<PauliOperator> enumerate_group(const StabilizerGroup &s, const Limits &limits = {});

/// log2 #{g in S : g trivial on party}, by enumeration.
size_t subgroup_trivial_dim(const StabilizerGroup &s, std::span<const size_t> party, const Limits &limits = {});

/// dim S - log2 |span of all elements trivial on some party|, by
/// enumeration and XOR closure.
size_t ghz_count(const StabilizerGroup &s, const Partition &partition, const Limits &limits = {});

/// Minimum over generating pairs of P_1 of the number of generators whose
/// images (phases ignored) differ. n = 1 only.
size_t clifford_distance(const CliffordElement &c1, const CliffordElement &c2);

/// Every pure stabilizer state on n <= 3 qubits (all signs).
std::vector<StabilizerGroup> all_pure_states(size_t n);

/// Every 2n x 2n binary matrix satisfying the symplectic condition, n <= 2,
/// as Clifford elements with all-positive signs.
std::vector<CliffordElement> all_symplectic(size_t n);

}  // namespace stabent::oracle

#endif
