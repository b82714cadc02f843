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

#ifndef STABENT_STABILIZER_H
#define STABENT_STABILIZER_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabent/gf2.h"
#include "stabent/pauli.h"
#include "stabent/random.h"

namespace stabent {

/// Abelian, -I-free subgroup of the n-qubit Pauli group, held as a list of
/// generators. n generators describe a pure state; n-k generators describe
/// the maximally mixed state on a 2^k-dimensional code space.
///
/// Construction does not check the group axioms; see validate().
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    explicit StabilizerGroup(size_t n) : n_(n) {
    }
    StabilizerGroup(size_t n, std::vector<PauliOperator> generators);

    /// Parses generators given as Pauli strings, e.g. {"XX", "ZZ"}.
    static StabilizerGroup from_strings(std::initializer_list<std::string_view> generators);

    size_t num_qubits() const {
        return n_;
    }
    /// dim S, the number of generators.
    size_t dim() const {
        return generators_.size();
    }
    /// log2 of the rank of the stabilized state.
    size_t log_rank() const {
        return n_ - generators_.size();
    }
    bool is_pure() const {
        return generators_.size() == n_;
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const PauliOperator &generator(size_t k) const {
        return generators_[k];
    }

    /// dim(S) x 2n matrix whose rows are the generators' (x|z) vectors.
    BitMatrix symplectic_matrix() const;

    bool operator==(const StabilizerGroup &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> generators_;
};

enum class ValidityIssue {
    None,
    SizeMismatch,
    NotHermitian,
    Anticommuting,
    Dependent,
    TooManyGenerators,
};

struct Validation {
    bool valid = true;
    ValidityIssue issue = ValidityIssue::None;
    /// Offending generator indices (second is only meaningful for pairs).
    size_t first = 0;
    size_t second = 0;

    explicit operator bool() const {
        return valid;
    }
    std::string describe() const;
};

/// Checks pairwise commutation, independence and Hermiticity. Together these
/// rule out -I in the generated group.
Validation validate(const StabilizerGroup &s);

/// Throws ValidityError with the diagnostic when validate() fails.
void require_valid(const StabilizerGroup &s);

/// Assignment of every qubit to one of m named parties.
class Partition {
   public:
    Partition() = default;
    /// labels[q] is the party index of qubit q; names[p] is party p's label.
    Partition(std::vector<size_t> labels, std::vector<std::string> names);

    /// Consecutive blocks of the given sizes, labelled A, B, C, ...
    static Partition contiguous(std::span<const size_t> sizes);
    static Partition contiguous(std::initializer_list<size_t> sizes);

    /// Parses "0-4:A,5-9:B". Inclusive ranges; a single index is allowed.
    /// Parties are ordered by first appearance. Overlaps, gaps and (when
    /// num_qubits is nonzero) a qubit count mismatch are parse errors.
    static Partition parse(std::string_view text, size_t num_qubits = 0);

    size_t num_qubits() const {
        return labels_.size();
    }
    size_t num_parties() const {
        return names_.size();
    }
    size_t party_of(size_t qubit) const {
        return labels_[qubit];
    }
    const std::string &name(size_t party) const {
        return names_[party];
    }
    /// Qubits of the party, ascending.
    const std::vector<size_t> &qubits(size_t party) const {
        return members_[party];
    }
    /// Every qubit not in the party, ascending.
    std::vector<size_t> complement(size_t party) const;

    /// Merges parties into groups: groups[p] is the new party of old party p.
    Partition merged(std::span<const size_t> groups, std::vector<std::string> names) const;

    std::string str() const;

   private:
    std::vector<size_t> labels_;
    std::vector<std::string> names_;
    std::vector<std::vector<size_t>> members_;
};

/// Basis, as (x|z) rows over all n qubits, of S_party = {g in S : g acts as
/// identity on every qubit of `party`}. Solved by elimination on generator
/// exponents; S must be valid.
BitMatrix subgroup_trivial_on(const StabilizerGroup &s, std::span<const size_t> party);

/// dim of subgroup_trivial_on without materializing the basis:
/// dim S - rank(generators restricted to `party`).
size_t subgroup_trivial_on_dim(const StabilizerGroup &s, std::span<const size_t> party);

/// dim S_loc where S_loc is the sum over parties a of the subgroup trivial on a.
size_t local_subgroup_dim(const StabilizerGroup &s, const Partition &partition);

/// Uniformly random stabilizer group of dim n-k (k = n gives the empty
/// group). Generators are added one at a time, each uniform over the Paulis
/// that commute with and are independent of the previous ones, with an
/// independent uniform sign.
StabilizerGroup sample_uniform_stabilizer(size_t n, size_t k, Rng &rng);

/// Same group, generators in reduced row-echelon form of the (x|z) matrix
/// (x columns first, then z, qubit-major). Signs follow the row operations.
StabilizerGroup canonical_form(const StabilizerGroup &s);

struct Purification {
    StabilizerGroup group;
    size_t num_ancillas = 0;
};

/// Pure stabilizer state on n+k qubits whose reduction to the first n qubits
/// is the code state of `s`. The logical pairs (Lx_j, Lz_j) of the code are
/// tied to ancilla j (qubit n+j) as Lx_j X_{n+j} and Lz_j Z_{n+j}.
Purification purify(const StabilizerGroup &s);

/// Text file form: optional "n=<int>" header line, then one Pauli string per
/// line. Blank lines and lines starting with '#' are skipped. The result is
/// validated (ValidityError on failure).
StabilizerGroup parse_stabilizer_group(std::string_view text);
std::string format_stabilizer_group(const StabilizerGroup &s);

}  // namespace stabent

#endif
