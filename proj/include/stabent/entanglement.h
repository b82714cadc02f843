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

#ifndef STABENT_ENTANGLEMENT_H
#define STABENT_ENTANGLEMENT_H

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"
#include "stabent/stabilizer.h"

namespace stabent {

/// Both routes to the EPR count of a pure bipartite stabilizer state.
struct PureBipartiteCount {
    /// n_A - dim S_B, where S_B is the subgroup acting trivially on B.
    size_t from_local_dim = 0;
    /// (dim S - dim(S_A + S_B)) / 2.
    size_t from_half_form = 0;
};

PureBipartiteCount pure_bipartite_counts(const StabilizerGroup &s, const Partition &partition);

/// Number of LU-extractable EPR pairs across a two-party cut of a pure
/// stabilizer state. Throws std::logic_error if the two routes disagree and
/// ArityError for mixed states or non-bipartite partitions.
size_t pure_bipartite_entanglement(const StabilizerGroup &s, const Partition &partition);

/// Number of LU-extractable m-party GHZ states, dim S - dim S_loc, for a
/// pure state and m >= 3 parties.
size_t ghz_count(const StabilizerGroup &s, const Partition &partition);

/// log2 Rank(ρ_party) = |party| - dim(subgroup trivial on the complement).
size_t local_log_rank(const StabilizerGroup &s, std::span<const size_t> party);

/// EPR lower bound for a (possibly mixed) bipartite stabilizer state,
/// evaluated on the purification S' over A, B and the ancilla system C:
///
///   raw = dim S'_loc / 2 - k + (logRank ρ_A - n_A + logRank ρ_B - n_B) / 2
///
/// where S'_loc = S'_A + S'_B + S'_C.
struct MixedEntanglement {
    /// 2 * raw, kept as an integer so half-integer values are exact.
    long long raw_twice = 0;
    /// max(0, ceil(raw)). The true EPR count is an integer >= raw.
    size_t lower_bound = 0;
    /// ½(dim S'_C + dim S'_loc - dim S'); present only when both local
    /// ranks are full, where it is the exact extractable count.
    std::optional<size_t> exact_full_rank;
    size_t k = 0;
    size_t log_rank_a = 0;
    size_t log_rank_b = 0;
    size_t purified_local_dim = 0;
    size_t purified_c_dim = 0;

    double raw() const {
        return raw_twice / 2.0;
    }
};

MixedEntanglement mixed_epr_lower_bound(const StabilizerGroup &s, const Partition &partition);

/// Flat summary for serialization. Unset fields are omitted.
struct EntanglementReport {
    std::optional<size_t> epr;
    std::optional<size_t> ghz;
    std::optional<double> mixed_lower_bound_raw;
    std::optional<size_t> mixed_lower_bound;
    std::map<std::string, size_t> log_ranks;
};

nlohmann::json to_json(const EntanglementReport &report);

}  // namespace stabent

#endif
