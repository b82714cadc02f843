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

#include "stabent/entanglement.h"

#include <stdexcept>
#include <vector>

#include "stabent/errors.h"

namespace stabent {

namespace {

void require_pure(const StabilizerGroup &s, const char *what) {
    if (!s.is_pure()) {
        throw ArityError(std::string(what) + ": state is mixed (dim S = " + std::to_string(s.dim()) + " < n = " +
                         std::to_string(s.num_qubits()) + ")");
    }
}

void require_cover(const StabilizerGroup &s, const Partition &partition) {
    if (partition.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("partition covers " + std::to_string(partition.num_qubits()) +
                                    " qubits, state has " + std::to_string(s.num_qubits()));
    }
}

size_t sum_dim(const std::vector<BitMatrix> &bases) {
    BitMatrix stacked = stack(bases);
    return stacked.num_rows() == 0 ? 0 : rank(stacked);
}

}  // namespace

PureBipartiteCount pure_bipartite_counts(const StabilizerGroup &s, const Partition &partition) {
    require_pure(s, "pure_bipartite_entanglement");
    require_cover(s, partition);
    if (partition.num_parties() != 2) {
        throw ArityError("pure_bipartite_entanglement: need exactly 2 parties, got " +
                         std::to_string(partition.num_parties()));
    }
    const auto &a = partition.qubits(0);
    const auto &b = partition.qubits(1);
    BitMatrix trivial_on_a = subgroup_trivial_on(s, a);
    BitMatrix trivial_on_b = subgroup_trivial_on(s, b);
    size_t local = sum_dim({trivial_on_a, trivial_on_b});
    PureBipartiteCount out;
    out.from_local_dim = a.size() - trivial_on_b.num_rows();
    out.from_half_form = (s.dim() - local) / 2;
    return out;
}

size_t pure_bipartite_entanglement(const StabilizerGroup &s, const Partition &partition) {
    PureBipartiteCount counts = pure_bipartite_counts(s, partition);
    if (counts.from_local_dim != counts.from_half_form) {
        throw std::logic_error("EPR count routes disagree: " + std::to_string(counts.from_local_dim) + " vs " +
                               std::to_string(counts.from_half_form));
    }
    return counts.from_local_dim;
}

size_t ghz_count(const StabilizerGroup &s, const Partition &partition) {
    require_pure(s, "ghz_count");
    require_cover(s, partition);
    if (partition.num_parties() < 3) {
        throw ArityError("ghz_count: need at least 3 parties; use pure_bipartite_entanglement for 2");
    }
    return s.dim() - local_subgroup_dim(s, partition);
}

size_t local_log_rank(const StabilizerGroup &s, std::span<const size_t> party) {
    std::vector<bool> in_party(s.num_qubits(), false);
    for (size_t q : party) {
        if (q >= s.num_qubits()) {
            throw std::out_of_range("local_log_rank: qubit index " + std::to_string(q) + " out of range");
        }
        in_party[q] = true;
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < s.num_qubits(); q++) {
        if (!in_party[q]) {
            rest.push_back(q);
        }
    }
    return party.size() - subgroup_trivial_on_dim(s, rest);
}

MixedEntanglement mixed_epr_lower_bound(const StabilizerGroup &s, const Partition &partition) {
    require_cover(s, partition);
    if (partition.num_parties() != 2) {
        throw ArityError("mixed_epr_lower_bound: need exactly 2 parties, got " +
                         std::to_string(partition.num_parties()));
    }
    Purification pure = purify(s);
    const StabilizerGroup &sp = pure.group;
    size_t n = s.num_qubits();
    const auto &a = partition.qubits(0);
    const auto &b = partition.qubits(1);
    std::vector<size_t> c;
    for (size_t j = 0; j < pure.num_ancillas; j++) {
        c.push_back(n + j);
    }

    BitMatrix trivial_a = subgroup_trivial_on(sp, a);
    BitMatrix trivial_b = subgroup_trivial_on(sp, b);
    BitMatrix trivial_c = subgroup_trivial_on(sp, c);

    MixedEntanglement out;
    out.k = pure.num_ancillas;
    out.log_rank_a = local_log_rank(s, a);
    out.log_rank_b = local_log_rank(s, b);
    out.purified_local_dim = sum_dim({trivial_a, trivial_b, trivial_c});
    out.purified_c_dim = trivial_c.num_rows();

    long long twice = static_cast<long long>(out.purified_local_dim) - 2 * static_cast<long long>(out.k) +
                      static_cast<long long>(out.log_rank_a) - static_cast<long long>(a.size()) +
                      static_cast<long long>(out.log_rank_b) - static_cast<long long>(b.size());
    out.raw_twice = twice;
    out.lower_bound = twice <= 0 ? 0 : static_cast<size_t>((twice + 1) / 2);
    if (out.log_rank_a == a.size() && out.log_rank_b == b.size()) {
        long long exact_twice = static_cast<long long>(out.purified_c_dim + out.purified_local_dim) -
                                static_cast<long long>(sp.dim());
        out.exact_full_rank = exact_twice <= 0 ? 0 : static_cast<size_t>(exact_twice / 2);
    }
    return out;
}

nlohmann::json to_json(const EntanglementReport &report) {
    nlohmann::json j = nlohmann::json::object();
    if (report.epr) {
        j["epr"] = *report.epr;
    }
    if (report.ghz) {
        j["ghz"] = *report.ghz;
    }
    if (report.mixed_lower_bound_raw) {
        j["mixed_lower_bound_raw"] = *report.mixed_lower_bound_raw;
    }
    if (report.mixed_lower_bound) {
        j["mixed_lower_bound"] = *report.mixed_lower_bound;
    }
    if (!report.log_ranks.empty()) {
        j["log_ranks"] = report.log_ranks;
    }
    return j;
}

}  // namespace stabent
