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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.h"
#include "stabent/clifford.h"
#include "stabent/entanglement.h"
#include "stabent/errors.h"
#include "stabent/oracle.h"

using namespace stabent;

namespace {

StabilizerGroup G(std::initializer_list<std::string_view> gens) {
    return StabilizerGroup::from_strings(gens);
}

// Moves qubit q to position perm[q].
StabilizerGroup permute(const StabilizerGroup &s, const std::vector<size_t> &perm) {
    std::vector<PauliOperator> gens;
    for (const PauliOperator &g : s.generators()) {
        PauliOperator p(s.num_qubits());
        for (size_t q = 0; q < s.num_qubits(); q++) {
            p.set_xz(perm[q], g.x_bit(q), g.z_bit(q));
        }
        p.set_phase_exponent(g.phase_exponent());
        gens.push_back(p);
    }
    return StabilizerGroup(s.num_qubits(), gens);
}

// Random two-party split with both parties nonempty.
Partition random_cut(size_t n, Rng &rng) {
    std::vector<size_t> labels(n);
    for (size_t q = 0; q < n; q++) {
        labels[q] = rng() & 1;
    }
    size_t first = rng() % n;
    size_t second = (first + 1 + rng() % (n - 1)) % n;
    labels[first] = 0;
    labels[second] = 1;
    return Partition(labels, {"A", "B"});
}

}  // namespace

TEST_CASE("pure bipartite examples") {
    Partition cut = Partition::contiguous({1, 1});
    CHECK(pure_bipartite_entanglement(G({"XX", "ZZ"}), cut) == 1);
    CHECK(pure_bipartite_entanglement(G({"ZI", "IZ"}), cut) == 0);
    CHECK(pure_bipartite_entanglement(G({"XXX", "ZZI", "IZZ"}), Partition::parse("0:A,1-2:B")) == 1);
    CHECK_THROWS_AS(pure_bipartite_entanglement(G({"ZI"}), cut), ArityError);
    CHECK_THROWS_AS(pure_bipartite_entanglement(G({"XXX", "ZZI", "IZZ"}), Partition::contiguous({1, 1, 1})),
                    ArityError);
}

TEST_CASE("both pure formulas agree and match the entropy oracle") {
    for (size_t t = 0; t < 300; t++) {
        Rng rng = stream_rng(51, t);
        size_t n = 2 + t % 7;
        StabilizerGroup s = sample_uniform_stabilizer(n, 0, rng);
        Partition cut = random_cut(n, rng);
        PureBipartiteCount c = pure_bipartite_counts(s, cut);
        CHECK(c.from_local_dim == c.from_half_form);
        size_t e = pure_bipartite_entanglement(s, cut);
        CHECK(e <= std::min(cut.qubits(0).size(), cut.qubits(1).size()));
        CHECK(std::abs(oracle::entropy_of_reduction(s, cut.qubits(0)) - e) < 1e-9);
        CHECK(std::abs(oracle::entropy_of_reduction(s, cut.qubits(1)) - e) < 1e-9);
    }
}

TEST_CASE("local log rank") {
    std::vector<size_t> q0 = {0};
    CHECK(local_log_rank(G({"XX", "ZZ"}), q0) == 1);
    CHECK(local_log_rank(G({"Z"}), q0) == 0);
    CHECK(local_log_rank(StabilizerGroup(2), q0) == 1);
    for (size_t t = 0; t < 200; t++) {
        Rng rng = stream_rng(52, t);
        size_t n = 1 + t % 8;
        StabilizerGroup s = sample_uniform_stabilizer(n, rng() % (n + 1), rng);
        std::vector<size_t> party;
        for (size_t q = 0; q < n; q++) {
            if (rng() & 1) {
                party.push_back(q);
            }
        }
        if (party.empty()) {
            continue;
        }
        size_t dense = oracle::matrix_rank(oracle::reduce(oracle::density_matrix(s), party));
        CHECK((size_t{1} << local_log_rank(s, party)) == dense);
    }
}

TEST_CASE("GHZ count examples") {
    StabilizerGroup ghz = G({"XXX", "ZZI", "IZZ"});
    CHECK(ghz_count(ghz, Partition::contiguous({1, 1, 1})) == 1);
    CHECK(ghz_count(G({"ZIII", "IZII", "IIZI", "IIIZ"}), Partition::contiguous({1, 1, 2})) == 0);
    StabilizerGroup two = G({"XXXIII", "ZZIIII", "IZZIII", "IIIXXX", "IIIZZI", "IIIIZZ"});
    CHECK(ghz_count(two, Partition::parse("0:A,3:A,1:B,4:B,2:C,5:C")) == 2);
    CHECK(oracle::ghz_count(two, Partition::parse("0:A,3:A,1:B,4:B,2:C,5:C")) == 2);
    CHECK_THROWS_AS(ghz_count(ghz, Partition::parse("0:A,1-2:B")), ArityError);
    CHECK_THROWS_AS(ghz_count(G({"ZII"}), Partition::contiguous({1, 1, 1})), ArityError);
}

TEST_CASE("GHZ count agrees with enumeration and is bounded by every merged cut") {
    for (size_t t = 0; t < 200; t++) {
        Rng rng = stream_rng(53, t);
        size_t m = 3 + rng() % 2;
        std::vector<size_t> sizes(m);
        for (size_t &s : sizes) {
            s = 1 + rng() % 2;
        }
        size_t n = std::accumulate(sizes.begin(), sizes.end(), size_t{0});
        Partition parties = Partition::contiguous(sizes);
        StabilizerGroup s = sample_uniform_stabilizer(n, 0, rng);
        size_t delta = ghz_count(s, parties);
        CHECK(delta == oracle::ghz_count(s, parties));
        CHECK(delta <= *std::min_element(sizes.begin(), sizes.end()));
        for (size_t mask = 1; mask + 1 < (size_t{1} << m); mask++) {
            std::vector<size_t> groups(m);
            for (size_t p = 0; p < m; p++) {
                groups[p] = mask >> p & 1;
            }
            if (std::count(groups.begin(), groups.end(), 0) == 0) {
                continue;
            }
            CHECK(delta <= pure_bipartite_entanglement(s, parties.merged(groups, {"L", "R"})));
        }
    }
}

TEST_CASE("mixed bound examples") {
    MixedEntanglement bell = mixed_epr_lower_bound(G({"XX", "ZZ"}), Partition::contiguous({1, 1}));
    CHECK(bell.raw_twice == 2);
    CHECK(bell.lower_bound == 1);

    // Bell pair on qubits 0 and 2; qubits 1 and 3 maximally mixed.
    MixedEntanglement half = mixed_epr_lower_bound(G({"XIXI", "ZIZI"}), Partition::contiguous({2, 2}));
    CHECK(half.k == 2);
    CHECK(half.lower_bound == 1);
    CHECK(half.log_rank_a == 2);
    CHECK(half.log_rank_b == 2);
    REQUIRE(half.exact_full_rank.has_value());
    CHECK(*half.exact_full_rank == 1);

    MixedEntanglement empty = mixed_epr_lower_bound(StabilizerGroup(4), Partition::contiguous({2, 2}));
    CHECK(empty.k == 4);
    CHECK(empty.lower_bound == 0);
    CHECK(empty.purified_c_dim == 0);

    CHECK_THROWS_AS(mixed_epr_lower_bound(G({"ZZZ"}), Partition::contiguous({1, 1, 1})), ArityError);
}

TEST_CASE("mixed bound reduces to the pure count and respects mutual information") {
    for (size_t t = 0; t < 200; t++) {
        Rng rng = stream_rng(54, t);
        size_t n = 2 + t % 7;
        size_t k = t % 3 == 0 ? 0 : rng() % (n + 1);
        StabilizerGroup s = sample_uniform_stabilizer(n, k, rng);
        Partition cut = random_cut(n, rng);
        MixedEntanglement e = mixed_epr_lower_bound(s, cut);
        CHECK(e.k == k);
        CHECK(e.lower_bound <= std::min(cut.qubits(0).size(), cut.qubits(1).size()));
        if (k == 0) {
            CHECK(e.raw_twice == 2 * static_cast<long long>(pure_bipartite_entanglement(s, cut)));
        }
        oracle::DensityMatrix rho = oracle::density_matrix(s);
        double mutual = oracle::entropy(oracle::reduce(rho, cut.qubits(0))) +
                        oracle::entropy(oracle::reduce(rho, cut.qubits(1))) - oracle::entropy(rho);
        CHECK(e.raw() <= mutual / 2 + 1e-9);
        if (e.exact_full_rank) {
            CHECK(static_cast<long long>(2 * *e.exact_full_rank) == std::max(0LL, e.raw_twice));
        }
    }
}

TEST_CASE("mixed bound is invariant under permutations within a party") {
    for (size_t t = 0; t < 100; t++) {
        Rng rng = stream_rng(55, t);
        size_t na = 1 + rng() % 5, nb = 1 + rng() % 5;
        StabilizerGroup s = sample_uniform_stabilizer(na + nb, rng() % (na + nb + 1), rng);
        std::vector<size_t> perm(na + nb);
        std::iota(perm.begin(), perm.end(), size_t{0});
        std::shuffle(perm.begin(), perm.begin() + na, rng);
        std::shuffle(perm.begin() + na, perm.end(), rng);
        Partition cut = Partition::contiguous({na, nb});
        MixedEntanglement a = mixed_epr_lower_bound(s, cut);
        MixedEntanglement b = mixed_epr_lower_bound(permute(s, perm), cut);
        CHECK(a.raw_twice == b.raw_twice);
        CHECK(a.lower_bound == b.lower_bound);
    }
}

TEST_CASE("entanglement and GHZ count are Lipschitz in the Clifford element") {
    Partition parties = Partition::contiguous({3, 3, 4});
    Partition cut = Partition::contiguous({3, 7});
    for (size_t t = 0; t < 200; t++) {
        Rng rng = stream_rng(56, t);
        CliffordElement c1 = sample_uniform_clifford(10, rng);
        CliffordElement c2 = t % 2 ? sample_uniform_clifford(10, rng)
                                   : compose(c1, CliffordElement::cnot(10, rng() % 5, 5 + rng() % 5));
        StabilizerGroup s1 = stabilizer_of_zero_state(c1), s2 = stabilizer_of_zero_state(c2);
        long long d = static_cast<long long>(distance(c1, c2));
        long long de = static_cast<long long>(pure_bipartite_entanglement(s1, cut)) -
                       static_cast<long long>(pure_bipartite_entanglement(s2, cut));
        long long dg = static_cast<long long>(ghz_count(s1, parties)) - static_cast<long long>(ghz_count(s2, parties));
        CHECK(std::llabs(de) <= d);
        CHECK(std::llabs(dg) <= 3 * d);
    }
}

TEST_CASE("report JSON keys") {
    EntanglementReport r;
    r.epr = 1;
    r.log_ranks["A"] = 1;
    nlohmann::json j = to_json(r);
    CHECK(j["epr"] == 1);
    CHECK(j["log_ranks"]["A"] == 1);
    CHECK_FALSE(j.contains("ghz"));
    r.ghz = 2;
    r.mixed_lower_bound_raw = 0.5;
    r.mixed_lower_bound = 1;
    j = to_json(r);
    CHECK(j["ghz"] == 2);
    CHECK(j["mixed_lower_bound_raw"] == 0.5);
    CHECK(j["mixed_lower_bound"] == 1);
}
