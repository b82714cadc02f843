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

#include "stabent/verify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stabent/clifford.h"
#include "stabent/entanglement.h"
#include "stabent/random.h"

namespace stabent::verify {

namespace {

constexpr double kTolerance = 1e-9;

// Records the first failure with a short description of the instance.
class Recorder {
   public:
    explicit Recorder(std::string name) {
        check_.name = std::move(name);
    }
    void expect(bool ok, const std::string &what) {
        check_.cases++;
        if (!ok && check_.pass) {
            check_.pass = false;
            check_.detail = what;
        }
    }
    Check done() {
        return std::move(check_);
    }

   private:
    Check check_;
};

std::string describe(const StabilizerGroup &s, const Partition &p) {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < s.dim(); k++) {
        out << (k ? " " : "") << s.generator(k).str();
    }
    out << "] on " << p.str();
    return out.str();
}

// Random partition of n qubits into m nonempty parties.
Partition random_partition(size_t n, size_t m, Rng &rng) {
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<size_t> labels(n);
    for (size_t i = 0; i < n; i++) {
        labels[order[i]] = i < m ? i : rng() % m;
    }
    std::vector<std::string> names;
    for (size_t p = 0; p < m; p++) {
        names.push_back(std::string(1, char('A' + p)));
    }
    return Partition(std::move(labels), std::move(names));
}

PauliOperator random_pauli(size_t n, Rng &rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t r = rng();
        p.set_xz(q, r & 1, r & 2);
    }
    p.set_phase_exponent(static_cast<uint8_t>(rng() & 3));
    return p;
}

Check pauli_products(const Options &o) {
    Recorder rec("pauli_product_matches_matrices");
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 1000 + t);
        size_t n = 1 + t % 3;
        PauliOperator p = random_pauli(n, rng);
        PauliOperator q = random_pauli(n, rng);
        oracle::DensityMatrix mp = oracle::pauli_matrix(p);
        oracle::DensityMatrix mq = oracle::pauli_matrix(q);
        bool product = (oracle::pauli_matrix(p * q) - mp * mq).norm() < kTolerance;
        bool commute = (mp * mq - mq * mp).norm() < kTolerance;
        rec.expect(product && commute == !symplectic_product(p, q), p.str() + " * " + q.str());
    }
    return rec.done();
}

Check pure_epr(const Options &o) {
    Recorder rec("pure_epr_matches_entropy");
    size_t top = std::min(o.max_qubits, o.limits.max_dense_qubits);
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 2000 + t);
        size_t n = 2 + t % (top - 1);
        StabilizerGroup s = sample_uniform_stabilizer(n, 0, rng);
        Partition cut = random_partition(n, 2, rng);
        double entropy = oracle::entropy_of_reduction(s, cut.qubits(0), o.limits);
        size_t e = o.hooks.epr(s, cut);
        rec.expect(std::abs(entropy - e) < kTolerance, describe(s, cut));
    }
    return rec.done();
}

Check log_ranks(const Options &o) {
    Recorder rec("local_log_rank_matches_density_rank");
    size_t top = std::min(o.max_qubits, o.limits.max_mixed_qubits);
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 3000 + t);
        size_t n = 2 + t % (top - 1);
        size_t k = rng() % (n + 1);
        StabilizerGroup s = sample_uniform_stabilizer(n, k, rng);
        Partition cut = random_partition(n, 2, rng);
        oracle::DensityMatrix rho = oracle::reduce(oracle::density_matrix(s, o.limits), cut.qubits(0));
        size_t expected = static_cast<size_t>(std::llround(std::log2(oracle::matrix_rank(rho))));
        rec.expect(o.hooks.log_rank(s, cut.qubits(0)) == expected, describe(s, cut));
    }
    return rec.done();
}

Check subgroup_dims(const Options &o) {
    Recorder rec("trivial_subgroup_matches_enumeration");
    size_t top = std::min<size_t>(o.max_qubits, 6);
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 4000 + t);
        size_t n = 2 + t % (top - 1);
        StabilizerGroup s = sample_uniform_stabilizer(n, rng() % (n + 1), rng);
        Partition cut = random_partition(n, 2, rng);
        size_t expected = oracle::subgroup_trivial_dim(s, cut.qubits(0), o.limits);
        bool ok = subgroup_trivial_on_dim(s, cut.qubits(0)) == expected &&
                  subgroup_trivial_on(s, cut.qubits(0)).num_rows() == expected;
        rec.expect(ok, describe(s, cut));
    }
    return rec.done();
}

Check ghz_counts(const Options &o) {
    Recorder rec("ghz_count_matches_enumeration");
    size_t top = std::min<size_t>(o.max_qubits, 6);
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 5000 + t);
        size_t n = 3 + t % (top - 2);
        size_t m = 3 + rng() % std::min<size_t>(2, n - 2);
        StabilizerGroup s = sample_uniform_stabilizer(n, 0, rng);
        Partition parties = random_partition(n, m, rng);
        rec.expect(o.hooks.ghz(s, parties) == oracle::ghz_count(s, parties, o.limits), describe(s, parties));
    }
    return rec.done();
}

// Extractable EPR pairs never exceed half the mutual information.
Check mixed_bound(const Options &o) {
    Recorder rec("mixed_bound_below_half_mutual_information");
    size_t top = std::min(o.max_qubits, o.limits.max_mixed_qubits);
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 6000 + t);
        size_t n = 2 + t % (top - 1);
        size_t k = rng() % (n + 1);
        StabilizerGroup s = sample_uniform_stabilizer(n, k, rng);
        Partition cut = random_partition(n, 2, rng);
        oracle::DensityMatrix rho = oracle::density_matrix(s, o.limits);
        std::vector<size_t> all(n);
        std::iota(all.begin(), all.end(), size_t{0});
        double mutual = oracle::entropy(oracle::reduce(rho, cut.qubits(0))) +
                        oracle::entropy(oracle::reduce(rho, cut.qubits(1))) - oracle::entropy(rho);
        MixedEntanglement e = mixed_epr_lower_bound(s, cut);
        bool ok = e.raw() <= mutual / 2 + kTolerance;
        if (k == 0) {
            ok = ok && e.lower_bound == o.hooks.epr(s, cut) && e.raw_twice == 2 * static_cast<long long>(e.lower_bound);
        }
        rec.expect(ok, describe(s, cut));
    }
    return rec.done();
}

Check purification(const Options &o) {
    Recorder rec("purification_reduces_to_state");
    size_t top = std::min<size_t>(o.max_qubits, 5);
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 7000 + t);
        size_t n = 1 + t % top;
        StabilizerGroup s = sample_uniform_stabilizer(n, rng() % (n + 1), rng);
        Purification p = purify(s);
        std::vector<size_t> system(n);
        std::iota(system.begin(), system.end(), size_t{0});
        bool ok = p.group.is_pure() && p.num_ancillas == s.log_rank() && validate(p.group).valid;
        if (ok) {
            oracle::DensityMatrix reduced = oracle::reduce(oracle::state_vector(p.group, o.limits), system);
            ok = (reduced - oracle::density_matrix(s, o.limits)).norm() < 1e-8;
        }
        rec.expect(ok, describe(s, Partition::contiguous({n})));
    }
    return rec.done();
}

Check clifford_metric(const Options &) {
    Recorder rec("clifford_distance_matches_exhaustive_search");
    std::vector<CliffordElement> all = oracle::all_symplectic(1);
    for (const CliffordElement &a : all) {
        for (const CliffordElement &b : all) {
            rec.expect(distance(a, b) == oracle::clifford_distance(a, b), format_clifford(a) + "vs\n" + format_clifford(b));
        }
    }
    return rec.done();
}

Check clifford_action(const Options &o) {
    Recorder rec("clifford_action_preserves_structure");
    for (size_t t = 0; t < o.cases; t++) {
        Rng rng = stream_rng(o.seed, 8000 + t);
        size_t n = 1 + t % 6;
        CliffordElement c = sample_uniform_clifford(n, rng);
        CliffordElement d = sample_uniform_clifford(n, rng);
        PauliOperator p = random_pauli(n, rng);
        PauliOperator q = random_pauli(n, rng);
        bool ok = c.is_symplectic() && compose(c, inverse(c)) == CliffordElement::identity(n) &&
                  apply(compose(c, d), p) == apply(c, apply(d, p)) &&
                  apply(c, p * q) == apply(c, p) * apply(c, q) &&
                  symplectic_product(apply(c, p), apply(c, q)) == symplectic_product(p, q) &&
                  validate(stabilizer_of_zero_state(c)).valid;
        rec.expect(ok, format_clifford(c));
    }
    return rec.done();
}

Check census(const Options &) {
    Recorder rec("exhaustive_counts");
    const size_t states[] = {6, 60, 1080};
    for (size_t n = 1; n <= 3; n++) {
        std::vector<StabilizerGroup> all = oracle::all_pure_states(n);
        rec.expect(all.size() == states[n - 1], "pure states on " + std::to_string(n) + " qubits");
    }
    rec.expect(oracle::all_symplectic(1).size() == 6, "Sp(2,2)");
    rec.expect(oracle::all_symplectic(2).size() == 720, "Sp(4,2)");
    return rec.done();
}

Check purity_formula(const Options &o) {
    Recorder rec("exhaustive_purity_formula");
    for (auto [na, nb] : {std::pair<size_t, size_t>{1, 1}, {1, 2}, {2, 1}}) {
        Partition cut = Partition::contiguous({na, nb});
        std::vector<StabilizerGroup> all = oracle::all_pure_states(na + nb);
        // Mean of 2^{-E} equals (2^na + 2^nb) / (2^n + 1); compare cross-multiplied integers.
        size_t n = na + nb;
        unsigned long long lhs = 0;
        for (const StabilizerGroup &s : all) {
            lhs += (1ULL << n) >> o.hooks.epr(s, cut);
        }
        lhs *= (1ULL << n) + 1;
        unsigned long long rhs = all.size() * ((1ULL << na) + (1ULL << nb)) * (1ULL << n);
        rec.expect(lhs == rhs, "n_A=" + std::to_string(na) + " n_B=" + std::to_string(nb));
    }
    return rec.done();
}

}  // namespace

Hooks default_hooks() {
    Hooks h;
    h.epr = [](const StabilizerGroup &s, const Partition &p) {
        return pure_bipartite_entanglement(s, p);
    };
    h.ghz = [](const StabilizerGroup &s, const Partition &p) {
        return ghz_count(s, p);
    };
    h.log_rank = [](const StabilizerGroup &s, std::span<const size_t> party) {
        return local_log_rank(s, party);
    };
    return h;
}

std::vector<Check> run_all(const Options &options) {
    return {
        pauli_products(options), pure_epr(options),       log_ranks(options),
        subgroup_dims(options),  ghz_counts(options),     mixed_bound(options),
        purification(options),   clifford_metric(options), clifford_action(options),
        census(options),         purity_formula(options),
    };
}

nlohmann::json to_json(const std::vector<Check> &checks) {
    nlohmann::json out = nlohmann::json::array();
    for (const Check &c : checks) {
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"detail", c.detail}});
    }
    return out;
}

}  // namespace stabent::verify
