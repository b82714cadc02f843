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

#include "stabent/stabilizer.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "stabent/errors.h"

namespace stabent {

namespace {

void check_indices(size_t n, std::span<const size_t> qubits) {
    for (size_t q : qubits) {
        if (q >= n) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n));
        }
    }
}

// Generator bits on the listed qubits: (x on party | z on party).
BitVector restricted_row(const PauliOperator &g, std::span<const size_t> party) {
    size_t m = party.size();
    BitVector v(2 * m);
    for (size_t k = 0; k < m; k++) {
        v.set(k, g.x_bit(party[k]));
        v.set(m + k, g.z_bit(party[k]));
    }
    return v;
}

}  // namespace

StabilizerGroup::StabilizerGroup(size_t n, std::vector<PauliOperator> generators)
    : n_(n), generators_(std::move(generators)) {
    for (const PauliOperator &g : generators_) {
        if (g.num_qubits() != n_) {
            throw std::invalid_argument("StabilizerGroup: generator has " + std::to_string(g.num_qubits()) +
                                        " qubits, expected " + std::to_string(n_));
        }
    }
}

StabilizerGroup StabilizerGroup::from_strings(std::initializer_list<std::string_view> generators) {
    std::vector<PauliOperator> gens;
    for (std::string_view g : generators) {
        gens.push_back(PauliOperator::from_string(g));
    }
    size_t n = gens.empty() ? 0 : gens[0].num_qubits();
    return StabilizerGroup(n, std::move(gens));
}

BitMatrix StabilizerGroup::symplectic_matrix() const {
    BitMatrix m(0, 2 * n_);
    for (const PauliOperator &g : generators_) {
        m.push_row(g.symplectic());
    }
    return m;
}

std::string Validation::describe() const {
    switch (issue) {
        case ValidityIssue::None:
            return "valid";
        case ValidityIssue::SizeMismatch:
            return "generator " + std::to_string(first) + " has the wrong qubit count";
        case ValidityIssue::NotHermitian:
            return "generator " + std::to_string(first) + " is not Hermitian (squares to -I)";
        case ValidityIssue::Anticommuting:
            return "generators " + std::to_string(first) + " and " + std::to_string(second) + " anticommute";
        case ValidityIssue::Dependent:
            return "generator " + std::to_string(first) + " is a product of earlier generators";
        case ValidityIssue::TooManyGenerators:
            return "more generators than qubits";
    }
    return "unknown";
}

Validation validate(const StabilizerGroup &s) {
    const auto &gens = s.generators();
    for (size_t i = 0; i < gens.size(); i++) {
        if (gens[i].num_qubits() != s.num_qubits()) {
            return {false, ValidityIssue::SizeMismatch, i, i};
        }
        if (!gens[i].is_hermitian()) {
            return {false, ValidityIssue::NotHermitian, i, i};
        }
    }
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (symplectic_product(gens[i], gens[j])) {
                return {false, ValidityIssue::Anticommuting, i, j};
            }
        }
    }
    SpanTracker span(2 * s.num_qubits());
    for (size_t i = 0; i < gens.size(); i++) {
        if (!span.insert(gens[i].symplectic())) {
            return {false, ValidityIssue::Dependent, i, i};
        }
    }
    if (gens.size() > s.num_qubits()) {
        return {false, ValidityIssue::TooManyGenerators, 0, 0};
    }
    return {};
}

void require_valid(const StabilizerGroup &s) {
    Validation v = validate(s);
    if (!v) {
        throw ValidityError("invalid stabilizer group: " + v.describe());
    }
}

Partition::Partition(std::vector<size_t> labels, std::vector<std::string> names)
    : labels_(std::move(labels)), names_(std::move(names)), members_(names_.size()) {
    for (size_t q = 0; q < labels_.size(); q++) {
        if (labels_[q] >= names_.size()) {
            throw std::invalid_argument("Partition: qubit " + std::to_string(q) + " has an unknown party");
        }
        members_[labels_[q]].push_back(q);
    }
    for (size_t p = 0; p < names_.size(); p++) {
        if (members_[p].empty()) {
            throw std::invalid_argument("Partition: party " + names_[p] + " is empty");
        }
    }
}

Partition Partition::contiguous(std::span<const size_t> sizes) {
    std::vector<size_t> labels;
    std::vector<std::string> names;
    for (size_t p = 0; p < sizes.size(); p++) {
        labels.insert(labels.end(), sizes[p], p);
        names.push_back(p < 26 ? std::string(1, char('A' + p)) : "P" + std::to_string(p));
    }
    return Partition(std::move(labels), std::move(names));
}

Partition Partition::contiguous(std::initializer_list<size_t> sizes) {
    return contiguous(std::span<const size_t>(sizes.begin(), sizes.size()));
}

Partition Partition::parse(std::string_view text, size_t num_qubits) {
    constexpr size_t unset = SIZE_MAX;
    std::vector<size_t> labels;
    std::vector<std::string> names;
    size_t pos = 0;
    auto read_int = [&](size_t &out) {
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            pos++;
        }
        if (pos == start) {
            throw ParseError("expected a qubit index", 1, start + 1);
        }
        std::from_chars(text.data() + start, text.data() + pos, out);
    };
    while (pos < text.size()) {
        size_t item_start = pos;
        size_t lo = 0;
        size_t hi = 0;
        read_int(lo);
        hi = lo;
        if (pos < text.size() && text[pos] == '-') {
            pos++;
            read_int(hi);
        }
        if (hi < lo) {
            throw ParseError("descending range", 1, item_start + 1);
        }
        if (pos >= text.size() || text[pos] != ':') {
            throw ParseError("expected ':' after range", 1, pos + 1);
        }
        pos++;
        size_t label_start = pos;
        while (pos < text.size() && text[pos] != ',') {
            pos++;
        }
        std::string label(text.substr(label_start, pos - label_start));
        if (label.empty()) {
            throw ParseError("empty party label", 1, label_start + 1);
        }
        if (pos < text.size()) {
            pos++;
            if (pos == text.size()) {
                throw ParseError("trailing ','", 1, pos);
            }
        }
        size_t party = std::find(names.begin(), names.end(), label) - names.begin();
        if (party == names.size()) {
            names.push_back(label);
        }
        if (labels.size() <= hi) {
            labels.resize(hi + 1, unset);
        }
        for (size_t q = lo; q <= hi; q++) {
            if (labels[q] != unset) {
                throw ParseError("qubit " + std::to_string(q) + " assigned twice", 1, item_start + 1);
            }
            labels[q] = party;
        }
    }
    if (labels.empty()) {
        throw ParseError("empty partition", 1, 1);
    }
    if (num_qubits != 0 && labels.size() != num_qubits) {
        throw ParseError("partition covers " + std::to_string(labels.size()) + " qubits, expected " +
                             std::to_string(num_qubits),
                         1, 1);
    }
    for (size_t q = 0; q < labels.size(); q++) {
        if (labels[q] == unset) {
            throw ParseError("qubit " + std::to_string(q) + " has no party", 1, 1);
        }
    }
    return Partition(std::move(labels), std::move(names));
}

std::vector<size_t> Partition::complement(size_t party) const {
    std::vector<size_t> out;
    out.reserve(labels_.size() - members_[party].size());
    for (size_t q = 0; q < labels_.size(); q++) {
        if (labels_[q] != party) {
            out.push_back(q);
        }
    }
    return out;
}

Partition Partition::merged(std::span<const size_t> groups, std::vector<std::string> names) const {
    if (groups.size() != names_.size()) {
        throw std::invalid_argument("Partition::merged: one group index per party required");
    }
    std::vector<size_t> labels(labels_.size());
    for (size_t q = 0; q < labels_.size(); q++) {
        labels[q] = groups[labels_[q]];
    }
    return Partition(std::move(labels), std::move(names));
}

std::string Partition::str() const {
    std::string out;
    size_t q = 0;
    while (q < labels_.size()) {
        size_t end = q;
        while (end + 1 < labels_.size() && labels_[end + 1] == labels_[q]) {
            end++;
        }
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(q);
        if (end != q) {
            out += '-' + std::to_string(end);
        }
        out += ':' + names_[labels_[q]];
        q = end + 1;
    }
    return out;
}

BitMatrix subgroup_trivial_on(const StabilizerGroup &s, std::span<const size_t> party) {
    check_indices(s.num_qubits(), party);
    size_t prefix = 2 * party.size();
    size_t full = 2 * s.num_qubits();
    // Rows are (generator restricted to party | generator). Eliminating on the
    // prefix leaves products of generators that vanish on the party.
    std::vector<BitVector> rows;
    rows.reserve(s.dim());
    for (const PauliOperator &g : s.generators()) {
        BitVector head = restricted_row(g, party);
        BitVector row(prefix + full);
        for (size_t k = 0; k < prefix; k++) {
            row.set(k, head.get(k));
        }
        BitVector tail = g.symplectic();
        for (size_t k = 0; k < full; k++) {
            row.set(prefix + k, tail.get(k));
        }
        rows.push_back(std::move(row));
    }
    size_t r = eliminate_prefix(rows, prefix).size();
    BitMatrix basis(0, full);
    for (size_t i = r; i < rows.size(); i++) {
        BitVector v(full);
        for (size_t k = 0; k < full; k++) {
            v.set(k, rows[i].get(prefix + k));
        }
        basis.push_row(std::move(v));
    }
    return basis;
}

size_t subgroup_trivial_on_dim(const StabilizerGroup &s, std::span<const size_t> party) {
    check_indices(s.num_qubits(), party);
    std::vector<BitVector> rows;
    rows.reserve(s.dim());
    for (const PauliOperator &g : s.generators()) {
        rows.push_back(restricted_row(g, party));
    }
    return s.dim() - eliminate_prefix(rows, 2 * party.size()).size();
}

size_t local_subgroup_dim(const StabilizerGroup &s, const Partition &partition) {
    if (partition.num_qubits() != s.num_qubits()) {
        throw std::invalid_argument("local_subgroup_dim: partition covers " + std::to_string(partition.num_qubits()) +
                                    " qubits, group has " + std::to_string(s.num_qubits()));
    }
    std::vector<BitMatrix> bases;
    for (size_t p = 0; p < partition.num_parties(); p++) {
        bases.push_back(subgroup_trivial_on(s, partition.qubits(p)));
    }
    BitMatrix stacked = stack(bases);
    if (stacked.num_rows() == 0) {
        return 0;
    }
    return rank(stacked);
}

StabilizerGroup sample_uniform_stabilizer(size_t n, size_t k, Rng &rng) {
    if (k > n) {
        throw std::invalid_argument("sample_uniform_stabilizer: k > n");
    }
    size_t dim = 2 * n;
    // Basis of the commutant of the generators chosen so far.
    std::vector<BitVector> commutant;
    commutant.reserve(dim);
    for (size_t c = 0; c < dim; c++) {
        BitVector e(dim);
        e.set(c, true);
        commutant.push_back(std::move(e));
    }
    SpanTracker chosen(dim);
    std::vector<PauliOperator> gens;
    gens.reserve(n - k);
    while (gens.size() < n - k) {
        // The commutant contains the chosen span; rejecting span members
        // leaves the uniform distribution over admissible new generators.
        BitVector v = random_combination(commutant, dim, rng);
        if (chosen.contains(v)) {
            continue;
        }
        chosen.insert(v);
        restrict_to_annihilator(commutant, symplectic_dual(v));
        gens.push_back(PauliOperator::from_symplectic(v, rng() & 1));
    }
    return StabilizerGroup(n, std::move(gens));
}

StabilizerGroup canonical_form(const StabilizerGroup &s) {
    std::vector<PauliOperator> gens = s.generators();
    std::vector<BitVector> vecs;
    vecs.reserve(gens.size());
    for (const PauliOperator &g : gens) {
        vecs.push_back(g.symplectic());
    }
    size_t cols = 2 * s.num_qubits();
    size_t next = 0;
    for (size_t col = 0; col < cols && next < gens.size(); col++) {
        size_t found = next;
        while (found < gens.size() && !vecs[found].get(col)) {
            found++;
        }
        if (found == gens.size()) {
            continue;
        }
        std::swap(vecs[next], vecs[found]);
        std::swap(gens[next], gens[found]);
        for (size_t r = 0; r < gens.size(); r++) {
            if (r != next && vecs[r].get(col)) {
                vecs[r] ^= vecs[next];
                gens[r] = gens[r] * gens[next];
            }
        }
        next++;
    }
    return StabilizerGroup(s.num_qubits(), std::move(gens));
}

Purification purify(const StabilizerGroup &s) {
    require_valid(s);
    size_t n = s.num_qubits();
    size_t k = s.log_rank();
    if (k == 0) {
        return {s, 0};
    }
    StabilizerGroup canon = canonical_form(s);

    // Commutant of S: kernel of u -> (ω(u, g))_g.
    BitMatrix constraints(0, 2 * n);
    for (const PauliOperator &g : canon.generators()) {
        constraints.push_row(symplectic_dual(g.symplectic()));
    }
    std::vector<BitVector> pool = canon.dim() == 0 ? BitMatrix::identity(2 * n).rows()
                                                   : kernel_basis(constraints).rows();

    // Symplectic Gram-Schmidt on the commutant. Vectors with no partner lie
    // in S (the radical) and are dropped; what remains are k logical pairs.
    std::vector<std::pair<BitVector, BitVector>> logicals;
    while (!pool.empty()) {
        BitVector u = pool.front();
        pool.erase(pool.begin());
        BitVector u_dual = symplectic_dual(u);
        auto partner = std::find_if(pool.begin(), pool.end(), [&](const BitVector &w) {
            return w.dot(u_dual);
        });
        if (partner == pool.end()) {
            continue;
        }
        BitVector w = *partner;
        pool.erase(partner);
        BitVector w_dual = symplectic_dual(w);
        for (BitVector &t : pool) {
            bool with_w = t.dot(w_dual);
            bool with_u = t.dot(u_dual);
            if (with_w) {
                t ^= u;
            }
            if (with_u) {
                t ^= w;
            }
        }
        logicals.emplace_back(std::move(u), std::move(w));
    }
    if (logicals.size() != k) {
        throw ValidityError("purify: found " + std::to_string(logicals.size()) + " logical pairs, expected " +
                            std::to_string(k));
    }

    std::vector<PauliOperator> gens;
    gens.reserve(n + k);
    PauliOperator ancilla_identity(k);
    for (const PauliOperator &g : canon.generators()) {
        gens.push_back(tensor(g, ancilla_identity));
    }
    for (size_t j = 0; j < k; j++) {
        PauliOperator lx = PauliOperator::from_symplectic(logicals[j].first);
        PauliOperator lz = PauliOperator::from_symplectic(logicals[j].second);
        gens.push_back(tensor(lz, PauliOperator::single(k, j, 'Z')));
        gens.push_back(tensor(lx, PauliOperator::single(k, j, 'X')));
    }
    return {StabilizerGroup(n + k, std::move(gens)), k};
}

StabilizerGroup parse_stabilizer_group(std::string_view text) {
    std::vector<PauliOperator> gens;
    size_t declared = 0;
    bool have_declared = false;
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
        std::string_view body = line.substr(lead, trail - lead + 1);
        if (body.starts_with("n=")) {
            if (have_declared || !gens.empty()) {
                throw ParseError("header 'n=' must be the first line", line_no, lead + 1);
            }
            auto digits = body.substr(2);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), declared);
            if (ec != std::errc() || ptr != digits.data() + digits.size()) {
                throw ParseError("malformed qubit count", line_no, lead + 3);
            }
            have_declared = true;
            continue;
        }
        PauliOperator g;
        try {
            g = PauliOperator::from_string(body);
        } catch (const ParseError &e) {
            throw ParseError("bad Pauli string", line_no, lead + e.column());
        }
        size_t expected = have_declared ? declared : (gens.empty() ? g.num_qubits() : gens[0].num_qubits());
        if (g.num_qubits() != expected) {
            throw ParseError("Pauli has " + std::to_string(g.num_qubits()) + " qubits, expected " +
                                 std::to_string(expected),
                             line_no, lead + 1);
        }
        gens.push_back(std::move(g));
    }
    if (!have_declared && gens.empty()) {
        throw ParseError("no generators and no 'n=' header", 0, 0);
    }
    size_t n = have_declared ? declared : gens[0].num_qubits();
    StabilizerGroup s(n, std::move(gens));
    require_valid(s);
    return s;
}

std::string format_stabilizer_group(const StabilizerGroup &s) {
    std::string out = "n=" + std::to_string(s.num_qubits()) + "\n";
    for (const PauliOperator &g : s.generators()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

}  // namespace stabent
