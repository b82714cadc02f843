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

// stabent: entanglement of stabilizer states from the command line.
//
// Exit codes: 0 success, 1 a bound or cross-check failed, 2 usage,
// configuration or parse error, 3 invalid input data.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabent/clifford.h"
#include "stabent/entanglement.h"
#include "stabent/errors.h"
#include "stabent/experiments.h"
#include "stabent/oracle.h"
#include "stabent/random.h"
#include "stabent/stabilizer.h"
#include "stabent/verify.h"

namespace {

using namespace stabent;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct Flags {
    std::vector<std::string> files;
    std::string parties;
    std::string format = "text";
    std::string out;
    std::string kind;
    std::string state_file;
    std::string theorem;
    size_t na = 0, nb = 0, nc = 0, n = 0, m = 0, k = 0;
    size_t trials = 1000;
    size_t cases = 200;
    uint64_t seed = 0;
    unsigned threads = 1;
    double epsilon = 0.5, alpha = 0, beta = 1, delta = 1;
    std::vector<double> delta_grid;
    bool oracle = false;
    bool exhaustive = false;
    bool clifford = false;
    bool no_timing = false;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const Flags &f, const std::string &text) {
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.out);
    if (!out) {
        throw ConfigError("cannot write " + f.out);
    }
    out << text;
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

StabilizerGroup load_group(const std::string &path) {
    StabilizerGroup s = parse_stabilizer_group(read_file(path));
    require_valid(s);
    return s;
}

Partition partition_for(const Flags &f, size_t num_qubits, size_t expected_parties) {
    if (!f.parties.empty()) {
        return Partition::parse(f.parties, num_qubits);
    }
    if (expected_parties == 2 && f.na && f.nb) {
        if (f.na + f.nb != num_qubits) {
            throw ConfigError("--na + --nb does not match the qubit count");
        }
        return Partition::contiguous({f.na, f.nb});
    }
    if (expected_parties == 3 && f.na && f.nb && f.nc) {
        if (f.na + f.nb + f.nc != num_qubits) {
            throw ConfigError("--na + --nb + --nc does not match the qubit count");
        }
        return Partition::contiguous({f.na, f.nb, f.nc});
    }
    throw ConfigError("a partition is required (--parties, e.g. 0-1:A,2-3:B)");
}

// Runs fn against the dense oracle; a capacity overrun is a warning.
template <typename F>
std::optional<bool> with_oracle(F &&fn) {
    try {
        return fn();
    } catch (const CapacityError &e) {
        std::cerr << "warning: oracle skipped: " << e.what() << "\n";
        return std::nullopt;
    }
}

int finish_report(const Flags &f, json j, std::optional<bool> agrees) {
    if (agrees) {
        j["oracle_agrees"] = *agrees;
    }
    if (f.format == "json") {
        emit(f, dump(j));
    } else {
        std::ostringstream text;
        for (auto it = j.begin(); it != j.end(); ++it) {
            text << it.key() << "=" << it.value().dump() << "\n";
        }
        emit(f, text.str());
    }
    return agrees && !*agrees ? kExitFailed : kExitOk;
}

int cmd_entangle(const Flags &f) {
    StabilizerGroup s = load_group(f.files.at(0));
    Partition cut = partition_for(f, s.num_qubits(), 2);
    EntanglementReport report;
    report.epr = pure_bipartite_entanglement(s, cut);
    for (size_t p = 0; p < cut.num_parties(); p++) {
        report.log_ranks[cut.name(p)] = local_log_rank(s, cut.qubits(p));
    }
    std::optional<bool> agrees;
    if (f.oracle) {
        agrees = with_oracle([&] {
            double entropy = oracle::entropy_of_reduction(s, cut.qubits(0));
            return std::abs(entropy - static_cast<double>(*report.epr)) < 1e-9;
        });
    }
    return finish_report(f, to_json(report), agrees);
}

int cmd_ghz(const Flags &f) {
    StabilizerGroup s = load_group(f.files.at(0));
    Partition parties = partition_for(f, s.num_qubits(), 3);
    EntanglementReport report;
    report.ghz = ghz_count(s, parties);
    for (size_t p = 0; p < parties.num_parties(); p++) {
        report.log_ranks[parties.name(p)] = local_log_rank(s, parties.qubits(p));
    }
    std::optional<bool> agrees;
    if (f.oracle) {
        agrees = with_oracle([&] {
            return oracle::ghz_count(s, parties) == *report.ghz;
        });
    }
    return finish_report(f, to_json(report), agrees);
}

int cmd_mixed(const Flags &f) {
    StabilizerGroup s = load_group(f.files.at(0));
    Partition cut = partition_for(f, s.num_qubits(), 2);
    MixedEntanglement e = mixed_epr_lower_bound(s, cut);
    EntanglementReport report;
    report.mixed_lower_bound_raw = e.raw();
    report.mixed_lower_bound = e.lower_bound;
    report.log_ranks[cut.name(0)] = e.log_rank_a;
    report.log_ranks[cut.name(1)] = e.log_rank_b;
    json j = to_json(report);
    j["k"] = e.k;
    if (e.exact_full_rank) {
        j["exact_full_rank"] = *e.exact_full_rank;
    }
    std::optional<bool> agrees;
    if (f.oracle) {
        // The extractable count can never exceed half the mutual information.
        agrees = with_oracle([&] {
            oracle::Limits limits;
            oracle::DensityMatrix rho = oracle::density_matrix(s, limits);
            double mutual = oracle::entropy(oracle::reduce(rho, cut.qubits(0))) +
                            oracle::entropy(oracle::reduce(rho, cut.qubits(1))) - oracle::entropy(rho);
            return e.raw() <= mutual / 2 + 1e-9;
        });
    }
    return finish_report(f, j, agrees);
}

int cmd_sample(const Flags &f, uint64_t seed) {
    if (f.n == 0) {
        throw ConfigError("--n is required");
    }
    Rng rng = stream_rng(seed, 0);
    std::string text;
    if (f.clifford) {
        text = format_clifford(sample_uniform_clifford(f.n, rng));
    } else {
        if (f.k > f.n) {
            throw ConfigError("--k must not exceed --n");
        }
        text = format_stabilizer_group(sample_uniform_stabilizer(f.n, f.k, rng));
    }
    emit(f, "# seed=" + std::to_string(seed) + "\n" + text);
    return kExitOk;
}

int cmd_distance(const Flags &f) {
    if (f.files.size() != 2) {
        throw ConfigError("distance takes two Clifford files");
    }
    CliffordElement a = parse_clifford(read_file(f.files[0]));
    CliffordElement b = parse_clifford(read_file(f.files[1]));
    if (a.num_qubits() != b.num_qubits()) {
        throw ConfigError("Clifford elements act on different qubit counts");
    }
    json j = {{"distance", distance(a, b)}};
    std::optional<bool> agrees;
    if (f.oracle) {
        if (a.num_qubits() == 1) {
            agrees = oracle::clifford_distance(a, b) == j["distance"].get<size_t>();
        } else {
            std::cerr << "warning: oracle skipped: exhaustive distance search is limited to 1 qubit\n";
        }
    }
    return finish_report(f, j, agrees);
}

std::vector<size_t> party_sizes(const std::string &text) {
    std::vector<size_t> sizes;
    if (text.find(':') != std::string::npos) {
        Partition p = Partition::parse(text);
        for (size_t k = 0; k < p.num_parties(); k++) {
            sizes.push_back(p.qubits(k).size());
        }
        return sizes;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            sizes.push_back(std::stoul(item));
        } catch (const std::exception &) {
            throw ConfigError("--parties: expected comma-separated sizes or a partition string");
        }
    }
    return sizes;
}

int cmd_experiment(const Flags &f, uint64_t seed, const std::string &invocation, const CLI::App &sub) {
    auto kind = experiments::parse_kind(f.kind);
    if (!kind) {
        throw ConfigError("unknown experiment kind '" + f.kind + "'");
    }
    experiments::Config cfg;
    cfg.kind = *kind;
    cfg.n_a = f.na;
    cfg.n_b = f.nb;
    cfg.n_c = f.nc;
    cfg.n = f.n;
    cfg.m = f.m;
    if (sub.count("--k")) {
        cfg.k = f.k;
    }
    if (!f.parties.empty()) {
        cfg.parties = party_sizes(f.parties);
    }
    cfg.trials = f.trials;
    cfg.seed = seed;
    cfg.threads = f.threads;
    cfg.delta_grid = f.delta_grid;
    cfg.epsilon = f.epsilon;
    cfg.alpha = f.alpha;
    cfg.beta = f.beta;
    cfg.exhaustive = f.exhaustive;
    if (!f.state_file.empty()) {
        cfg.fixed_state = load_group(f.state_file);
    }
    experiments::Report report = experiments::run(cfg);

    if (f.format == "csv") {
        emit(f, "# invocation: " + invocation + "\n" + experiments::to_csv(report));
    } else {
        json j = experiments::to_json(report, !f.no_timing);
        j["invocation"] = invocation;
        if (f.format == "json") {
            emit(f, dump(j));
        } else {
            std::ostringstream text;
            text << "kind=" << f.kind << " seed=" << seed << " trials=" << report.trials << "\n";
            text << "mean=" << report.stats.mean << " std_error=" << report.stats.std_error << "\n";
            for (const auto &[name, ok] : report.pass_flags) {
                text << (ok ? "PASS " : "FAIL ") << name << "\n";
            }
            emit(f, text.str());
        }
    }
    return report.passed() ? kExitOk : kExitFailed;
}

int cmd_verify(const Flags &f, uint64_t seed) {
    verify::Options options;
    options.seed = seed;
    options.cases = f.cases;
    std::vector<verify::Check> checks = verify::run_all(options);
    bool all = true;
    for (const verify::Check &c : checks) {
        all = all && c.pass;
    }
    if (f.format == "json") {
        emit(f, dump({{"seed", seed}, {"checks", verify::to_json(checks)}, {"passed", all}}));
    } else {
        std::ostringstream text;
        for (const verify::Check &c : checks) {
            text << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
            if (!c.pass) {
                text << ": " << c.detail;
            }
            text << "\n";
        }
        emit(f, text.str());
    }
    return all ? kExitOk : kExitFailed;
}

int cmd_bound(const Flags &f) {
    auto theorem = experiments::parse_theorem(f.theorem);
    if (!theorem) {
        throw ConfigError("unknown bound '" + f.theorem + "'");
    }
    experiments::BoundParams p;
    p.delta = f.delta;
    p.n = static_cast<double>(f.n);
    p.n_a = static_cast<double>(f.na);
    p.n_b = static_cast<double>(f.nb);
    p.n_c = static_cast<double>(f.nc);
    p.epsilon = f.epsilon;
    p.alpha = f.alpha;
    p.beta = f.beta;
    p.m = static_cast<double>(f.m);
    experiments::BoundValue v = experiments::bound_value(*theorem, p);
    json j = {{"bound", f.theorem}, {"value", v.value}, {"applicable", v.applicable}, {"note", v.note}};
    if (v.threshold) {
        j["threshold"] = *v.threshold;
    }
    return finish_report(f, j, std::nullopt);
}

uint64_t entropy_seed() {
    std::random_device device;
    return (static_cast<uint64_t>(device()) << 32) ^ device();
}

}  // namespace

int main(int argc, char **argv) {
    std::string invocation;
    for (int k = 0; k < argc; k++) {
        invocation += (k ? " " : "") + std::string(argv[k]);
    }

    CLI::App app{"Entanglement of stabilizer states"};
    app.require_subcommand(1);
    Flags f;
    std::optional<uint64_t> seed_flag;

    auto add_format = [&](CLI::App *sub, std::vector<std::string> formats) {
        sub->add_option("--format", f.format, "Output format (default " + formats.front() + ")")
            ->check(CLI::IsMember(formats));
        sub->add_option("--out", f.out, "Write output to this path instead of stdout");
    };
    auto add_state = [&](CLI::App *sub) {
        sub->add_option("file", f.files, "Stabilizer group file")->required()->expected(1);
        sub->add_option("--parties", f.parties, "Partition, e.g. 0-1:A,2-3:B");
        sub->add_option("--na", f.na, "Size of party A (contiguous partition)");
        sub->add_option("--nb", f.nb, "Size of party B");
        sub->add_option("--nc", f.nc, "Size of party C");
        sub->add_flag("--oracle", f.oracle, "Cross-check against the dense oracle");
        add_format(sub, {"text", "json"});
    };

    CLI::App *entangle = app.add_subcommand("entangle", "EPR pairs of a pure bipartite state");
    add_state(entangle);
    CLI::App *ghz = app.add_subcommand("ghz", "GHZ states of a pure multipartite state");
    add_state(ghz);
    CLI::App *mixed = app.add_subcommand("mixed", "EPR lower bound for a mixed bipartite state");
    add_state(mixed);

    CLI::App *sample = app.add_subcommand("sample", "Sample a uniform stabilizer group or Clifford element");
    sample->add_option("--n", f.n, "Number of qubits")->required();
    sample->add_option("--k", f.k, "Number of missing generators (mixed states)");
    sample->add_flag("--clifford", f.clifford, "Sample a Clifford element instead");
    sample->add_option("--seed", seed_flag, "Random seed");
    sample->add_option("--out", f.out, "Write output to this path instead of stdout");

    CLI::App *dist = app.add_subcommand("distance", "Distance between two Clifford elements");
    dist->add_option("files", f.files, "Two Clifford files")->required()->expected(2);
    dist->add_flag("--oracle", f.oracle, "Cross-check by exhaustive search (1 qubit)");
    add_format(dist, {"text", "json"});

    CLI::App *experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
    experiment->add_option("kind", f.kind, "pure-bipartite, purity, ghz-tripartite, ghz-multipartite, "
                                           "mixed-bipartite, concentration, lipschitz")
        ->required();
    experiment->add_option("--na", f.na, "Size of party A");
    experiment->add_option("--nb", f.nb, "Size of party B");
    experiment->add_option("--nc", f.nc, "Size of party C");
    experiment->add_option("--n", f.n, "Base size n");
    experiment->add_option("--m", f.m, "Number of parties");
    experiment->add_option("--k", f.k, "Number of missing generators");
    experiment->add_option("--parties", f.parties, "Party sizes, e.g. 4,4,4");
    experiment->add_option("--trials", f.trials, "Number of trials");
    experiment->add_option("--seed", seed_flag, "Random seed");
    experiment->add_option("--threads", f.threads, "Worker threads");
    experiment->add_option("--epsilon", f.epsilon, "Relative deviation");
    experiment->add_option("--delta-grid", f.delta_grid, "Absolute deviations")->delimiter(',');
    experiment->add_option("--alpha", f.alpha, "Size shape parameter");
    experiment->add_option("--beta", f.beta, "Rank shape parameter");
    experiment->add_option("--state", f.state_file, "Fixed state (ghz-tripartite)");
    experiment->add_flag("--exhaustive", f.exhaustive, "Enumerate every state instead of sampling");
    experiment->add_flag("--no-timing", f.no_timing, "Omit wall-clock timing from JSON");
    add_format(experiment, {"json", "csv", "text"});

    CLI::App *verify_cmd = app.add_subcommand("verify", "Cross-check against the brute-force oracle");
    verify_cmd->add_option("--seed", seed_flag, "Random seed");
    verify_cmd->add_option("--trials", f.cases, "Random instances per check");
    add_format(verify_cmd, {"text", "json"});

    CLI::App *bound = app.add_subcommand("bound", "Evaluate an analytic bound");
    bound->add_option("name", f.theorem,
                      "clifford-concentration, pure-tail, pure-epsilon, pure-mean, purity, ghz3-mean, ghz3-tail, ghz-multi, ghz-multi-grouped, mixed-mean-lower, mixed-mean-upper, mixed-tail")->required();
    bound->add_option("--na", f.na, "Size of party A");
    bound->add_option("--nb", f.nb, "Size of party B");
    bound->add_option("--nc", f.nc, "Size of party C");
    bound->add_option("--n", f.n, "Base size n");
    bound->add_option("--m", f.m, "Number of parties");
    bound->add_option("--delta", f.delta, "Absolute deviation");
    bound->add_option("--epsilon", f.epsilon, "Relative deviation");
    bound->add_option("--alpha", f.alpha, "Size shape parameter");
    bound->add_option("--beta", f.beta, "Rank shape parameter");
    add_format(bound, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    uint64_t seed = 0;
    if (*experiment && !experiment->count("--format")) {
        f.format = "json";
    }
    if (seed_flag) {
        seed = *seed_flag;
    } else if (*sample || *experiment || *verify_cmd) {
        seed = *verify_cmd ? 1 : entropy_seed();
        if (!*verify_cmd) {
            std::cerr << "seed: " << seed << "\n";
        }
        invocation += " --seed " + std::to_string(seed);
    }

    try {
        if (*entangle) {
            return cmd_entangle(f);
        }
        if (*ghz) {
            return cmd_ghz(f);
        }
        if (*mixed) {
            return cmd_mixed(f);
        }
        if (*sample) {
            return cmd_sample(f, seed);
        }
        if (*dist) {
            return cmd_distance(f);
        }
        if (*experiment) {
            return cmd_experiment(f, seed, invocation, *experiment);
        }
        if (*verify_cmd) {
            return cmd_verify(f, seed);
        }
        if (*bound) {
            return cmd_bound(f);
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidityError &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ArityError &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
