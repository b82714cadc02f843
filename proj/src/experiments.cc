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

#include "stabent/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "stabent/clifford.h"
#include "stabent/entanglement.h"
#include "stabent/errors.h"
#include "stabent/oracle.h"
#include "stabent/random.h"

namespace stabent::experiments {

namespace {

constexpr std::string_view kBaseNote = "all exp and log in analytic bounds are base 2";

const std::vector<double> kDefaultDeltas = {1, 2, 4, 8, 16};

// Runs fn(t) for t in [0, trials) on `threads` workers. Results land at
// their trial index, so the output does not depend on scheduling.
template <typename T, typename F>
std::vector<T> run_trials(size_t trials, unsigned threads, F &&fn) {
    std::vector<T> out(trials);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (size_t t = next++; t < trials; t = next++) {
                out[t] = fn(t);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = trials;
        }
    };
    unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(trials, 1))));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < count; w++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

double identity_value(long long key) {
    return static_cast<double>(key);
}

double purity_value(long long key) {
    return std::exp2(-static_cast<double>(key));
}

std::vector<double> deltas_or_default(const Config &cfg) {
    return cfg.delta_grid.empty() ? kDefaultDeltas : cfg.delta_grid;
}

// Fills histogram, samples and statistics from integer per-trial values.
void summarize(Report &report, const std::vector<long long> &keys, double (*value_of)(long long)) {
    report.trials = keys.size();
    report.histogram.clear();
    report.samples.clear();
    report.samples.reserve(keys.size());
    for (long long key : keys) {
        report.histogram[key]++;
        report.samples.push_back(value_of(key));
    }
    report.stats = statistics_from_histogram(report.histogram, value_of);
}

TailRow tail_row(std::string table, double parameter, size_t count, size_t trials, const BoundValue &bound) {
    TailRow row;
    row.table = std::move(table);
    row.parameter = parameter;
    row.count = count;
    row.empirical = trials ? static_cast<double>(count) / trials : 0.0;
    row.wilson_upper = wilson_upper(count, trials);
    row.bound = bound.value;
    row.applicable = bound.applicable;
    row.pass = row.empirical <= row.bound;
    return row;
}

// True when every applicable row of `table` passes.
bool table_passes(const Report &report, std::string_view table) {
    for (const TailRow &row : report.tails) {
        if (row.table == table && row.applicable && !row.pass) {
            return false;
        }
    }
    return true;
}

bool within_support(const Report &report, long long lo, long long hi) {
    if (report.histogram.empty()) {
        return true;
    }
    return report.histogram.begin()->first >= lo && report.histogram.rbegin()->first <= hi;
}

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {
    }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

Report start_report(const Config &cfg) {
    validate(cfg);
    Report report;
    report.config = cfg;
    return report;
}

// Pure states on n qubits for trial t, either sampled or enumerated.
std::vector<StabilizerGroup> exhaustive_states(const Config &cfg) {
    return oracle::all_pure_states(cfg.n_a + cfg.n_b);
}

std::vector<long long> bipartite_entanglement_trials(const Config &cfg) {
    Partition cut = Partition::contiguous({cfg.n_a, cfg.n_b});
    if (cfg.exhaustive) {
        std::vector<long long> keys;
        for (const StabilizerGroup &s : exhaustive_states(cfg)) {
            keys.push_back(static_cast<long long>(pure_bipartite_entanglement(s, cut)));
        }
        return keys;
    }
    size_t n = cfg.n_a + cfg.n_b;
    return run_trials<long long>(cfg.trials, cfg.threads, [&](size_t t) {
        Rng rng = stream_rng(cfg.seed, t);
        StabilizerGroup s = sample_uniform_stabilizer(n, 0, rng);
        return static_cast<long long>(pure_bipartite_entanglement(s, cut));
    });
}

CliffordElement embed(const CliffordElement &local, const std::vector<size_t> &qubits, size_t n) {
    std::vector<PauliOperator> images;
    std::vector<size_t> slot(n, SIZE_MAX);
    for (size_t i = 0; i < qubits.size(); i++) {
        slot[qubits[i]] = i;
    }
    auto lift = [&](const PauliOperator &p) {
        PauliOperator out(n);
        for (size_t i = 0; i < qubits.size(); i++) {
            out.set_xz(qubits[i], p.x_bit(i), p.z_bit(i));
        }
        // The local image is Hermitian; keep its sign.
        return PauliOperator::from_symplectic(out.symplectic(), p.is_negative());
    };
    for (size_t q = 0; q < n; q++) {
        if (slot[q] == SIZE_MAX) {
            images.push_back(PauliOperator::single(n, q, 'X'));
            images.push_back(PauliOperator::single(n, q, 'Z'));
        } else {
            images.push_back(lift(local.image_of_x(slot[q])));
            images.push_back(lift(local.image_of_z(slot[q])));
        }
    }
    return CliffordElement::from_images(images);
}

std::string reduced_fraction(unsigned long long num, unsigned long long den) {
    unsigned long long g = std::gcd(num, den);
    return std::to_string(num / g) + "/" + std::to_string(den / g);
}

}  // namespace

std::string_view kind_name(Kind kind) {
    switch (kind) {
        case Kind::PureBipartite:
            return "pure-bipartite";
        case Kind::Purity:
            return "purity";
        case Kind::GhzTripartite:
            return "ghz-tripartite";
        case Kind::GhzMultipartite:
            return "ghz-multipartite";
        case Kind::MixedBipartite:
            return "mixed-bipartite";
        case Kind::Concentration:
            return "concentration";
        case Kind::Lipschitz:
            return "lipschitz";
    }
    return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (Kind k : {Kind::PureBipartite, Kind::Purity, Kind::GhzTripartite, Kind::GhzMultipartite, Kind::MixedBipartite,
                   Kind::Concentration, Kind::Lipschitz}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

void validate(const Config &cfg) {
    auto fail = [&](const std::string &why) {
        throw ConfigError(std::string(kind_name(cfg.kind)) + ": " + why);
    };
    if (cfg.trials == 0 && !cfg.exhaustive) {
        fail("trials must be at least 1");
    }
    for (double d : cfg.delta_grid) {
        if (d < 0) {
            fail("delta grid values must be nonnegative");
        }
    }
    switch (cfg.kind) {
        case Kind::PureBipartite:
        case Kind::Purity:
        case Kind::Concentration:
            if (cfg.n_a == 0 || cfg.n_b == 0) {
                fail("n_a and n_b must be positive");
            }
            if (cfg.exhaustive && cfg.kind == Kind::Concentration) {
                fail("exhaustive mode is not available");
            }
            if (cfg.exhaustive && cfg.n_a + cfg.n_b > 3) {
                fail("exhaustive enumeration needs n_a + n_b <= 3");
            }
            break;
        case Kind::GhzTripartite:
            if (cfg.fixed_state) {
                if (cfg.fixed_state->num_qubits() != cfg.n_a + cfg.n_b + cfg.n_c) {
                    fail("fixed state size does not match n_a + n_b + n_c");
                }
            }
            if (cfg.n_a == 0 || cfg.n_b == 0 || cfg.n_c == 0) {
                fail("n_a, n_b and n_c must be positive");
            }
            if (cfg.n_a + cfg.n_b < cfg.n_c || cfg.n_b + cfg.n_c < cfg.n_a || cfg.n_a + cfg.n_c < cfg.n_b) {
                fail("party sizes violate the triangle conditions; the mean bound does not apply");
            }
            break;
        case Kind::GhzMultipartite:
            if (cfg.m < 4) {
                fail("m must be at least 4");
            }
            if (cfg.n == 0) {
                fail("per-party size n must be positive");
            }
            if (cfg.epsilon <= 0) {
                fail("epsilon must be positive");
            }
            break;
        case Kind::MixedBipartite: {
            if (cfg.n == 0) {
                fail("n must be positive");
            }
            if (cfg.beta < 0 || cfg.beta > 2) {
                fail("beta must lie in [0, 2]");
            }
            if (cfg.alpha < 0) {
                fail("alpha must be nonnegative");
            }
            if (cfg.epsilon <= 0) {
                fail("epsilon must be positive");
            }
            double n_a = std::round(cfg.n + cfg.alpha * std::log2(static_cast<double>(cfg.n)));
            size_t k = cfg.k ? *cfg.k : static_cast<size_t>(std::llround(cfg.beta * cfg.n));
            if (k > static_cast<size_t>(n_a) + cfg.n) {
                fail("k exceeds the total qubit count");
            }
            break;
        }
        case Kind::Lipschitz: {
            size_t m = cfg.parties.empty() ? cfg.m : cfg.parties.size();
            if (m < 3) {
                fail("need at least 3 parties");
            }
            if (cfg.parties.empty() && cfg.n == 0) {
                fail("per-party size n must be positive");
            }
            for (size_t p : cfg.parties) {
                if (p == 0) {
                    fail("party sizes must be positive");
                }
            }
            break;
        }
    }
}

nlohmann::json to_json(const Config &cfg) {
    nlohmann::json j;
    j["kind"] = kind_name(cfg.kind);
    j["n_a"] = cfg.n_a;
    j["n_b"] = cfg.n_b;
    j["n_c"] = cfg.n_c;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["parties"] = cfg.parties;
    j["k"] = cfg.k ? nlohmann::json(*cfg.k) : nlohmann::json(nullptr);
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["delta_grid"] = cfg.delta_grid;
    j["epsilon"] = cfg.epsilon;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["exhaustive"] = cfg.exhaustive;
    j["fixed_state"] = cfg.fixed_state ? nlohmann::json(format_stabilizer_group(*cfg.fixed_state)) : nlohmann::json(nullptr);
    return j;
}

Statistics statistics_from_histogram(const std::map<long long, size_t> &histogram, double (*value_of)(long long)) {
    Statistics s;
    size_t total = 0;
    double sum = 0;
    for (const auto &[key, count] : histogram) {
        total += count;
        sum += count * value_of(key);
    }
    if (total == 0) {
        return s;
    }
    s.mean = sum / total;
    double squares = 0;
    for (const auto &[key, count] : histogram) {
        double d = value_of(key) - s.mean;
        squares += count * d * d;
    }
    s.variance = total > 1 ? squares / (total - 1) : 0.0;
    s.std_error = std::sqrt(s.variance / total);
    return s;
}

Statistics statistics_from_samples(const std::vector<double> &samples) {
    Statistics s;
    if (samples.empty()) {
        return s;
    }
    double sum = 0;
    for (double v : samples) {
        sum += v;
    }
    s.mean = sum / samples.size();
    double squares = 0;
    for (double v : samples) {
        squares += (v - s.mean) * (v - s.mean);
    }
    s.variance = samples.size() > 1 ? squares / (samples.size() - 1) : 0.0;
    s.std_error = std::sqrt(s.variance / samples.size());
    return s;
}

double wilson_upper(size_t successes, size_t trials, double z) {
    if (trials == 0) {
        return 1.0;
    }
    double n = static_cast<double>(trials);
    double p = successes / n;
    double z2 = z * z;
    double centre = p + z2 / (2 * n);
    double spread = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    return std::min(1.0, (centre + spread) / (1 + z2 / n));
}

bool Report::passed() const {
    for (const auto &[name, ok] : pass_flags) {
        if (!ok) {
            return false;
        }
    }
    return true;
}

nlohmann::json to_json(const Report &report, bool include_timing) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_name(report.config.kind);
    j["note"] = kBaseNote;
    j["config"] = to_json(report.config);
    j["realized"] = report.realized;
    j["trials"] = report.trials;
    j["statistics"] = {
        {"mean", report.stats.mean},
        {"variance", report.stats.variance},
        {"std_error", report.stats.std_error},
    };
    nlohmann::json hist = nlohmann::json::object();
    for (const auto &[key, count] : report.histogram) {
        hist[std::to_string(key)] = count;
    }
    j["histogram_of"] = report.histogram_of;
    j["histogram"] = hist;
    nlohmann::json analytic = nlohmann::json::object();
    if (report.mean_lower_bound) {
        analytic["mean_lower_bound"] = *report.mean_lower_bound;
    }
    if (report.mean_upper_bound) {
        analytic["mean_upper_bound"] = *report.mean_upper_bound;
    }
    if (report.exact_mean) {
        analytic["exact_mean"] = *report.exact_mean;
    }
    j["analytic"] = analytic;
    nlohmann::json tails = nlohmann::json::array();
    for (const TailRow &row : report.tails) {
        tails.push_back({
            {"table", row.table},
            {"parameter", row.parameter},
            {"count", row.count},
            {"empirical", row.empirical},
            {"wilson_upper", row.wilson_upper},
            {"bound", row.bound},
            {"applicable", row.applicable},
            {"pass", row.pass},
        });
    }
    j["tails"] = tails;
    j["pass_flags"] = report.pass_flags;
    j["passed"] = report.passed();
    j["diagnostics"] = report.diagnostics;
    if (include_timing) {
        j["timing"] = {{"runtime_seconds", report.runtime_seconds}};
    }
    return j;
}

std::string to_csv(const Report &report) {
    std::ostringstream out;
    out.precision(17);
    out << "# schema_version=" << kSchemaVersion << " kind=" << kind_name(report.config.kind) << " seed="
        << report.config.seed << " (" << kBaseNote << ")\n";
    out << "table,parameter,count,empirical,wilson_upper,bound,applicable,pass\n";
    for (const TailRow &row : report.tails) {
        out << row.table << ',' << row.parameter << ',' << row.count << ',' << row.empirical << ','
            << row.wilson_upper << ',' << row.bound << ',' << (row.applicable ? "true" : "false") << ','
            << (row.pass ? "true" : "false") << '\n';
    }
    for (const auto &[key, count] : report.histogram) {
        out << "histogram:" << report.histogram_of << ',' << key << ',' << count << ",,,,,\n";
    }
    return out.str();
}

Report run_pure_bipartite(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "epr_pairs";
    summarize(report, bipartite_entanglement_trials(cfg), identity_value);

    size_t big = std::max(cfg.n_a, cfg.n_b);
    size_t small = std::min(cfg.n_a, cfg.n_b);
    size_t n = cfg.n_a + cfg.n_b;
    BoundParams params;
    params.n_a = big;
    params.n_b = small;
    report.mean_lower_bound = bound_value(Theorem::HighPureMean, params).value;

    report.realized["delta_grid"] = deltas_or_default(cfg);
    for (double delta : deltas_or_default(cfg)) {
        double threshold = report.stats.mean - delta;
        size_t count = std::count_if(report.samples.begin(), report.samples.end(), [&](double e) {
            return e < threshold;
        });
        params.delta = delta;
        report.tails.push_back(tail_row("mean_deviation", delta, count, report.trials,
                                        bound_value(Theorem::PureTail, params)));
    }

    // The n(1 - eps) form with n = n_B and n_A = n + alpha log n.
    BoundParams eps_params;
    eps_params.n = small;
    eps_params.epsilon = cfg.epsilon;
    eps_params.alpha = small > 1 ? (big - small) / std::log2(static_cast<double>(small)) : 0.0;
    BoundValue eps_bound = bound_value(Theorem::PureEpsilon, eps_params);
    if (small == 1 && big > small) {
        eps_bound.applicable = false;
    }
    double eps_threshold = small * (1 - cfg.epsilon);
    size_t eps_count = std::count_if(report.samples.begin(), report.samples.end(), [&](double e) {
        return e < eps_threshold;
    });
    report.tails.push_back(tail_row("n_one_minus_eps", cfg.epsilon, eps_count, report.trials, eps_bound));
    report.realized["alpha_from_sizes"] = eps_params.alpha;

    report.pass_flags["mean_bound"] = report.stats.mean >= *report.mean_lower_bound - 3 * report.stats.std_error;
    report.pass_flags["support"] = within_support(report, 0, static_cast<long long>(small));
    report.pass_flags["tail_mean_deviation"] = table_passes(report, "mean_deviation");
    report.pass_flags["tail_n_one_minus_eps"] = table_passes(report, "n_one_minus_eps");
    report.diagnostics["total_qubits"] = n;
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run_purity(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "epr_pairs";
    std::vector<long long> keys = bipartite_entanglement_trials(cfg);
    // Stabilizer reductions have flat spectra: Tr ρ_A^2 = 2^{-E}.
    summarize(report, keys, purity_value);

    BoundParams params;
    params.n_a = cfg.n_a;
    params.n_b = cfg.n_b;
    report.exact_mean = bound_value(Theorem::PurityExact, params).value;

    if (cfg.exhaustive) {
        long long top = report.histogram.rbegin()->first;
        unsigned long long numerator = 0;
        for (const auto &[e, count] : report.histogram) {
            numerator += count << (top - e);
        }
        unsigned long long denominator = static_cast<unsigned long long>(report.trials) << top;
        unsigned long long formula_num = (1ULL << cfg.n_a) + (1ULL << cfg.n_b);
        unsigned long long formula_den = (1ULL << (cfg.n_a + cfg.n_b)) + 1;
        report.diagnostics["mean_purity_rational"] = reduced_fraction(numerator, denominator);
        report.diagnostics["formula_rational"] = reduced_fraction(formula_num, formula_den);
        report.pass_flags["exact_match"] = numerator * formula_den == formula_num * denominator;
    } else {
        report.pass_flags["mean_within_3se"] =
            std::abs(report.stats.mean - *report.exact_mean) <= 3 * report.stats.std_error;
    }
    report.pass_flags["support"] = std::all_of(report.samples.begin(), report.samples.end(), [](double p) {
        return p > 0 && p <= 1;
    });
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run_ghz_tripartite(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "ghz_states";
    size_t n = cfg.n_a + cfg.n_b + cfg.n_c;
    Partition parties = Partition::contiguous({cfg.n_a, cfg.n_b, cfg.n_c});

    struct Trial {
        long long delta = 0;
        bool sum_local_ok = true;
        bool inclusion_exclusion_ok = true;
    };
    auto evaluate = [&](const StabilizerGroup &s) {
        Trial out;
        out.delta = static_cast<long long>(ghz_count(s, parties));
        BitMatrix a = subgroup_trivial_on(s, parties.qubits(0));
        BitMatrix b = subgroup_trivial_on(s, parties.qubits(1));
        BitMatrix c = subgroup_trivial_on(s, parties.qubits(2));
        size_t da = a.num_rows(), db = b.num_rows(), dc = c.num_rows();
        out.sum_local_ok = da + db + dc >= n;
        BitMatrix all[] = {a, b, c};
        long long local = static_cast<long long>(rank(stack(all)));
        long long pairwise = static_cast<long long>(subspace_intersection_dim(a, b) +
                                                    subspace_intersection_dim(a, c) +
                                                    subspace_intersection_dim(b, c));
        out.inclusion_exclusion_ok = local == static_cast<long long>(da + db + dc) - pairwise;
        return out;
    };

    std::vector<Trial> trials;
    if (cfg.fixed_state) {
        require_valid(*cfg.fixed_state);
        trials.push_back(evaluate(*cfg.fixed_state));
    } else {
        trials = run_trials<Trial>(cfg.trials, cfg.threads, [&](size_t t) {
            Rng rng = stream_rng(cfg.seed, t);
            return evaluate(sample_uniform_stabilizer(n, 0, rng));
        });
    }

    std::vector<long long> keys;
    size_t sum_local_violations = 0;
    size_t incl_excl_violations = 0;
    for (const Trial &t : trials) {
        keys.push_back(t.delta);
        sum_local_violations += !t.sum_local_ok;
        incl_excl_violations += !t.inclusion_exclusion_ok;
    }
    summarize(report, keys, identity_value);

    BoundParams params;
    params.n_a = cfg.n_a;
    params.n_b = cfg.n_b;
    params.n_c = cfg.n_c;
    report.mean_upper_bound = bound_value(Theorem::GhzTripartiteMean, params).value;
    report.diagnostics["sum_local_dim_violations"] = sum_local_violations;
    report.diagnostics["inclusion_exclusion_violations"] = incl_excl_violations;
    report.pass_flags["mean_bound"] = report.stats.mean <= *report.mean_upper_bound + 3 * report.stats.std_error;
    report.pass_flags["sum_local_dim_lower_bound"] = sum_local_violations == 0;
    report.pass_flags["support"] =
        within_support(report, 0, static_cast<long long>(std::min({cfg.n_a, cfg.n_b, cfg.n_c})));
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run_ghz_multipartite(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "ghz_states";
    size_t m = cfg.m;
    std::vector<size_t> sizes(m, cfg.n);
    Partition parties = Partition::contiguous(sizes);
    size_t total = m * cfg.n;

    // Coarser partitions into m' groups, parties assigned round-robin.
    std::vector<size_t> coarse_counts;
    std::vector<Partition> coarse;
    for (size_t mp = 4; mp < m; mp++) {
        std::vector<size_t> groups(m);
        std::vector<std::string> names;
        for (size_t p = 0; p < m; p++) {
            groups[p] = p % mp;
        }
        for (size_t g = 0; g < mp; g++) {
            names.push_back("G" + std::to_string(g));
        }
        coarse_counts.push_back(mp);
        coarse.push_back(parties.merged(groups, names));
    }

    struct Trial {
        long long delta = 0;
        std::vector<size_t> coarse_delta;
    };
    std::vector<Trial> trials = run_trials<Trial>(cfg.trials, cfg.threads, [&](size_t t) {
        Rng rng = stream_rng(cfg.seed, t);
        StabilizerGroup s = sample_uniform_stabilizer(total, 0, rng);
        Trial out;
        out.delta = static_cast<long long>(ghz_count(s, parties));
        for (const Partition &p : coarse) {
            out.coarse_delta.push_back(ghz_count(s, p));
        }
        return out;
    });

    std::vector<long long> keys;
    for (const Trial &t : trials) {
        keys.push_back(t.delta);
    }
    summarize(report, keys, identity_value);

    double threshold = cfg.epsilon * cfg.n;
    BoundParams params;
    params.n = cfg.n;
    params.m = m;
    params.epsilon = cfg.epsilon;
    size_t over = std::count_if(keys.begin(), keys.end(), [&](long long d) {
        return d > threshold;
    });
    report.tails.push_back(tail_row("all_parties", m, over, report.trials, bound_value(Theorem::GhzMultipartite, params)));
    BoundValue sub_bound = bound_value(Theorem::GhzMultipartiteSubgroups, params);
    for (size_t i = 0; i < coarse.size(); i++) {
        size_t count = std::count_if(trials.begin(), trials.end(), [&](const Trial &t) {
            return t.coarse_delta[i] > threshold;
        });
        report.tails.push_back(tail_row("grouped", coarse_counts[i], count, report.trials, sub_bound));
    }
    report.realized["threshold"] = threshold;
    report.pass_flags["tail_all_parties"] = table_passes(report, "all_parties");
    report.pass_flags["tail_grouped"] = table_passes(report, "grouped");
    report.pass_flags["support"] = within_support(report, 0, static_cast<long long>(cfg.n));
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run_mixed(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "epr_lower_bound";
    double log_n = std::log2(static_cast<double>(cfg.n));
    double requested_n_a = cfg.n + cfg.alpha * log_n;
    size_t n_a = static_cast<size_t>(std::llround(requested_n_a));
    size_t n_b = cfg.n;
    double requested_k = cfg.k ? static_cast<double>(*cfg.k) : cfg.beta * cfg.n;
    size_t k = cfg.k ? *cfg.k : static_cast<size_t>(std::llround(requested_k));
    report.realized = {
        {"n_a_requested", requested_n_a}, {"n_a", n_a}, {"n_b", n_b}, {"k_requested", requested_k}, {"k", k},
    };

    Partition cut = Partition::contiguous({n_a, n_b});
    struct Trial {
        long long value = 0;
        long long raw_twice = 0;
        bool full_rank_agrees = true;
    };
    std::vector<Trial> trials = run_trials<Trial>(cfg.trials, cfg.threads, [&](size_t t) {
        Rng rng = stream_rng(cfg.seed, t);
        StabilizerGroup s = sample_uniform_stabilizer(n_a + n_b, k, rng);
        MixedEntanglement e = mixed_epr_lower_bound(s, cut);
        Trial out;
        out.value = static_cast<long long>(e.lower_bound);
        out.raw_twice = e.raw_twice;
        if (e.exact_full_rank) {
            out.full_rank_agrees = 2 * static_cast<long long>(*e.exact_full_rank) == std::max(0LL, e.raw_twice);
        }
        return out;
    });

    std::vector<long long> keys;
    long long min_raw_twice = 0;
    size_t half_integer_raw = 0;
    size_t full_rank_disagreements = 0;
    for (size_t t = 0; t < trials.size(); t++) {
        keys.push_back(trials[t].value);
        min_raw_twice = t == 0 ? trials[t].raw_twice : std::min(min_raw_twice, trials[t].raw_twice);
        half_integer_raw += trials[t].raw_twice % 2 != 0;
        full_rank_disagreements += !trials[t].full_rank_agrees;
    }
    summarize(report, keys, identity_value);

    // The sandwich in terms of the realized k: (1 - beta/2) n = n - k/2.
    double centre = cfg.n - k / 2.0;
    double n_alpha = std::pow(static_cast<double>(cfg.n), cfg.alpha);
    report.mean_lower_bound = centre - n_alpha / std::exp2(static_cast<double>(k)) - 1.0 / n_alpha;
    report.mean_upper_bound = centre + cfg.alpha / 2 * log_n;

    BoundParams params;
    params.n = cfg.n;
    params.alpha = cfg.alpha;
    params.beta = k / static_cast<double>(cfg.n);
    params.epsilon = cfg.epsilon;
    BoundValue tail = bound_value(Theorem::MixedTail, params);
    size_t outside = std::count_if(keys.begin(), keys.end(), [&](long long e) {
        return e < (1 - cfg.epsilon) * centre || e > (1 + cfg.epsilon) * centre;
    });
    report.tails.push_back(tail_row("two_sided", cfg.epsilon, outside, report.trials, tail));

    report.diagnostics["min_raw_lower_bound"] = min_raw_twice / 2.0;
    report.diagnostics["half_integer_raw_values"] = half_integer_raw;
    report.diagnostics["full_rank_formula_disagreements"] = full_rank_disagreements;
    double se3 = 3 * report.stats.std_error;
    report.pass_flags["sandwich_lower"] = report.stats.mean >= *report.mean_lower_bound - se3;
    report.pass_flags["sandwich_upper"] = report.stats.mean <= *report.mean_upper_bound + se3;
    report.pass_flags["tail_two_sided"] = table_passes(report, "two_sided");
    report.pass_flags["support"] = within_support(report, 0, static_cast<long long>(std::min(n_a, n_b)));
    report.pass_flags["full_rank_formula"] = full_rank_disagreements == 0;
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run_concentration(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "epr_pairs";
    size_t n = cfg.n_a + cfg.n_b;
    Partition cut = Partition::contiguous({cfg.n_a, cfg.n_b});
    // Probe: bipartite entanglement of c|0...0>, 1-Lipschitz in c.
    std::vector<long long> keys = run_trials<long long>(cfg.trials, cfg.threads, [&](size_t t) {
        Rng rng = stream_rng(cfg.seed, t);
        CliffordElement c = sample_uniform_clifford(n, rng);
        return static_cast<long long>(pure_bipartite_entanglement(stabilizer_of_zero_state(c), cut));
    });
    summarize(report, keys, identity_value);

    BoundParams params;
    params.n = n;
    report.realized["delta_grid"] = deltas_or_default(cfg);
    for (double delta : deltas_or_default(cfg)) {
        size_t count = std::count_if(report.samples.begin(), report.samples.end(), [&](double e) {
            return std::abs(e - report.stats.mean) > delta;
        });
        params.delta = delta;
        report.tails.push_back(
            tail_row("two_sided", delta, count, report.trials, bound_value(Theorem::CliffordConcentration, params)));
    }
    report.pass_flags["tail_two_sided"] = table_passes(report, "two_sided");
    report.pass_flags["support"] = within_support(report, 0, static_cast<long long>(std::min(cfg.n_a, cfg.n_b)));
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run_lipschitz(const Config &cfg) {
    Stopwatch clock;
    Report report = start_report(cfg);
    report.histogram_of = "abs_entanglement_difference";
    std::vector<size_t> sizes = cfg.parties.empty() ? std::vector<size_t>(cfg.m, cfg.n) : cfg.parties;
    size_t m = sizes.size();
    size_t n = std::accumulate(sizes.begin(), sizes.end(), size_t{0});
    Partition parties = Partition::contiguous(sizes);
    std::vector<size_t> halves(m);
    for (size_t p = 0; p < m; p++) {
        halves[p] = p < m / 2 ? 0 : 1;
    }
    Partition cut = parties.merged(halves, {"A", "B"});

    struct Trial {
        long long entanglement_gap = 0;
        long long ghz_gap = 0;
        size_t distance = 0;
    };
    std::vector<Trial> trials = run_trials<Trial>(cfg.trials, cfg.threads, [&](size_t t) {
        Rng rng = stream_rng(cfg.seed, t);
        CliffordElement c1 = sample_uniform_clifford(n, rng);
        CliffordElement c2 = c1;
        switch (t % 4) {
            case 0:
                break;
            case 1:
                c2 = sample_uniform_clifford(n, rng);
                break;
            default: {
                // Nearby element: c1 composed with a random Clifford on a few qubits.
                size_t r = 1 + rng() % std::min<size_t>(3, n);
                std::vector<size_t> order(n);
                std::iota(order.begin(), order.end(), size_t{0});
                for (size_t i = 0; i < r; i++) {
                    std::swap(order[i], order[i + rng() % (n - i)]);
                }
                order.resize(r);
                CliffordElement local = embed(sample_uniform_clifford(r, rng), order, n);
                c2 = (rng() & 1) ? compose(c1, local) : compose(local, c1);
                break;
            }
        }
        StabilizerGroup s1 = stabilizer_of_zero_state(c1);
        StabilizerGroup s2 = stabilizer_of_zero_state(c2);
        Trial out;
        out.distance = distance(c1, c2);
        out.entanglement_gap = std::llabs(static_cast<long long>(pure_bipartite_entanglement(s1, cut)) -
                                          static_cast<long long>(pure_bipartite_entanglement(s2, cut)));
        out.ghz_gap = std::llabs(static_cast<long long>(ghz_count(s1, parties)) -
                                 static_cast<long long>(ghz_count(s2, parties)));
        return out;
    });

    std::vector<long long> keys;
    size_t bipartite_violations = 0;
    size_t ghz_violations = 0;
    double max_bipartite_ratio = 0;
    double max_ghz_ratio = 0;
    std::map<long long, size_t> distances;
    for (const Trial &t : trials) {
        keys.push_back(t.entanglement_gap);
        distances[static_cast<long long>(t.distance)]++;
        bipartite_violations += t.entanglement_gap > static_cast<long long>(t.distance);
        ghz_violations += t.ghz_gap > static_cast<long long>(m * t.distance);
        if (t.distance > 0) {
            max_bipartite_ratio = std::max(max_bipartite_ratio, static_cast<double>(t.entanglement_gap) / t.distance);
            max_ghz_ratio = std::max(max_ghz_ratio, static_cast<double>(t.ghz_gap) / (m * t.distance));
        }
    }
    summarize(report, keys, identity_value);
    nlohmann::json dist = nlohmann::json::object();
    for (const auto &[d, count] : distances) {
        dist[std::to_string(d)] = count;
    }
    report.realized = {{"total_qubits", n}, {"parties", sizes}};
    report.diagnostics["distance_histogram"] = dist;
    report.diagnostics["bipartite_violations"] = bipartite_violations;
    report.diagnostics["ghz_violations"] = ghz_violations;
    report.diagnostics["max_bipartite_ratio"] = max_bipartite_ratio;
    report.diagnostics["max_ghz_ratio_over_m"] = max_ghz_ratio;
    report.pass_flags["bipartite_1_lipschitz"] = bipartite_violations == 0;
    report.pass_flags["ghz_m_lipschitz"] = ghz_violations == 0;
    report.runtime_seconds = clock.seconds();
    return report;
}

Report run(const Config &cfg) {
    switch (cfg.kind) {
        case Kind::PureBipartite:
            return run_pure_bipartite(cfg);
        case Kind::Purity:
            return run_purity(cfg);
        case Kind::GhzTripartite:
            return run_ghz_tripartite(cfg);
        case Kind::GhzMultipartite:
            return run_ghz_multipartite(cfg);
        case Kind::MixedBipartite:
            return run_mixed(cfg);
        case Kind::Concentration:
            return run_concentration(cfg);
        case Kind::Lipschitz:
            return run_lipschitz(cfg);
    }
    throw ConfigError("unknown experiment kind");
}

std::string_view theorem_name(Theorem t) {
    switch (t) {
        case Theorem::CliffordConcentration:
            return "clifford-concentration";
        case Theorem::PureTail:
            return "pure-tail";
        case Theorem::PureEpsilon:
            return "pure-epsilon";
        case Theorem::HighPureMean:
            return "pure-mean";
        case Theorem::PurityExact:
            return "purity";
        case Theorem::GhzTripartiteMean:
            return "ghz3-mean";
        case Theorem::GhzTripartiteTail:
            return "ghz3-tail";
        case Theorem::GhzMultipartite:
            return "ghz-multi";
        case Theorem::GhzMultipartiteSubgroups:
            return "ghz-multi-grouped";
        case Theorem::MixedMeanLower:
            return "mixed-mean-lower";
        case Theorem::MixedMeanUpper:
            return "mixed-mean-upper";
        case Theorem::MixedTail:
            return "mixed-tail";
    }
    return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(Theorem::MixedTail); i++) {
        Theorem t = static_cast<Theorem>(i);
        if (theorem_name(t) == name) {
            return t;
        }
    }
    return std::nullopt;
}

BoundValue bound_value(Theorem theorem, const BoundParams &p) {
    BoundValue out;
    auto require = [&](bool ok, const std::string &why) {
        if (!ok) {
            out.applicable = false;
            out.note += out.note.empty() ? why : "; " + why;
        }
    };
    switch (theorem) {
        case Theorem::CliffordConcentration:
            require(p.delta >= 0, "delta must be nonnegative");
            require(p.n >= 1, "n must be positive");
            out.value = 2 * std::exp2(-p.delta * p.delta / (64 * p.n));
            break;
        case Theorem::PureTail:
            require(p.n_a >= p.n_b, "requires n_A >= n_B");
            out.value = std::exp2(-p.delta * p.delta / (64 * (p.n_a + p.n_b)));
            break;
        case Theorem::PureEpsilon: {
            require(p.epsilon > 0, "epsilon must be positive");
            require(p.n >= 2 / p.epsilon, "requires n >= 2/epsilon");
            double shape = 2 * p.n / (2 * p.n + p.alpha * std::log2(p.n));
            out.value = std::exp2(-p.n * p.epsilon * p.epsilon / 512 * shape);
            out.threshold = p.n * (1 - p.epsilon);
            break;
        }
        case Theorem::HighPureMean:
            require(p.n_a >= p.n_b, "requires n_A >= n_B");
            out.value = p.n_b - std::exp2(p.n_b - p.n_a);
            break;
        case Theorem::PurityExact:
            out.value = (std::exp2(p.n_a) + std::exp2(p.n_b)) / (std::exp2(p.n_a + p.n_b) + 1);
            break;
        case Theorem::GhzTripartiteMean:
            require(p.n_a + p.n_b >= p.n_c && p.n_b + p.n_c >= p.n_a && p.n_a + p.n_c >= p.n_b,
                    "requires the triangle conditions on n_A, n_B, n_C");
            out.value = p.n_c / std::exp2(p.n_a + p.n_b - p.n_c) + p.n_b / std::exp2(p.n_a + p.n_c - p.n_b) +
                        p.n_a / std::exp2(p.n_b + p.n_c - p.n_a);
            break;
        case Theorem::GhzTripartiteTail: {
            // Sizes n_A = alpha n, n_B = beta n, n_C = n.
            require(p.alpha > 1 && p.beta > 1, "requires alpha, beta > 1");
            require(p.alpha + 1 > p.beta && p.beta + 1 > p.alpha, "requires |alpha - beta| < 1");
            double spread = std::max(p.alpha - p.beta + 1, p.beta - p.alpha + 1);
            double scale = p.alpha + p.beta + 1;
            out.threshold = scale * p.n / std::exp2(spread * p.n) + p.epsilon * p.n;
            out.value = std::exp2(-p.n * p.epsilon * p.epsilon / 64 / (9 * scale));
            break;
        }
        case Theorem::GhzMultipartite: {
            require(p.m >= 4, "requires m >= 4");
            double half = std::floor(p.m / 2);
            double shrink = 1 - 1 / half;
            out.value =
                std::exp2(-half * p.n * p.epsilon * p.epsilon / 512 * shrink * shrink * (1 - 1 / p.m));
            out.threshold = p.epsilon * p.n;
            break;
        }
        case Theorem::GhzMultipartiteSubgroups:
            require(p.m >= 5, "requires m >= 5 so that 4 <= m' < m exists");
            out.value = std::exp2(-p.n * p.epsilon * p.epsilon / 64 / p.m);
            out.threshold = p.epsilon * p.n;
            break;
        case Theorem::MixedMeanLower: {
            require(p.beta > 0 && p.beta <= 2, "requires 0 < beta <= 2");
            double k = p.beta * p.n;
            double n_alpha = std::pow(p.n, p.alpha);
            out.value = (1 - p.beta / 2) * p.n - n_alpha / std::exp2(k) - 1 / n_alpha;
            break;
        }
        case Theorem::MixedMeanUpper:
            require(p.beta > 0 && p.beta <= 2, "requires 0 < beta <= 2");
            out.value = (1 - p.beta / 2) * p.n + p.alpha / 2 * std::log2(p.n);
            break;
        case Theorem::MixedTail: {
            require(p.beta > 0 && p.beta <= 2, "requires 0 < beta <= 2");
            require(p.epsilon > 0, "epsilon must be positive");
            double gap = 1 - p.beta / 2;
            double log_n = std::log2(p.n);
            if (p.beta > 0 && gap > 0 && p.epsilon > 0) {
                double r = 4 / (p.epsilon * gap);
                require(p.n >= std::max(r, std::log2(r) / (2 * p.beta)),
                        "requires n >= max(4/(eps(1-beta/2)), log(4/(eps(1-beta/2)))/(2 beta))");
                if (log_n > 0) {
                    require(p.n / log_n >= std::max((p.alpha - 1) / (2 * p.beta), p.alpha / (p.epsilon * gap)),
                            "requires n/log n >= max((alpha-1)/(2 beta), alpha/(eps(1-beta/2)))");
                }
            } else {
                require(false, "requires 1 - beta/2 > 0");
            }
            double shape = 2 * p.n / (2 * p.n + p.alpha * log_n);
            out.value = 2 * std::exp2(-p.n * p.epsilon * p.epsilon * gap * gap / (25 * 128) * shape);
            break;
        }
    }
    return out;
}

}  // namespace stabent::experiments
