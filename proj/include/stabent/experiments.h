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

#ifndef STABENT_EXPERIMENTS_H
#define STABENT_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stabent/stabilizer.h"

namespace stabent::experiments {

inline constexpr int kSchemaVersion = 1;

enum class Kind {
    PureBipartite,
    Purity,
    GhzTripartite,
    GhzMultipartite,
    MixedBipartite,
    Concentration,
    Lipschitz,
};

std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

struct Config {
    Kind kind = Kind::PureBipartite;
    size_t n_a = 0;
    size_t n_b = 0;
    size_t n_c = 0;
    /// Per-party size for ghz-multipartite; base size n for mixed-bipartite.
    size_t n = 0;
    /// Party count for ghz-multipartite and lipschitz.
    size_t m = 0;
    /// Explicit party sizes (lipschitz); overrides m equal parties of size n.
    std::vector<size_t> parties;
    /// Explicit code log-rank for mixed-bipartite; otherwise round(beta*n).
    std::optional<size_t> k;
    size_t trials = 1000;
    uint64_t seed = 0;
    unsigned threads = 1;
    std::vector<double> delta_grid;
    double epsilon = 0.5;
    double alpha = 0.0;
    double beta = 1.0;
    /// Enumerate every state instead of sampling (n_a + n_b <= 3).
    bool exhaustive = false;
    /// Evaluate this state instead of sampling (ghz-tripartite).
    std::optional<StabilizerGroup> fixed_state;
};

/// Checks the config for its kind; throws ConfigError.
void validate(const Config &cfg);

nlohmann::json to_json(const Config &cfg);

struct Statistics {
    double mean = 0;
    double variance = 0;
    double std_error = 0;
};

/// Sample mean, unbiased variance and standard error of the mean from a
/// histogram, mapping each integer key through `value_of`.
Statistics statistics_from_histogram(const std::map<long long, size_t> &histogram, double (*value_of)(long long));
Statistics statistics_from_samples(const std::vector<double> &samples);

/// One row of an empirical-probability-vs-analytic-bound table.
struct TailRow {
    std::string table;
    double parameter = 0;
    size_t count = 0;
    double empirical = 0;
    double wilson_upper = 0;
    double bound = 0;
    bool applicable = true;
    bool pass = true;
};

/// Upper end of the Wilson score interval at z standard deviations.
double wilson_upper(size_t successes, size_t trials, double z = 3.0);

struct Report {
    Config config;
    nlohmann::json realized = nlohmann::json::object();
    size_t trials = 0;
    /// What the histogram keys count (e.g. "epr_pairs").
    std::string histogram_of;
    std::map<long long, size_t> histogram;
    /// Per-trial values in trial order; the histogram keys mapped through
    /// the report's value transform.
    std::vector<double> samples;
    Statistics stats;
    std::optional<double> mean_lower_bound;
    std::optional<double> mean_upper_bound;
    std::optional<double> exact_mean;
    std::vector<TailRow> tails;
    std::map<std::string, bool> pass_flags;
    nlohmann::json diagnostics = nlohmann::json::object();
    double runtime_seconds = 0;

    bool passed() const;
};

/// Full report. Timing is the only field that differs between replays;
/// it is left out when include_timing is false.
nlohmann::json to_json(const Report &report, bool include_timing = true);
/// Tail tables and histogram as CSV.
std::string to_csv(const Report &report);

Report run_pure_bipartite(const Config &cfg);
Report run_purity(const Config &cfg);
Report run_ghz_tripartite(const Config &cfg);
Report run_ghz_multipartite(const Config &cfg);
Report run_mixed(const Config &cfg);
Report run_concentration(const Config &cfg);
Report run_lipschitz(const Config &cfg);

/// Dispatches on cfg.kind.
Report run(const Config &cfg);

enum class Theorem {
    CliffordConcentration,
    PureTail,
    PureEpsilon,
    HighPureMean,
    PurityExact,
    GhzTripartiteMean,
    GhzTripartiteTail,
    GhzMultipartite,
    GhzMultipartiteSubgroups,
    MixedMeanLower,
    MixedMeanUpper,
    MixedTail,
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

/// Parameters shared by the bound formulas; each theorem reads the ones it
/// needs. All exp and log are base 2.
struct BoundParams {
    double delta = 0;
    double n = 0;
    double n_a = 0;
    double n_b = 0;
    double n_c = 0;
    double epsilon = 0;
    double alpha = 0;
    double beta = 0;
    double m = 0;
};

struct BoundValue {
    double value = 0;
    /// False when the parameters are outside the theorem's hypotheses; the
    /// value is still computed.
    bool applicable = true;
    std::string note;
    /// Deviation threshold the probability bound refers to, where the
    /// theorem has one that depends on the parameters.
    std::optional<double> threshold;
};

BoundValue bound_value(Theorem theorem, const BoundParams &params);

}  // namespace stabent::experiments

#endif
