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

#include <cmath>

#include "doctest.h"
#include "stabent/errors.h"
#include "stabent/experiments.h"

using namespace stabent;
using namespace stabent::experiments;

namespace {

Config make(Kind kind, size_t trials = 200, uint64_t seed = 5) {
    Config cfg;
    cfg.kind = kind;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

size_t histogram_mass(const Report &r) {
    size_t total = 0;
    for (const auto &[k, c] : r.histogram) {
        total += c;
    }
    return total;
}

void check_report_invariants(const Report &r) {
    CHECK(histogram_mass(r) == r.trials);
    CHECK(r.samples.size() == r.trials);
    for (const TailRow &row : r.tails) {
        CHECK(row.empirical >= 0);
        CHECK(row.empirical <= 1);
        CHECK(row.pass == (row.empirical <= row.bound));
        CHECK(row.wilson_upper >= row.empirical);
    }
    Statistics direct = statistics_from_samples(r.samples);
    CHECK(std::abs(direct.mean - r.stats.mean) < 1e-9);
    CHECK(std::abs(direct.variance - r.stats.variance) < 1e-9);
    CHECK(std::abs(direct.std_error - r.stats.std_error) < 1e-12);
}

// Second implementation of the bounds, written from the displayed formulas.
double pure_epsilon_bound(double n, double eps, double alpha) {
    return std::pow(2.0, -n * eps * eps / 512.0 * (2 * n / (2 * n + alpha * std::log2(n))));
}

double ghz_multi_bound(double m, double n, double eps) {
    double h = std::floor(m / 2);
    return std::pow(2.0, -h * n * eps * eps / 512.0 * std::pow(1 - 1 / h, 2) * (1 - 1 / m));
}

double ghz3_bound(double a, double b, double c) {
    return c / std::pow(2.0, a + b - c) + b / std::pow(2.0, a + c - b) + a / std::pow(2.0, b + c - a);
}

}  // namespace

TEST_CASE("exhaustive two-qubit census") {
    Config cfg = make(Kind::PureBipartite);
    cfg.n_a = cfg.n_b = 1;
    cfg.exhaustive = true;
    Report r = run(cfg);
    CHECK(r.trials == 60);
    CHECK(r.histogram.at(0) == 36);
    CHECK(r.histogram.at(1) == 24);
    CHECK(r.stats.mean == doctest::Approx(0.4));
    check_report_invariants(r);

    cfg.kind = Kind::Purity;
    Report p = run(cfg);
    CHECK(p.pass_flags.at("exact_match"));
    CHECK(p.diagnostics["mean_purity_rational"] == "4/5");
    CHECK(p.stats.mean == doctest::Approx(0.8));
}

TEST_CASE("purity at 8+8 matches the exact average") {
    Config cfg = make(Kind::Purity, 20000);
    cfg.n_a = cfg.n_b = 8;
    cfg.threads = 4;
    Report r = run(cfg);
    CHECK(*r.exact_mean == doctest::Approx(512.0 / 65537.0));
    CHECK(r.pass_flags.at("mean_within_3se"));
    for (double p : r.samples) {
        CHECK(p > 0);
        CHECK(p <= 1);
    }
}

TEST_CASE("pure bipartite mean and support") {
    Config cfg = make(Kind::PureBipartite, 500);
    cfg.n_a = 6;
    cfg.n_b = 4;
    Report r = run(cfg);
    CHECK(*r.mean_lower_bound == doctest::Approx(4 - 0.25));
    CHECK(r.pass_flags.at("mean_bound"));
    CHECK(r.pass_flags.at("support"));
    CHECK(r.tails.size() == 6);
    check_report_invariants(r);
}

TEST_CASE("tripartite GHZ runs") {
    Config cfg = make(Kind::GhzTripartite, 300);
    cfg.n_a = cfg.n_b = cfg.n_c = 1;
    Report r = run(cfg);
    CHECK(r.histogram.begin()->first >= 0);
    CHECK(r.histogram.rbegin()->first <= 1);
    CHECK(r.stats.mean <= 3);
    CHECK(r.pass_flags.at("sum_local_dim_lower_bound"));
    check_report_invariants(r);

    cfg.fixed_state = StabilizerGroup::from_strings({"XXX", "ZZI", "IZZ"});
    Report fixed = run(cfg);
    CHECK(fixed.trials == 1);
    CHECK(fixed.histogram.at(1) == 1);

    Config bad = make(Kind::GhzTripartite);
    bad.n_a = 1;
    bad.n_b = 1;
    bad.n_c = 4;
    CHECK_THROWS_AS(run(bad), ConfigError);
}

TEST_CASE("multipartite GHZ tails") {
    Config cfg = make(Kind::GhzMultipartite, 2000);
    cfg.m = 4;
    cfg.n = 6;
    cfg.epsilon = 0.5;
    cfg.threads = 4;
    Report r = run(cfg);
    CHECK(r.pass_flags.at("tail_all_parties"));
    CHECK(r.pass_flags.at("support"));
    REQUIRE(r.tails.size() == 1);
    CHECK(r.tails[0].bound == doctest::Approx(ghz_multi_bound(4, 6, 0.5)));
    check_report_invariants(r);

    cfg.m = 6;
    cfg.n = 2;
    cfg.trials = 200;
    Report grouped = run(cfg);
    CHECK(grouped.tails.size() == 3);

    cfg.m = 3;
    CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("mixed runs") {
    Config pure = make(Kind::PureBipartite, 300);
    pure.n_a = pure.n_b = 6;
    Config mixed = make(Kind::MixedBipartite, 300);
    mixed.n = 6;
    mixed.beta = 0;
    Report a = run(pure);
    Report b = run(mixed);
    CHECK(a.histogram == b.histogram);

    mixed.k = 12;
    Report full = run(mixed);
    CHECK(full.histogram.size() == 1);
    CHECK(full.histogram.at(0) == 300);

    Config shaped = make(Kind::MixedBipartite, 100);
    shaped.n = 8;
    shaped.alpha = 1;
    shaped.beta = 0.5;
    Report r = run(shaped);
    CHECK(r.realized["n_a"] == 11);
    CHECK(r.realized["k"] == 4);
    CHECK(r.pass_flags.at("support"));
    check_report_invariants(r);

    shaped.beta = 2.5;
    CHECK_THROWS_AS(run(shaped), ConfigError);
    shaped.beta = -0.1;
    CHECK_THROWS_AS(run(shaped), ConfigError);
}

TEST_CASE("concentration agrees with the pure-state ensemble") {
    Config conc = make(Kind::Concentration, 2000);
    conc.n_a = conc.n_b = 5;
    conc.delta_grid = {0, 1, 2};
    Report c = run(conc);
    CHECK(c.tails[0].bound == doctest::Approx(2));
    CHECK(c.pass_flags.at("tail_two_sided"));
    check_report_invariants(c);

    Config pure = make(Kind::PureBipartite, 2000);
    pure.n_a = pure.n_b = 5;
    Report p = run(pure);
    double se = std::sqrt(c.stats.std_error * c.stats.std_error + p.stats.std_error * p.stats.std_error);
    CHECK(std::abs(c.stats.mean - p.stats.mean) <= 4 * se);
}

TEST_CASE("Lipschitz run") {
    Config cfg = make(Kind::Lipschitz, 1000);
    cfg.parties = {4, 4, 4};
    cfg.threads = 4;
    Report r = run(cfg);
    CHECK(r.pass_flags.at("bipartite_1_lipschitz"));
    CHECK(r.pass_flags.at("ghz_m_lipschitz"));
    CHECK(r.diagnostics["max_bipartite_ratio"].get<double>() <= 1);
    // Identical pairs give zero on both sides.
    CHECK(r.samples[0] == 0);
    CHECK(r.samples[4] == 0);
}

TEST_CASE("reports do not depend on the worker count") {
    Config cfg = make(Kind::GhzTripartite, 400, 99);
    cfg.n_a = cfg.n_b = cfg.n_c = 3;
    Report one = run(cfg);
    cfg.threads = 7;
    Report many = run(cfg);
    cfg.threads = 1;
    nlohmann::json a = to_json(one, false), b = to_json(many, false);
    a["config"].erase("threads");
    b["config"].erase("threads");
    CHECK(a == b);
    CHECK(to_csv(one) == to_csv(many));
    CHECK(to_json(run(cfg), false) == to_json(one, false));
}

TEST_CASE("report serialization") {
    Config cfg = make(Kind::PureBipartite, 50);
    cfg.n_a = cfg.n_b = 3;
    Report r = run(cfg);
    nlohmann::json j = to_json(r);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["note"].get<std::string>().find("base 2") != std::string::npos);
    CHECK(j.contains("timing"));
    CHECK_FALSE(to_json(r, false).contains("timing"));
    CHECK(j["config"]["seed"] == 5);
    // Pass flags are reproducible from the stored tail rows.
    bool tails_ok = true;
    for (const auto &row : j["tails"]) {
        if (row["table"] == "mean_deviation" && row["applicable"]) {
            tails_ok = tails_ok && row["empirical"].get<double>() <= row["bound"].get<double>();
        }
    }
    CHECK(j["pass_flags"]["tail_mean_deviation"] == tails_ok);
    std::string csv = to_csv(r);
    CHECK(csv.find("table,parameter,count,empirical,wilson_upper,bound,applicable,pass\n") != std::string::npos);
    CHECK(csv.find("histogram:epr_pairs,") != std::string::npos);
}

TEST_CASE("statistics helpers") {
    std::map<long long, size_t> h = {{0, 2}, {2, 2}};
    Statistics s = statistics_from_histogram(h, [](long long k) {
        return static_cast<double>(k);
    });
    Statistics d = statistics_from_samples({0, 0, 2, 2});
    CHECK(s.mean == doctest::Approx(1));
    CHECK(s.variance == doctest::Approx(4.0 / 3));
    CHECK(s.std_error == doctest::Approx(d.std_error));
    CHECK(wilson_upper(0, 100) > 0);
    CHECK(wilson_upper(100, 100) == doctest::Approx(1));
    CHECK(wilson_upper(5, 100) > 0.05);
}

TEST_CASE("bound values") {
    BoundParams p;
    p.delta = 0;
    p.n = 64;
    CHECK(bound_value(Theorem::CliffordConcentration, p).value == doctest::Approx(2));

    BoundParams eps;
    eps.n = 128;
    eps.epsilon = 0.25;
    eps.alpha = 0;
    BoundValue pure = bound_value(Theorem::PureEpsilon, eps);
    CHECK(pure.applicable);
    CHECK(pure.value == doctest::Approx(std::pow(2.0, -128 * 0.0625 / 512)));
    CHECK(pure.value == doctest::Approx(pure_epsilon_bound(128, 0.25, 0)));
    eps.n = 4;
    CHECK_FALSE(bound_value(Theorem::PureEpsilon, eps).applicable);

    BoundParams three;
    three.n_a = three.n_b = three.n_c = 8;
    CHECK(bound_value(Theorem::GhzTripartiteMean, three).value == doctest::Approx(0.09375));
    three.n_a = 5;
    three.n_b = 7;
    three.n_c = 9;
    CHECK(bound_value(Theorem::GhzTripartiteMean, three).value == doctest::Approx(ghz3_bound(5, 7, 9)));

    BoundParams multi;
    multi.m = 4;
    multi.n = 6;
    multi.epsilon = 0.5;
    CHECK(bound_value(Theorem::GhzMultipartite, multi).value == doctest::Approx(ghz_multi_bound(4, 6, 0.5)));
    CHECK_FALSE(bound_value(Theorem::GhzMultipartiteSubgroups, multi).applicable);

    BoundParams high;
    high.n_a = high.n_b = 10;
    CHECK(bound_value(Theorem::HighPureMean, high).value == doctest::Approx(9));
    CHECK(bound_value(Theorem::PurityExact, high).value == doctest::Approx(2048.0 / 1048577.0));

    BoundParams mixed;
    mixed.n = 16;
    mixed.beta = 1;
    CHECK(bound_value(Theorem::MixedMeanLower, mixed).value == doctest::Approx(8 - std::pow(2.0, -16) - 1));
    CHECK(bound_value(Theorem::MixedMeanUpper, mixed).value == doctest::Approx(8));
    mixed.beta = 0;
    CHECK_FALSE(bound_value(Theorem::MixedMeanLower, mixed).applicable);

    for (int t = 0; t <= static_cast<int>(Theorem::MixedTail); t++) {
        Theorem th = static_cast<Theorem>(t);
        CHECK(parse_theorem(theorem_name(th)) == th);
    }
    CHECK_FALSE(parse_theorem("nope").has_value());
    CHECK(parse_kind("mixed-bipartite") == Kind::MixedBipartite);
}

TEST_CASE("config validation") {
    Config cfg = make(Kind::PureBipartite, 0);
    cfg.n_a = cfg.n_b = 2;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.trials = 10;
    cfg.n_b = 0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.n_b = 5;
    cfg.exhaustive = true;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    Config lip = make(Kind::Lipschitz);
    lip.parties = {2, 2};
    CHECK_THROWS_AS(validate(lip), ConfigError);
}
