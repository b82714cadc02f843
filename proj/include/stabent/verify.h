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

#ifndef STABENT_VERIFY_H
#define STABENT_VERIFY_H

// Cross-checks of the elimination-based routines against the brute-force
// oracle on small random and exhaustive instances.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabent/oracle.h"
#include "stabent/stabilizer.h"

namespace stabent::verify {

struct Check {
    std::string name;
    bool pass = true;
    size_t cases = 0;
    std::string detail;
};

// The quantities under test. Tests swap these out to confirm that a broken
// formula is caught.
struct Hooks {
    std::function<size_t(const StabilizerGroup &, const Partition &)> epr;
    std::function<size_t(const StabilizerGroup &, const Partition &)> ghz;
    std::function<size_t(const StabilizerGroup &, std::span<const size_t>)> log_rank;
};

Hooks default_hooks();

struct Options {
    uint64_t seed = 1;
    /// Random instances per randomized check.
    size_t cases = 200;
    size_t max_qubits = 8;
    oracle::Limits limits;
    Hooks hooks = default_hooks();
};

std::vector<Check> run_all(const Options &options = {});

nlohmann::json to_json(const std::vector<Check> &checks);

}  // namespace stabent::verify

#endif
