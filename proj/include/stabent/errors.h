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

#ifndef STABENT_ERRORS_H
#define STABENT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabent {

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t line, size_t column)
        : std::invalid_argument(format(message, line, column)), line_(line), column_(column) {
    }

    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }

   private:
    static std::string format(const std::string &message, size_t line, size_t column) {
        if (line == 0) {
            return message;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    size_t line_;
    size_t column_;
};

/// Input data that parses but violates a structural invariant (e.g. a
/// non-commuting stabilizer generator set).
class ValidityError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked for an instance above its size cap.
class CapacityError : public std::length_error {
    using std::length_error::length_error;
};

/// Wrong number of parties for the requested quantity.
class ArityError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent experiment parameters.
class ConfigError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace stabent

#endif
