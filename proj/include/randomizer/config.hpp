// Copyright 2026 The Randomizer Authors
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

#ifndef RANDOMIZER_CONFIG_HPP
#define RANDOMIZER_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "randomizer/experiments.hpp"

namespace randomizer {

/// Malformed configuration. `line` is 0 for values that came from flags.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(const std::string &message, std::string field, size_t line);
    const std::string &field() const {
        return field_;
    }
    size_t line() const {
        return line_;
    }

   private:
    std::string field_;
    size_t line_;
};

/// Flat key/value document:
///
///     # comment
///     task = sweep
///     d = 8
///     epsilon = 0.8
///
/// Keys are [a-z0-9_]+; later duplicates are an error. Values run to the end
/// of the line (trailing comments and whitespace stripped).
class ConfigDocument {
   public:
    struct Entry {
        std::string value;
        size_t line = 0;
    };

    static ConfigDocument parse(std::string_view text);
    static ConfigDocument load(const std::string &path);

    /// Sets or replaces a key (flag overrides use line 0).
    void set(const std::string &key, std::string value);
    bool has(const std::string &key) const;
    const std::map<std::string, Entry> &entries() const {
        return entries_;
    }

    std::optional<std::string> get_string(const std::string &key) const;
    std::string get_string(const std::string &key, const std::string &fallback) const;
    size_t get_size(const std::string &key, size_t fallback) const;
    uint64_t get_u64(const std::string &key, uint64_t fallback) const;
    double get_double(const std::string &key, double fallback) const;
    PExponent get_exponent(const std::string &key, PExponent fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;

    /// Throws ConfigError naming the first key not in `allowed`.
    void require_known_keys(std::span<const std::string_view> allowed) const;

    /// Serialized form, keys sorted, one "key = value" per line.
    std::string to_text() const;

   private:
    [[noreturn]] void fail(const std::string &key, const std::string &what) const;
    std::map<std::string, Entry> entries_;
};

/// Reads d, m, m_min, m_max, p, r, epsilon, trials, states, seed, stream,
/// grid_ratio, mode, source, budget, full_grid and threads.
ExperimentConfig to_experiment_config(const ConfigDocument &doc);

}  // namespace randomizer

#endif
