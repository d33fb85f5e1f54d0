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

#include "randomizer/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace randomizer {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool valid_key(std::string_view key) {
    return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::string location(const std::string &field, size_t line) {
    return line == 0 ? "flag --" + field : "line " + std::to_string(line) + ", field '" + field + "'";
}

}  // namespace

ConfigError::ConfigError(const std::string &message, std::string field, size_t line)
    : std::runtime_error(message), field_(std::move(field)), line_(line) {
}

ConfigDocument ConfigDocument::parse(std::string_view text) {
    ConfigDocument doc;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        line_no++;

        size_t hash = raw.find('#');
        std::string_view line = trim(raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'", "", line_no);
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (!valid_key(key)) {
            throw ConfigError("config line " + std::to_string(line_no) + ": invalid key '" + key + "'", key, line_no);
        }
        if (value.empty()) {
            throw ConfigError(location(key, line_no) + ": empty value", key, line_no);
        }
        if (doc.entries_.count(key) != 0) {
            throw ConfigError(location(key, line_no) + ": duplicate key (first set on line " +
                                  std::to_string(doc.entries_[key].line) + ")",
                              key, line_no);
        }
        doc.entries_[key] = Entry{value, line_no};
    }
    return doc;
}

ConfigDocument ConfigDocument::load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'", "", 0);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void ConfigDocument::set(const std::string &key, std::string value) {
    entries_[key] = Entry{std::move(value), 0};
}

bool ConfigDocument::has(const std::string &key) const {
    return entries_.count(key) != 0;
}

void ConfigDocument::fail(const std::string &key, const std::string &what) const {
    size_t line = has(key) ? entries_.at(key).line : 0;
    throw ConfigError(location(key, line) + ": " + what, key, line);
}

std::optional<std::string> ConfigDocument::get_string(const std::string &key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second.value;
}

std::string ConfigDocument::get_string(const std::string &key, const std::string &fallback) const {
    return get_string(key).value_or(fallback);
}

uint64_t ConfigDocument::get_u64(const std::string &key, uint64_t fallback) const {
    auto text = get_string(key);
    if (!text) {
        return fallback;
    }
    uint64_t value = 0;
    auto [end, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
    if (ec != std::errc{} || end != text->data() + text->size()) {
        fail(key, "expected a non-negative integer, got '" + *text + "'");
    }
    return value;
}

size_t ConfigDocument::get_size(const std::string &key, size_t fallback) const {
    return static_cast<size_t>(get_u64(key, fallback));
}

double ConfigDocument::get_double(const std::string &key, double fallback) const {
    auto text = get_string(key);
    if (!text) {
        return fallback;
    }
    double value = 0;
    auto [end, ec] = std::from_chars(text->data(), text->data() + text->size(), value);
    if (ec != std::errc{} || end != text->data() + text->size() || !std::isfinite(value)) {
        fail(key, "expected a finite number, got '" + *text + "'");
    }
    return value;
}

PExponent ConfigDocument::get_exponent(const std::string &key, PExponent fallback) const {
    auto text = get_string(key);
    if (!text) {
        return fallback;
    }
    try {
        return PExponent::parse(*text);
    } catch (const std::invalid_argument &) {
        fail(key, "expected a number >= 1 or 'inf', got '" + *text + "'");
    }
}

bool ConfigDocument::get_bool(const std::string &key, bool fallback) const {
    auto text = get_string(key);
    if (!text) {
        return fallback;
    }
    if (*text == "true" || *text == "1" || *text == "yes") {
        return true;
    }
    if (*text == "false" || *text == "0" || *text == "no") {
        return false;
    }
    fail(key, "expected true or false, got '" + *text + "'");
}

void ConfigDocument::require_known_keys(std::span<const std::string_view> allowed) const {
    for (const auto &[key, entry] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(key, "unknown field");
        }
    }
}

std::string ConfigDocument::to_text() const {
    std::string out;
    for (const auto &[key, entry] : entries_) {
        out += key + " = " + entry.value + "\n";
    }
    return out;
}

ExperimentConfig to_experiment_config(const ConfigDocument &doc) {
    ExperimentConfig cfg;
    cfg.d = doc.get_size("d", cfg.d);
    cfg.m = doc.get_size("m", cfg.m);
    cfg.m_min = doc.get_size("m_min", 0);
    cfg.m_max = doc.get_size("m_max", 0);
    cfg.p = doc.get_exponent("p", cfg.p);
    if (doc.has("r")) {
        cfg.r = doc.get_exponent("r", cfg.r);
    } else if (!cfg.p.is_infinite()) {
        cfg.r = default_companion(cfg.p);
    }
    cfg.epsilon = doc.get_double("epsilon", cfg.epsilon);
    cfg.trials = doc.get_size("trials", cfg.trials);
    cfg.states_per_trial = doc.get_size("states", cfg.states_per_trial);
    cfg.seed.value = doc.get_u64("seed", 0);
    cfg.seed.stream = doc.get_u64("stream", 0);
    cfg.grid_ratio = doc.get_double("grid_ratio", cfg.grid_ratio);
    cfg.net_budget = doc.get_size("budget", cfg.net_budget);
    cfg.full_grid = doc.get_bool("full_grid", cfg.full_grid);
    cfg.threads = doc.get_size("threads", cfg.threads);

    std::string mode = doc.get_string("mode", "sample");
    if (mode == "net") {
        cfg.mode = EvaluationMode::net_certify;
    } else if (mode != "sample") {
        throw ConfigError(location("mode", doc.has("mode") ? doc.entries().at("mode").line : 0) +
                              ": expected 'net' or 'sample', got '" + mode + "'",
                          "mode", doc.has("mode") ? doc.entries().at("mode").line : 0);
    }
    std::string source = doc.get_string("source", "haar");
    if (source == "pauli") {
        cfg.source = EnsembleSource::pauli_fixture;
    } else if (source != "haar") {
        throw ConfigError(location("source", doc.has("source") ? doc.entries().at("source").line : 0) +
                              ": expected 'haar' or 'pauli', got '" + source + "'",
                          "source", doc.has("source") ? doc.entries().at("source").line : 0);
    }
    return cfg;
}

}  // namespace randomizer
