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

#ifndef RANDOMIZER_TASKS_HPP
#define RANDOMIZER_TASKS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "randomizer/config.hpp"
#include "randomizer/report.hpp"

namespace randomizer {

/// Outcome of one task: the report body, the overall verdict, and (for
/// sweeps) the CSV table.
struct TaskResult {
    Json report;
    bool pass = false;
    std::optional<std::string> csv;
};

/// Task names accepted in the `task` field.
std::span<const std::string_view> task_names();
/// Every key a config document may carry.
std::span<const std::string_view> config_keys();

/// Runs the task named by doc["task"]. Throws ConfigError for malformed or
/// infeasible configurations (including net mode above the dimension guard).
TaskResult run_task(const ConfigDocument &doc);

/// Full report document: {"manifest": ..., "report": ...}. The manifest's
/// config lists the effective key/value pairs, omitting execution-only keys
/// (threads, out, format), so reruns with any thread count match.
Json make_document(const std::string &command, const ConfigDocument &doc, const TaskResult &result,
                   const std::string &started, const std::string &finished);

struct InequalityBatch {
    size_t matrices = 0;
    size_t interpolation_failures = 0;
    size_t hoelder_failures = 0;
    size_t reverse_triangle_failures = 0;
    size_t density_samples = 0;
    size_t density_literal_holds = 0;
    size_t density_alternative_holds = 0;
    size_t density_disagreements = 0;

    bool pass() const {
        return interpolation_failures == 0 && hoelder_failures == 0 && reverse_triangle_failures == 0;
    }
};

/// Norm-inequality oracles over `count` seeded random matrices with
/// d in {2, 4, 8, 16}, alternating real and complex Gaussian entries.
InequalityBatch run_inequality_batch(size_t count, Seed seed, size_t threads = 1);

}  // namespace randomizer

#endif
