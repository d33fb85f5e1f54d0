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

#ifndef RANDOMIZER_REPORT_HPP
#define RANDOMIZER_REPORT_HPP

#include <string>

#include "json.hpp"
#include "randomizer/experiments.hpp"

namespace randomizer {

using Json = nlohmann::ordered_json;

inline constexpr const char *kToolVersion = "0.1.0";

/// JSON text with two-space indentation, LF line endings and every
/// floating-point value printed with 17 significant digits. Non-finite
/// floats become null.
std::string dump_json(const Json &value);

/// Removes manifest.started and manifest.finished, the only fields allowed
/// to differ between reruns of the same manifest.
Json without_timestamps(Json document);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Formats a double with 17 significant digits.
std::string format_double(double value);

Json to_json(const Seed &seed);
Json to_json(PExponent p);
Json to_json(const ExperimentConfig &cfg);
Json to_json(const DeviationRecord &record);
Json to_json(const Certification &cert);
Json to_json(const ExpectedDeviationEstimate &est);
Json to_json(const BoundedDifferenceCheck &check);
Json to_json(const McDiarmidTail &tail);
Json to_json(const CardinalityFormulas &formulas);
Json to_json(const SweepPoint &point);
Json to_json(const SweepReport &report);
Json to_json(const HaydenWinterCheck &check);
Json to_json(const CoveringCheck &check);
Json to_json(const IsotropyCheck &check);

Json net_to_json(const Net &net);
/// Inverse of net_to_json; validates every point as a unit vector.
Net net_from_json(const Json &json);

/// Fixed column order:
/// m,trials,passes,pass_fraction,mean_y,max_y,std_error
std::string sweep_to_csv(const SweepReport &report);

}  // namespace randomizer

#endif
