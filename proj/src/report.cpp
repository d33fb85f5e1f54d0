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

#include "randomizer/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace randomizer {

namespace {

void write_json(const Json &value, int depth, std::string &out) {
    auto indent = [&](int level) { out.append(static_cast<size_t>(level) * 2, ' '); };
    switch (value.type()) {
        case Json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = value.begin(); it != value.end(); ++it, ++i) {
                indent(depth + 1);
                out += Json(it.key()).dump();
                out += ": ";
                write_json(it.value(), depth + 1, out);
                out += i + 1 < value.size() ? ",\n" : "\n";
            }
            indent(depth);
            out += "}";
            return;
        }
        case Json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < value.size(); i++) {
                indent(depth + 1);
                write_json(value[i], depth + 1, out);
                out += i + 1 < value.size() ? ",\n" : "\n";
            }
            indent(depth);
            out += "]";
            return;
        }
        case Json::value_t::number_float: {
            double v = value.get<double>();
            out += std::isfinite(v) ? format_double(v) : "null";
            return;
        }
        default:
            out += value.dump();
            return;
    }
}

Json optional_json(const std::optional<double> &v) {
    return v ? Json(*v) : Json(nullptr);
}

Json optional_json(const std::optional<size_t> &v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string dump_json(const Json &value) {
    std::string out;
    write_json(value, 0, out);
    out += "\n";
    return out;
}

Json without_timestamps(Json document) {
    if (document.contains("manifest") && document["manifest"].is_object()) {
        document["manifest"].erase("started");
        document["manifest"].erase("finished");
    }
    return document;
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

Json to_json(const Seed &seed) {
    return Json{{"value", seed.value}, {"stream", seed.stream}};
}

Json to_json(PExponent p) {
    if (p.is_infinite()) {
        return "inf";
    }
    return p.value();
}

Json to_json(const ExperimentConfig &cfg) {
    Json j;
    j["d"] = cfg.d;
    j["p"] = to_json(cfg.p);
    j["r"] = to_json(cfg.r);
    j["epsilon"] = cfg.epsilon;
    j["m"] = cfg.m;
    j["m_min"] = cfg.sweep_m_min();
    j["m_max"] = cfg.sweep_m_max();
    j["grid_ratio"] = cfg.grid_ratio;
    j["trials"] = cfg.trials;
    j["states_per_trial"] = cfg.states_per_trial;
    j["seed"] = to_json(cfg.seed);
    j["mode"] = to_string(cfg.mode);
    j["source"] = to_string(cfg.source);
    j["net_budget"] = cfg.net_budget;
    j["full_grid"] = cfg.full_grid;
    return j;
}

Json to_json(const DeviationRecord &record) {
    return Json{{"p", to_json(record.p)},
                {"y_value", record.y_value},
                {"threshold", record.threshold},
                {"meets", record.meets},
                {"state_seed", to_json(record.state_seed)},
                {"state_index", record.state_index}};
}

Json to_json(const Certification &cert) {
    return Json{{"certified", cert.certified},
                {"kind", to_string(cert.kind)},
                {"threshold_applied", cert.threshold_applied},
                {"evaluated", cert.evaluated},
                {"failures", cert.failures},
                {"failure_fraction", cert.failure_fraction()},
                {"worst", to_json(cert.worst)}};
}

Json to_json(const ExpectedDeviationEstimate &est) {
    Json j;
    j["mean_y"] = est.mean_y;
    j["std_error"] = est.std_error;
    j["general_bound"] = est.general_bound;
    j["worked_bound"] = optional_json(est.worked_bound);
    j["lemma_bound"] = est.lemma_bound;
    j["within"] = est.within;
    j["within_general"] = est.within_general;
    j["within_worked"] = est.within_worked ? Json(*est.within_worked) : Json(nullptr);
    j["mean_purity_excess"] = est.mean_purity_excess;
    j["purity_excess_std_error"] = est.purity_excess_std_error;
    j["purity_chain_holds"] = est.purity_chain_holds;
    return j;
}

Json to_json(const BoundedDifferenceCheck &check) {
    return Json{{"max_delta", check.max_delta},
                {"bound", check.bound},
                {"holds", check.holds},
                {"replacements", check.replacements}};
}

Json to_json(const McDiarmidTail &tail) {
    return Json{{"t", tail.t},
                {"empirical_tail", tail.empirical_tail},
                {"mean_y", tail.mean_y},
                {"bound", tail.bound},
                {"bound_base2", tail.bound_base2},
                {"std_error", tail.std_error},
                {"within", tail.within},
                {"trials", tail.trials}};
}

Json to_json(const CardinalityFormulas &formulas) {
    return Json{{"theorem1_m", formulas.theorem1_m},
                {"theorem1_log_argument", formulas.theorem1_log_argument},
                {"hlsw_m", formulas.hlsw_m},
                {"dn_m", formulas.dn_m},
                {"aubrun_m", formulas.aubrun_m}};
}

Json to_json(const SweepPoint &point) {
    return Json{{"m", point.m},
                {"trials", point.trials},
                {"passes", point.passes},
                {"pass_fraction", point.pass_fraction},
                {"mean_y", point.mean_y},
                {"max_y", point.max_y},
                {"std_error", point.std_error}};
}

Json to_json(const SweepReport &report) {
    Json j;
    j["config"] = to_json(report.config);
    j["success_fraction"] = report.success_fraction;
    j["threshold"] = report.threshold;
    j["net_size"] = report.net_size;
    Json points = Json::array();
    for (const auto &point : report.points) {
        points.push_back(to_json(point));
    }
    j["per_m"] = points;
    j["m_star"] = optional_json(report.m_star);
    j["pass_fraction_at_m_star"] = optional_json(report.pass_fraction_at_m_star);
    j["m_previous"] = optional_json(report.m_previous);
    j["pass_fraction_previous"] = optional_json(report.pass_fraction_previous);
    j["theorem1_shape"] = report.theorem1_shape;
    j["fitted_c_p"] = optional_json(report.fitted_c_p);
    j["theory_m"] = optional_json(report.theory_m);
    Json baselines = to_json(report.baselines);
    baselines["aubrun_fitted_constant"] = optional_json(report.fitted_aubrun_constant);
    j["baselines"] = baselines;
    Json tails = Json::array();
    for (const auto &tail : report.tail_observations) {
        tails.push_back(to_json(tail));
    }
    j["mcdiarmid"] = Json{{"bounded_difference", to_json(report.bounded_difference)}, {"tails", tails}};
    j["annotations"] = report.annotations;
    return j;
}

Json to_json(const HaydenWinterCheck &check) {
    return Json{{"max_norm", check.max_norm}, {"bound", check.bound}, {"holds", check.holds}};
}

Json to_json(const CoveringCheck &check) {
    return Json{{"max_min_distance", check.max_min_distance}, {"pass", check.pass}};
}

Json to_json(const IsotropyCheck &check) {
    return Json{{"deviation", check.deviation}, {"tolerance", check.tolerance}, {"pass", check.pass}};
}

Json net_to_json(const Net &net) {
    Json points = Json::array();
    for (const auto &point : net.points) {
        Json amplitudes = Json::array();
        for (const auto &z : point.amplitudes()) {
            amplitudes.push_back(Json::array({z.real(), z.imag()}));
        }
        points.push_back(amplitudes);
    }
    return Json{{"dim", net.dim},
                {"eta", net.eta},
                {"construction_seed", to_json(net.construction_seed)},
                {"size", net.points.size()},
                {"size_bound", net_size_bound(net.dim, net.eta)},
                {"points", points}};
}

Net net_from_json(const Json &json) {
    Net net;
    try {
        net.dim = json.at("dim").get<size_t>();
        net.eta = json.at("eta").get<double>();
        net.construction_seed.value = json.at("construction_seed").at("value").get<uint64_t>();
        net.construction_seed.stream = json.at("construction_seed").at("stream").get<uint64_t>();
        for (const auto &point : json.at("points")) {
            std::vector<Complex> amplitudes;
            for (const auto &z : point) {
                amplitudes.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
            }
            if (amplitudes.size() != net.dim) {
                throw std::invalid_argument("net point has the wrong dimension");
            }
            net.points.push_back(PureState::normalized(std::move(amplitudes)));
        }
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed net JSON: ") + e.what());
    }
    if (net.points.empty()) {
        throw std::invalid_argument("net JSON has no points");
    }
    return net;
}

std::string sweep_to_csv(const SweepReport &report) {
    std::string out = "m,trials,passes,pass_fraction,mean_y,max_y,std_error\n";
    for (const auto &p : report.points) {
        out += std::to_string(p.m) + "," + std::to_string(p.trials) + "," + std::to_string(p.passes) + "," +
               format_double(p.pass_fraction) + "," + format_double(p.mean_y) + "," + format_double(p.max_y) + "," +
               format_double(p.std_error) + "\n";
    }
    return out;
}

}  // namespace randomizer
