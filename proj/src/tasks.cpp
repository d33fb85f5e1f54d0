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

#include "randomizer/tasks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "randomizer/parallel.hpp"

namespace randomizer {

namespace {

constexpr std::array<std::string_view, 11> kTaskNames = {
    "sample",     "inequalities", "certify", "expected-deviation", "bounded-difference", "mcdiarmid",
    "sweep",      "hayden-winter", "isotropy", "net",               "formulas",
};

constexpr std::array<std::string_view, 30> kConfigKeys = {
    "task",         "d",          "m",         "m_min",   "m_max",     "p",
    "r",            "epsilon",    "eta",       "trials",  "states",    "seed",
    "stream",       "threads",    "mode",      "source",  "budget",    "full_grid",
    "grid_ratio",   "success_fraction", "t", "replacements", "probes", "samples",
    "matrices",     "isotropy_samples", "c_p", "net_file", "out",     "format",
};

constexpr std::array<std::string_view, 3> kExecutionKeys = {"threads", "out", "format"};

// Sub-seeds for task-level draws, disjoint from the per-trial tree used by
// the experiments module (which branches on m first).
constexpr uint64_t kPlanBranch = 0x504C414EULL;
constexpr uint64_t kOutputNormBranch = 0x48574EULL;
constexpr uint64_t kIsotropyBranch = 0x49534FULL;
constexpr uint64_t kProbeBranch = 0x50524FULL;

size_t line_of(const ConfigDocument &doc, const std::string &key) {
    auto it = doc.entries().find(key);
    return it == doc.entries().end() ? 0 : it->second.line;
}

[[noreturn]] void config_fail(const ConfigDocument &doc, const std::string &key, const std::string &what) {
    size_t line = line_of(doc, key);
    std::string where = line == 0 ? "--" + key : "line " + std::to_string(line) + ", field '" + key + "'";
    throw ConfigError(where + ": " + what, key, line);
}

ExperimentConfig experiment(const ConfigDocument &doc) {
    ExperimentConfig cfg = to_experiment_config(doc);
    if (cfg.mode == EvaluationMode::net_certify && cfg.d > kMaxNetDimension) {
        config_fail(doc, doc.has("d") ? "d" : "mode",
                    "net mode refused: d = " + std::to_string(cfg.d) + " exceeds the net dimension guard d <= " +
                        std::to_string(kMaxNetDimension) + "; use mode = sample");
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what(), "", 0);
    }
    return cfg;
}

Json channel_json(const ExperimentConfig &cfg, const RandomizingChannel &channel) {
    return Json{{"dim", channel.dim()},
                {"m", channel.cardinality()},
                {"source", to_string(cfg.source)},
                {"seed", to_json(channel.ensemble().seed)}};
}

TaskResult task_sample(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    size_t iso_samples = doc.get_size("isotropy_samples", 1000);
    if (iso_samples < 100) {
        config_fail(doc, "isotropy_samples", "needs at least 100 samples");
    }
    UnitaryEnsemble ensemble = sample_ensemble(cfg.d, cfg.m, cfg.seed);
    Json residuals = Json::array();
    double worst = 0;
    for (const auto &u : ensemble.members) {
        double r = unitarity_defect(u);
        worst = std::max(worst, r);
        residuals.push_back(r);
    }
    IsotropyCheck iso = check_isotropy(cfg.d, iso_samples, PureState::basis(cfg.d, 0), cfg.seed.child(kIsotropyBranch));
    TaskResult out;
    out.pass = worst <= 1e-9 && iso.pass;
    out.report = Json{{"dim", cfg.d},
                      {"m", cfg.m},
                      {"seed", to_json(cfg.seed)},
                      {"unitarity_residuals", residuals},
                      {"max_residual", worst},
                      {"all_unitary", worst <= 1e-9},
                      {"isotropy", to_json(iso)}};
    return out;
}

TaskResult task_inequalities(const ConfigDocument &doc) {
    ExperimentConfig cfg = to_experiment_config(doc);
    size_t count = doc.get_size("matrices", 1000);
    if (count == 0) {
        config_fail(doc, "matrices", "needs at least one matrix");
    }
    InequalityBatch batch = run_inequality_batch(count, cfg.seed, cfg.threads);
    TaskResult out;
    out.pass = batch.pass();
    out.report = Json{{"matrices", batch.matrices},
                      {"interpolation_failures", batch.interpolation_failures},
                      {"hoelder_failures", batch.hoelder_failures},
                      {"reverse_triangle_failures", batch.reverse_triangle_failures},
                      {"slack", kInequalitySlack},
                      {"density_bound",
                       Json{{"samples", batch.density_samples},
                            {"literal_holds", batch.density_literal_holds},
                            {"alternative_holds", batch.density_alternative_holds},
                            {"disagreements", batch.density_disagreements}}}};
    return out;
}

TaskResult task_certify(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    RandomizingChannel channel(trial_ensemble(cfg, cfg.m, 0));
    TaskResult out;
    Json report{{"channel", channel_json(cfg, channel)}, {"p", to_json(cfg.p)}, {"epsilon", cfg.epsilon}};
    Certification cert;
    if (cfg.mode == EvaluationMode::net_certify) {
        double required = required_net_radius(cfg.d, cfg.p, cfg.epsilon);
        Net net;
        if (auto path = doc.get_string("net_file")) {
            std::ifstream in(*path);
            if (!in) {
                config_fail(doc, "net_file", "cannot open '" + *path + "'");
            }
            try {
                Json parsed = Json::parse(in);
                net = net_from_json(parsed.contains("report") ? parsed["report"]["net"] : parsed);
            } catch (const std::exception &e) {
                config_fail(doc, "net_file", e.what());
            }
        } else {
            double eta = doc.get_double("eta", required);
            net = build_net(cfg.d, std::min(eta, 2.0), cfg.net_budget, cfg.seed.child(kPlanBranch));
        }
        try {
            cert = certify_epsilon_randomizing(channel, cfg.p, cfg.epsilon, net, cfg.threads);
        } catch (const NetTooCoarseError &e) {
            config_fail(doc, doc.has("net_file") ? "net_file" : "eta", e.what());
        }
        report["net"] = Json{{"eta", net.eta}, {"size", net.points.size()}, {"required_eta", required}};
    } else {
        SamplePlan plan{cfg.states_per_trial, cfg.seed.child(kPlanBranch)};
        cert = certify_epsilon_randomizing(channel, cfg.p, cfg.epsilon, plan, cfg.threads);
    }
    report["certification"] = to_json(cert);
    out.report = report;
    out.pass = cert.certified;
    return out;
}

TaskResult task_expected_deviation(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    ExpectedDeviationEstimate est;
    try {
        est = estimate_expected_deviation(cfg);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what(), "", 0);
    }
    TaskResult out;
    out.pass = est.within && est.purity_chain_holds;
    out.report = Json{{"config", to_json(cfg)}, {"estimate", to_json(est)}, {"annotations", report_annotations()}};
    return out;
}

TaskResult task_bounded_difference(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    size_t replacements = doc.get_size("replacements", 500);
    if (cfg.m < 2 || replacements == 0) {
        config_fail(doc, cfg.m < 2 ? "m" : "replacements", "needs m >= 2 and at least one replacement");
    }
    BoundedDifferenceCheck check = check_bounded_difference(cfg, replacements);
    TaskResult out;
    out.pass = check.holds;
    out.report = Json{{"config", to_json(cfg)}, {"bounded_difference", to_json(check)}};
    return out;
}

TaskResult task_mcdiarmid(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    double t = doc.get_double("t", 0.2);
    if (!(t > 0)) {
        config_fail(doc, "t", "must be positive");
    }
    McDiarmidTail tail = mcdiarmid_tail(cfg, t);
    TaskResult out;
    out.pass = tail.within;
    out.report = Json{{"config", to_json(cfg)}, {"tail", to_json(tail)}, {"annotations", report_annotations()}};
    return out;
}

TaskResult task_sweep(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    double success = doc.get_double("success_fraction", 0.9);
    if (!(success > 0) || success > 1) {
        config_fail(doc, "success_fraction", "must lie in (0, 1]");
    }
    SweepReport sweep = minimal_m_sweep(cfg, success);
    TaskResult out;
    out.pass = sweep.m_star.has_value();
    out.report = to_json(sweep);
    out.csv = sweep_to_csv(sweep);
    return out;
}

TaskResult task_hayden_winter(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    if (!cfg.p.is_infinite() && cfg.p.value() <= 1) {
        config_fail(doc, "p", "the output-norm bound needs p > 1");
    }
    size_t samples = doc.get_size("samples", 500);
    if (samples == 0) {
        config_fail(doc, "samples", "needs at least one sample");
    }
    RandomizingChannel channel(trial_ensemble(cfg, cfg.m, 0));
    SamplePlan plan{cfg.states_per_trial, cfg.seed.child(kPlanBranch)};
    Certification evidence = certify_epsilon_randomizing(channel, cfg.p, cfg.epsilon, plan, cfg.threads);
    HaydenWinterCheck check =
        hayden_winter_bound(channel, cfg.p, cfg.epsilon, samples, cfg.seed.child(kOutputNormBranch), cfg.threads);
    TaskResult out;
    out.pass = evidence.certified && check.holds;
    out.report = Json{{"channel", channel_json(cfg, channel)},
                      {"p", to_json(cfg.p)},
                      {"epsilon", cfg.epsilon},
                      {"precondition_met", evidence.certified},
                      {"evidence", to_json(evidence)},
                      {"output_norm", to_json(check)},
                      {"annotations", report_annotations()}};
    return out;
}

TaskResult task_isotropy(const ConfigDocument &doc) {
    ExperimentConfig cfg = experiment(doc);
    size_t samples = doc.get_size("samples", 10000);
    if (samples < 100) {
        config_fail(doc, "samples", "needs at least 100 samples");
    }
    IsotropyCheck iso = check_isotropy(cfg.d, samples, PureState::basis(cfg.d, 0), cfg.seed.child(kIsotropyBranch));
    TaskResult out;
    out.pass = iso.pass;
    out.report = Json{{"dim", cfg.d}, {"samples", samples}, {"isotropy", to_json(iso)}};
    return out;
}

TaskResult task_net(const ConfigDocument &doc) {
    ExperimentConfig cfg = to_experiment_config(doc);
    if (cfg.d == 0 || cfg.d > kMaxNetDimension) {
        config_fail(doc, "d", "nets are only built for 1 <= d <= " + std::to_string(kMaxNetDimension) +
                                  " (net dimension guard)");
    }
    double eta = doc.get_double("eta", 0.5);
    if (!(eta > 0) || eta > 2) {
        config_fail(doc, "eta", "must lie in (0, 2]");
    }
    size_t budget = doc.get_size("budget", 10000);
    size_t probes = doc.get_size("probes", 10000);
    if (budget == 0) {
        config_fail(doc, "budget", "must be positive");
    }
    if (probes < 100) {
        config_fail(doc, "probes", "needs at least 100 probes");
    }
    Net net = build_net(cfg.d, eta, budget, cfg.seed);
    CoveringCheck covering = verify_covering(net, probes, cfg.seed.child(kProbeBranch), cfg.threads);
    double bound = std::ceil(net_size_bound(cfg.d, eta));
    TaskResult out;
    bool size_ok = static_cast<double>(net.points.size()) <= bound;
    out.pass = covering.pass && size_ok;
    out.report = Json{{"covering", to_json(covering)},
                      {"size_within_bound", size_ok},
                      {"probes", probes},
                      {"net", net_to_json(net)}};
    return out;
}

TaskResult task_formulas(const ConfigDocument &doc) {
    size_t d = doc.get_size("d", 2);
    double epsilon = doc.get_double("epsilon", 0.5);
    PExponent p = doc.get_exponent("p", PExponent(1));
    double c_p = doc.get_double("c_p", 1.0);
    if (!(epsilon > 0)) {
        config_fail(doc, "epsilon", "must be positive");
    }
    if (d < 2) {
        config_fail(doc, "d", "must be at least 2");
    }
    if (!(c_p > 0)) {
        config_fail(doc, "c_p", "must be positive");
    }
    CardinalityFormulas f = evaluate_cardinality_formulas(d, epsilon, p, c_p);
    TaskResult out;
    out.pass = true;
    Json report = to_json(f);
    report["d"] = d;
    report["epsilon"] = epsilon;
    report["p"] = to_json(p);
    report["c_p"] = c_p;
    report["theorem1_log_argument_text"] = theorem1_log_argument_text(p);
    out.report = report;
    return out;
}

ComplexMatrix random_test_matrix(size_t d, bool real, RandomStream &stream) {
    double magnitude = std::exp2(stream.uniform() * 8 - 4);
    ComplexMatrix a(d, d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            a(i, j) = real ? Complex{stream.normal() * magnitude, 0} : stream.complex_normal() * magnitude;
        }
    }
    return a;
}

}  // namespace

std::span<const std::string_view> task_names() {
    return kTaskNames;
}

std::span<const std::string_view> config_keys() {
    return kConfigKeys;
}

InequalityBatch run_inequality_batch(size_t count, Seed seed, size_t threads) {
    static const size_t dims[] = {2, 4, 8, 16};
    static const PExponent exponents[] = {PExponent(1), PExponent(1.5), PExponent(2), PExponent(3),
                                          PExponent::infinity()};
    struct Outcome {
        bool interpolation = true;
        bool hoelder = true;
        bool reverse = true;
        bool literal = true;
        bool alternative = true;
    };
    std::vector<Outcome> outcomes(count);
    parallel_for(count, threads, [&](size_t k) {
        RandomStream stream(seed.child(k));
        size_t d = dims[k % 4];
        bool real = (k / 4) % 2 == 0;
        ComplexMatrix a = random_test_matrix(d, real, stream);
        ComplexMatrix b = random_test_matrix(d, real, stream);
        size_t pi = static_cast<size_t>(stream.below(4));
        size_t ri = pi + 1 + static_cast<size_t>(stream.below(4 - pi));
        PExponent p = exponents[pi];
        PExponent r = exponents[ri];

        Outcome o;
        o.interpolation = check_interpolation(a, p).holds && check_interpolation(a, PExponent::infinity()).holds;
        o.hoelder = check_hoelder(a, p, r).holds;
        o.reverse = check_reverse_triangle(a, b, p).holds && check_reverse_triangle(a, b, r).holds;

        // Density matrix a a^dagger / tr(a a^dagger) for the deviation bound.
        ComplexMatrix w = multiply(a, adjoint(a));
        ComplexMatrix rho = scale(w, 1.0 / trace(w).real());
        for (size_t i = 0; i < d; i++) {
            for (size_t j = i + 1; j < d; j++) {
                rho(j, i) = std::conj(rho(i, j));
            }
            rho(i, i) = rho(i, i).real();
        }
        PExponent finite_r = r.is_infinite() ? PExponent(p.value() + 1) : r;
        DensityDeviationBound bound = density_deviation_bound(rho, p, finite_r);
        o.literal = bound.holds;
        o.alternative = bound.holds_alternative;
        outcomes[k] = o;
    });

    InequalityBatch batch;
    batch.matrices = count;
    batch.density_samples = count;
    for (const auto &o : outcomes) {
        batch.interpolation_failures += o.interpolation ? 0 : 1;
        batch.hoelder_failures += o.hoelder ? 0 : 1;
        batch.reverse_triangle_failures += o.reverse ? 0 : 1;
        batch.density_literal_holds += o.literal ? 1 : 0;
        batch.density_alternative_holds += o.alternative ? 1 : 0;
        batch.density_disagreements += o.literal != o.alternative ? 1 : 0;
    }
    return batch;
}

TaskResult run_task(const ConfigDocument &doc) {
    doc.require_known_keys(kConfigKeys);
    auto task = doc.get_string("task");
    if (!task) {
        throw ConfigError("missing required field 'task'", "task", 0);
    }
    if (*task == "sample") {
        return task_sample(doc);
    }
    if (*task == "inequalities") {
        return task_inequalities(doc);
    }
    if (*task == "certify") {
        return task_certify(doc);
    }
    if (*task == "expected-deviation") {
        return task_expected_deviation(doc);
    }
    if (*task == "bounded-difference") {
        return task_bounded_difference(doc);
    }
    if (*task == "mcdiarmid") {
        return task_mcdiarmid(doc);
    }
    if (*task == "sweep") {
        return task_sweep(doc);
    }
    if (*task == "hayden-winter") {
        return task_hayden_winter(doc);
    }
    if (*task == "isotropy") {
        return task_isotropy(doc);
    }
    if (*task == "net") {
        return task_net(doc);
    }
    if (*task == "formulas") {
        return task_formulas(doc);
    }
    std::string known;
    for (auto name : kTaskNames) {
        known += (known.empty() ? "" : ", ") + std::string(name);
    }
    config_fail(doc, "task", "unknown task '" + *task + "' (expected one of: " + known + ")");
}

Json make_document(const std::string &command, const ConfigDocument &doc, const TaskResult &result,
                   const std::string &started, const std::string &finished) {
    Json config = Json::object();
    for (const auto &[key, entry] : doc.entries()) {
        if (std::find(kExecutionKeys.begin(), kExecutionKeys.end(), key) == kExecutionKeys.end()) {
            config[key] = entry.value;
        }
    }
    Json manifest{{"command", command},
                  {"tool_version", kToolVersion},
                  {"seed", Json{{"value", doc.get_u64("seed", 0)}, {"stream", doc.get_u64("stream", 0)}}},
                  {"config", config},
                  {"started", started},
                  {"finished", finished}};
    return Json{{"manifest", manifest}, {"verdict", result.pass ? "pass" : "fail"}, {"report", result.report}};
}

}  // namespace randomizer
