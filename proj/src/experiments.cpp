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

#include "randomizer/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "randomizer/parallel.hpp"

namespace randomizer {

namespace {

constexpr uint64_t kEnsembleBranch = 0;
constexpr uint64_t kStateBranch = 1;
constexpr uint64_t kReplacementBranch = 0xB0D1FFULL;
constexpr uint64_t kNetBranch = 0x4E4554ULL;

double as_double(size_t n) {
    return static_cast<double>(n);
}

Seed trial_seed(const ExperimentConfig &cfg, size_t m, size_t trial) {
    return cfg.seed.child(m).child(trial);
}

// R(psi) from the images v_i = U_i psi, with one image optionally swapped.
ComplexMatrix average_projector(const std::vector<std::vector<Complex>> &images, size_t skip,
                                const std::vector<Complex> *replacement) {
    size_t d = images.front().size();
    ComplexMatrix out(d, d);
    auto accumulate = [&](const std::vector<Complex> &v) {
        for (size_t i = 0; i < d; i++) {
            for (size_t j = i; j < d; j++) {
                out(i, j) += v[i] * std::conj(v[j]);
            }
        }
    };
    for (size_t k = 0; k < images.size(); k++) {
        if (k == skip && replacement != nullptr) {
            accumulate(*replacement);
        } else {
            accumulate(images[k]);
        }
    }
    double weight = 1.0 / as_double(images.size());
    for (size_t i = 0; i < d; i++) {
        out(i, i) = out(i, i).real() * weight;
        for (size_t j = i + 1; j < d; j++) {
            out(i, j) *= weight;
            out(j, i) = std::conj(out(i, j));
        }
    }
    return out;
}

}  // namespace

const char *to_string(EvaluationMode mode) {
    return mode == EvaluationMode::net_certify ? "net" : "sample";
}

const char *to_string(EnsembleSource source) {
    return source == EnsembleSource::haar ? "haar" : "pauli";
}

PExponent default_companion(PExponent p) {
    if (p.is_infinite()) {
        throw std::invalid_argument("no companion exponent exceeds infinity");
    }
    return PExponent(p.value() + 1);
}

void ExperimentConfig::validate() const {
    if (d == 0) {
        throw std::invalid_argument("d must be at least 1");
    }
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    if (!p.is_infinite() && !(p < r)) {
        throw std::invalid_argument("companion exponent r must exceed p");
    }
    if (m == 0) {
        throw std::invalid_argument("m must be at least 1");
    }
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (states_per_trial == 0) {
        throw std::invalid_argument("states_per_trial must be at least 1");
    }
    if (!(grid_ratio > 1)) {
        throw std::invalid_argument("grid_ratio must exceed 1");
    }
    if (sweep_m_min() > sweep_m_max()) {
        throw std::invalid_argument("m_min exceeds m_max");
    }
    if (source == EnsembleSource::pauli_fixture && d != 2) {
        throw std::invalid_argument("the Pauli fixture requires d = 2");
    }
    if (mode == EvaluationMode::net_certify && d > kMaxNetDimension) {
        throw std::invalid_argument("net mode requires d <= " + std::to_string(kMaxNetDimension) +
                                    " (net sizes grow like (5/eta)^(2d)); use sample mode");
    }
}

size_t ExperimentConfig::sweep_m_min() const {
    return m_min == 0 ? std::max<size_t>(d, 1) : m_min;
}

size_t ExperimentConfig::sweep_m_max() const {
    return m_max == 0 ? std::max(d * d, sweep_m_min()) : m_max;
}

UnitaryEnsemble trial_ensemble(const ExperimentConfig &cfg, size_t m, size_t trial) {
    if (cfg.source == EnsembleSource::pauli_fixture) {
        return pauli_ensemble(m);
    }
    return sample_ensemble(cfg.d, m, trial_seed(cfg, m, trial).child(kEnsembleBranch));
}

Seed trial_state_seed(const ExperimentConfig &cfg, size_t m, size_t trial) {
    return trial_seed(cfg, m, trial).child(kStateBranch);
}

std::vector<double> sample_deviations(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<double> ys(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](size_t t) {
        RandomizingChannel channel(trial_ensemble(cfg, cfg.m, t));
        PureState psi = sample_pure_state(cfg.d, trial_state_seed(cfg, cfg.m, t));
        ys[t] = distance_to_maximally_mixed(channel.apply(psi), cfg.p);
    });
    return ys;
}

MeanEstimate mean_with_error(std::span<const double> values) {
    MeanEstimate out;
    if (values.empty()) {
        return out;
    }
    double n = as_double(values.size());
    out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - out.mean) * (v - out.mean);
        }
        out.std_error = std::sqrt(ss / (n - 1) / n);
    }
    return out;
}

double expected_deviation_bound(size_t d, size_t m, PExponent p, PExponent r) {
    if (p.is_infinite() || r.is_infinite()) {
        throw std::invalid_argument("expected_deviation_bound: p and r must be finite");
    }
    if (!(p < r)) {
        throw std::invalid_argument("expected_deviation_bound: requires r > p");
    }
    double dd = as_double(d);
    double mm = as_double(m);
    double pv = p.value();
    double root_d = std::pow(dd, 1 / pv);
    double inner = root_d / std::pow(mm, pv) + r.value() / (std::pow(mm, pv - 1) * root_d);
    return std::pow(inner, 1 / r.value());
}

std::optional<double> expected_deviation_worked_bound(size_t d, size_t m, PExponent p) {
    if (p.is_infinite()) {
        return std::nullopt;
    }
    double dd = as_double(d);
    double mm = as_double(m);
    if (p.value() == 1) {
        return std::sqrt(dd / mm);
    }
    if (p.value() == 2) {
        return std::cbrt(std::sqrt(dd) / (mm * mm) + 3 / (mm * std::sqrt(dd)));
    }
    return std::nullopt;
}

ExpectedDeviationEstimate estimate_expected_deviation(const ExperimentConfig &cfg) {
    cfg.validate();
    if (cfg.p.is_infinite()) {
        throw std::invalid_argument("estimate_expected_deviation: p must be finite");
    }
    if (cfg.trials < 30) {
        throw std::invalid_argument("estimate_expected_deviation: needs at least 30 trials");
    }
    std::vector<double> ys(cfg.trials);
    std::vector<double> purity(cfg.trials);
    double dd = as_double(cfg.d);
    parallel_for(cfg.trials, cfg.threads, [&](size_t t) {
        RandomizingChannel channel(trial_ensemble(cfg, cfg.m, t));
        PureState psi = sample_pure_state(cfg.d, trial_state_seed(cfg, cfg.m, t));
        ComplexMatrix out = channel.apply(psi);
        ys[t] = distance_to_maximally_mixed(out, cfg.p);
        double hs = schatten_norm(out, PExponent(2));
        purity[t] = dd * hs * hs - 1;
    });

    ExpectedDeviationEstimate est;
    MeanEstimate y = mean_with_error(ys);
    est.mean_y = y.mean;
    est.std_error = y.std_error;
    est.general_bound = expected_deviation_bound(cfg.d, cfg.m, cfg.p, cfg.r);
    est.worked_bound = expected_deviation_worked_bound(cfg.d, cfg.m, cfg.p);
    est.lemma_bound = est.worked_bound.value_or(est.general_bound);
    est.within = est.mean_y <= est.lemma_bound + 2 * est.std_error;
    est.within_general = est.mean_y <= est.general_bound + 2 * est.std_error;
    if (est.worked_bound) {
        est.within_worked = est.mean_y <= *est.worked_bound + 2 * est.std_error;
    }
    MeanEstimate excess = mean_with_error(purity);
    est.mean_purity_excess = excess.mean;
    est.purity_excess_std_error = excess.std_error;
    est.purity_chain_holds = excess.mean <= dd / as_double(cfg.m) + 3 * excess.std_error;
    return est;
}

double deviation_change(const RandomizingChannel &channel, const PureState &psi, size_t index,
                        const ComplexMatrix &replacement, PExponent p) {
    if (index >= channel.cardinality()) {
        throw std::invalid_argument("deviation_change: index out of range");
    }
    if (replacement.rows() != channel.dim() || replacement.cols() != channel.dim()) {
        throw std::invalid_argument("deviation_change: replacement has the wrong shape");
    }
    auto images = channel.images(psi);
    std::vector<Complex> swapped = randomizer::apply(replacement, psi.amplitudes());
    double y = distance_to_maximally_mixed(average_projector(images, 0, nullptr), p);
    double y_hat = distance_to_maximally_mixed(average_projector(images, index, &swapped), p);
    return std::abs(y - y_hat);
}

double bounded_difference_constant(size_t m, PExponent p) {
    return std::pow(2.0, p.reciprocal()) / as_double(m);
}

BoundedDifferenceCheck check_bounded_difference(const ExperimentConfig &cfg, size_t replacements) {
    cfg.validate();
    if (cfg.m < 2) {
        throw std::invalid_argument("check_bounded_difference: needs m >= 2");
    }
    if (replacements == 0) {
        throw std::invalid_argument("check_bounded_difference: needs at least one replacement");
    }
    RandomizingChannel channel(trial_ensemble(cfg, cfg.m, 0));
    PureState psi = sample_pure_state(cfg.d, trial_state_seed(cfg, cfg.m, 0));
    auto images = channel.images(psi);
    double y = distance_to_maximally_mixed(average_projector(images, 0, nullptr), cfg.p);

    std::vector<double> deltas(replacements);
    Seed base = cfg.seed.child(cfg.m).child(kReplacementBranch);
    parallel_for(replacements, cfg.threads, [&](size_t k) {
        RandomStream stream(base.child(k));
        size_t index = static_cast<size_t>(stream.below(cfg.m));
        ComplexMatrix fresh = sample_haar_unitary(cfg.d, stream);
        std::vector<Complex> swapped = randomizer::apply(fresh, psi.amplitudes());
        double y_hat = distance_to_maximally_mixed(average_projector(images, index, &swapped), cfg.p);
        deltas[k] = std::abs(y - y_hat);
    });

    BoundedDifferenceCheck out;
    out.replacements = replacements;
    out.max_delta = *std::max_element(deltas.begin(), deltas.end());
    out.bound = bounded_difference_constant(cfg.m, cfg.p);
    out.holds = out.max_delta <= out.bound + kInequalitySlack;
    return out;
}

double mcdiarmid_bound(size_t m, PExponent p, double t) {
    double c = bounded_difference_constant(m, p);
    return 2 * std::exp(-2 * t * t / (as_double(m) * c * c));
}

double mcdiarmid_bound_base2(size_t m, PExponent p, double t) {
    double c = bounded_difference_constant(m, p);
    return 2 * std::exp2(-2 * t * t / (as_double(m) * c * c));
}

std::vector<McDiarmidTail> mcdiarmid_tails(std::span<const double> deviations, size_t m, PExponent p,
                                           std::span<const double> ts) {
    if (deviations.empty()) {
        throw std::invalid_argument("mcdiarmid_tails: no deviations");
    }
    double mean = mean_with_error(deviations).mean;
    double n = as_double(deviations.size());
    std::vector<McDiarmidTail> out;
    for (double t : ts) {
        if (!(t > 0)) {
            throw std::invalid_argument("mcdiarmid_tail: t must be positive");
        }
        McDiarmidTail tail;
        tail.t = t;
        tail.trials = deviations.size();
        tail.mean_y = mean;
        size_t hits = 0;
        for (double y : deviations) {
            hits += std::abs(y - mean) >= t ? 1 : 0;
        }
        tail.empirical_tail = as_double(hits) / n;
        tail.bound = mcdiarmid_bound(m, p, t);
        tail.bound_base2 = mcdiarmid_bound_base2(m, p, t);
        double q = std::min(tail.bound, 1.0);
        tail.std_error = std::sqrt(q * (1 - q) / n);
        tail.within = tail.empirical_tail <= tail.bound + 3 * tail.std_error;
        out.push_back(tail);
    }
    return out;
}

McDiarmidTail mcdiarmid_tail(const ExperimentConfig &cfg, double t) {
    std::vector<double> ys = sample_deviations(cfg);
    const double ts[] = {t};
    return mcdiarmid_tails(ys, cfg.m, cfg.p, ts).front();
}

CardinalityFormulas evaluate_cardinality_formulas(size_t d, double epsilon, PExponent p, double c_p) {
    if (d < 2) {
        throw std::invalid_argument("cardinality formulas need d >= 2");
    }
    if (!(epsilon > 0)) {
        throw std::invalid_argument("cardinality formulas need epsilon > 0");
    }
    if (!(c_p > 0)) {
        throw std::invalid_argument("cardinality formulas need c_p > 0");
    }
    double dd = as_double(d);
    double eps2 = epsilon * epsilon;
    CardinalityFormulas out;
    out.theorem1_log_argument = 10 * std::pow(dd, p.threshold_exponent()) / epsilon;
    out.theorem1_m = c_p * dd / eps2 * std::log2(out.theorem1_log_argument);
    out.hlsw_m = 134 * dd * std::log2(dd) / eps2;
    out.dn_m = 37 * dd / eps2 * std::log2(15 / epsilon);
    out.aubrun_m = c_p * dd / eps2;
    return out;
}

std::string theorem1_log_argument_text(PExponent p) {
    if (p.is_infinite()) {
        return "10*d/eps";
    }
    if (p.value() == 1) {
        return "10/eps";
    }
    return "10*d^((" + p.to_string() + "-1)/" + p.to_string() + ")/eps";
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two paired points");
    }
    MeanEstimate mx = mean_with_error(xs);
    MeanEstimate my = mean_with_error(ys);
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxx += (xs[i] - mx.mean) * (xs[i] - mx.mean);
        sxy += (xs[i] - mx.mean) * (ys[i] - my.mean);
        syy += (ys[i] - my.mean) * (ys[i] - my.mean);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit_line: x values are all equal");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my.mean - fit.slope * mx.mean;
    fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

std::vector<size_t> sweep_grid(size_t m_min, size_t m_max, double ratio) {
    if (m_min == 0 || m_min > m_max || !(ratio > 1)) {
        throw std::invalid_argument("sweep_grid: need 1 <= m_min <= m_max and ratio > 1");
    }
    std::vector<size_t> grid{m_min};
    while (true) {
        size_t prev = grid.back();
        size_t next = std::max(prev + 1, static_cast<size_t>(std::ceil(as_double(prev) * ratio - 1e-9)));
        if (next > m_max) {
            break;
        }
        grid.push_back(next);
    }
    return grid;
}

std::vector<std::string> report_annotations() {
    return {
        "expected-deviation: the general bound (d^(1/p)/m^p + r/(m^(p-1) d^(1/p)))^(1/r) and the worked "
        "forms sqrt(d/m) (p=1) and (sqrt(d)/m^2 + 3/(m sqrt(d)))^(1/3) (p=2) disagree in their m-exponents; "
        "all are reported, none is preferred",
        "tail-bound: the bounded-difference tail is evaluated with natural exponentials; the base-2 reading "
        "is reported alongside as bound_base2",
        "cardinality: the intermediate term 2 d^(1/(r d)) / m^(p/r) carries an exponent that may be intended "
        "as 1/r; it is recorded only and not evaluated",
        "probability: the success probability 1 - e^(-m) quoted for the general bound differs from "
        "1 - exp(-d/2) quoted for the trace-norm baseline; sweeps use an empirical success fraction instead",
        "output-norm: the output-norm bound is tested under the p-norm randomization threshold at the same p; "
        "an operator-norm hypothesis is not assumed",
    };
}

SweepReport minimal_m_sweep(const ExperimentConfig &cfg, double success_fraction) {
    cfg.validate();
    if (!(success_fraction > 0) || success_fraction > 1) {
        throw std::invalid_argument("success_fraction must lie in (0, 1]");
    }
    SweepReport report;
    report.config = cfg;
    report.success_fraction = success_fraction;
    report.annotations = report_annotations();

    std::optional<Net> net;
    if (cfg.mode == EvaluationMode::net_certify) {
        double eta = required_net_radius(cfg.d, cfg.p, cfg.epsilon);
        net = build_net(cfg.d, std::min(eta, 2.0), cfg.net_budget, cfg.seed.child(kNetBranch));
        report.net_size = net->points.size();
        report.threshold = eta;
    } else {
        report.threshold = randomization_threshold(cfg.d, cfg.p, cfg.epsilon);
    }

    std::vector<size_t> grid = sweep_grid(cfg.sweep_m_min(), cfg.sweep_m_max(), cfg.grid_ratio);
    for (size_t gi = 0; gi < grid.size(); gi++) {
        size_t m = grid[gi];
        std::vector<std::vector<double>> per_trial(cfg.trials);
        std::vector<char> passed(cfg.trials);
        parallel_for(cfg.trials, cfg.threads, [&](size_t t) {
            RandomizingChannel channel(trial_ensemble(cfg, m, t));
            std::vector<double> ys;
            bool all_meet = true;
            if (net) {
                for (const auto &point : net->points) {
                    double y = distance_to_maximally_mixed(channel.apply(point), cfg.p);
                    all_meet = all_meet && y <= report.threshold;
                    ys.push_back(y);
                }
            } else {
                Seed states = trial_state_seed(cfg, m, t);
                for (size_t k = 0; k < cfg.states_per_trial; k++) {
                    PureState psi = sample_pure_state(cfg.d, states.child(k));
                    double y = distance_to_maximally_mixed(channel.apply(psi), cfg.p);
                    all_meet = all_meet && y <= report.threshold;
                    ys.push_back(y);
                }
            }
            per_trial[t] = std::move(ys);
            passed[t] = all_meet ? 1 : 0;
        });

        SweepPoint point;
        point.m = m;
        point.trials = cfg.trials;
        std::vector<double> all;
        for (size_t t = 0; t < cfg.trials; t++) {
            point.passes += passed[t];
            all.insert(all.end(), per_trial[t].begin(), per_trial[t].end());
        }
        point.pass_fraction = as_double(point.passes) / as_double(cfg.trials);
        MeanEstimate est = mean_with_error(all);
        point.mean_y = est.mean;
        point.std_error = est.std_error;
        point.max_y = *std::max_element(all.begin(), all.end());
        report.points.push_back(point);

        if (!report.m_star && point.pass_fraction >= success_fraction) {
            report.m_star = m;
            report.pass_fraction_at_m_star = point.pass_fraction;
            if (gi > 0) {
                report.m_previous = report.points[gi - 1].m;
                report.pass_fraction_previous = report.points[gi - 1].pass_fraction;
            }
            if (!cfg.full_grid) {
                break;
            }
        }
    }

    if (cfg.d >= 2) {
        report.baselines = evaluate_cardinality_formulas(cfg.d, cfg.epsilon, cfg.p, 1.0);
        report.theorem1_shape = report.baselines.theorem1_m;
    }
    size_t m_ref = report.m_star.value_or(report.points.back().m);
    if (report.m_star && report.theorem1_shape > 0) {
        double m_star = as_double(*report.m_star);
        report.fitted_c_p = m_star / report.theorem1_shape;
        report.theory_m = *report.fitted_c_p * report.theorem1_shape;
        report.fitted_aubrun_constant = m_star * cfg.epsilon * cfg.epsilon / as_double(cfg.d);
    }

    ExperimentConfig at_ref = cfg;
    at_ref.m = m_ref;
    if (m_ref >= 2) {
        report.bounded_difference = check_bounded_difference(at_ref, 100);
    }
    std::vector<double> ys = sample_deviations(at_ref);
    const double ts[] = {0.05, 0.1, 0.2};
    report.tail_observations = mcdiarmid_tails(ys, m_ref, cfg.p, ts);
    return report;
}

}  // namespace randomizer
