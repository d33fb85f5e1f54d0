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

#ifndef RANDOMIZER_EXPERIMENTS_HPP
#define RANDOMIZER_EXPERIMENTS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "randomizer/channel.hpp"

namespace randomizer {

enum class EvaluationMode { net_certify, sample_evidence };
enum class EnsembleSource { haar, pauli_fixture };

const char *to_string(EvaluationMode mode);
const char *to_string(EnsembleSource source);

/// Parameters shared by every Monte Carlo experiment.
///
/// Trial t of an experiment at cardinality m draws its ensemble and input
/// state from seed.child(m).child(t), so results do not depend on the
/// number of worker threads.
struct ExperimentConfig {
    size_t d = 2;
    PExponent p{1};
    PExponent r{2};  // companion exponent; defaults to p + 1
    double epsilon = 0.5;
    size_t m = 4;
    size_t m_min = 0;  // sweep range; 0 selects d
    size_t m_max = 0;  // 0 selects d * d
    double grid_ratio = 1.3;
    size_t trials = 30;
    size_t states_per_trial = 50;
    Seed seed;
    EvaluationMode mode = EvaluationMode::sample_evidence;
    EnsembleSource source = EnsembleSource::haar;
    size_t net_budget = 2000;
    bool full_grid = false;  // sweep past the first success
    size_t threads = 1;

    /// Throws std::invalid_argument on inconsistent parameters.
    void validate() const;
    size_t sweep_m_min() const;
    size_t sweep_m_max() const;
};

/// p + 1 (the companion exponent used when none is given).
PExponent default_companion(PExponent p);

/// The ensemble for trial `trial` at cardinality `m`.
UnitaryEnsemble trial_ensemble(const ExperimentConfig &cfg, size_t m, size_t trial);
/// Seed for the input state(s) of a trial.
Seed trial_state_seed(const ExperimentConfig &cfg, size_t m, size_t trial);

/// Y over cfg.trials independent (ensemble, state) draws at cardinality cfg.m.
std::vector<double> sample_deviations(const ExperimentConfig &cfg);

struct MeanEstimate {
    double mean = 0;
    double std_error = 0;
};
MeanEstimate mean_with_error(std::span<const double> values);

/// Upper bound (d^(1/p)/m^p + r/(m^(p-1) d^(1/p)))^(1/r) in its general form.
double expected_deviation_bound(size_t d, size_t m, PExponent p, PExponent r);
/// Closed forms worked out for p = 1 (sqrt(d/m)) and p = 2
/// ((sqrt(d)/m^2 + 3/(m sqrt(d)))^(1/3)); empty for other p.
std::optional<double> expected_deviation_worked_bound(size_t d, size_t m, PExponent p);

struct ExpectedDeviationEstimate {
    double mean_y = 0;
    double std_error = 0;
    double general_bound = 0;
    std::optional<double> worked_bound;
    double lemma_bound = 0;  // worked bound when available, else general
    bool within = false;     // mean_y <= lemma_bound + 2 std_error
    bool within_general = false;
    std::optional<bool> within_worked;
    // d ||R(psi)||_2^2 - 1, whose mean is at most d/m (checked for every p).
    double mean_purity_excess = 0;
    double purity_excess_std_error = 0;
    bool purity_chain_holds = false;  // mean <= d/m + 3 std_error
};
ExpectedDeviationEstimate estimate_expected_deviation(const ExperimentConfig &cfg);

/// |Y - Y'| where Y' uses the ensemble with member `index` replaced.
double deviation_change(const RandomizingChannel &channel, const PureState &psi, size_t index,
                        const ComplexMatrix &replacement, PExponent p);

/// 2^(1/p)/m.
double bounded_difference_constant(size_t m, PExponent p);

struct BoundedDifferenceCheck {
    double max_delta = 0;
    double bound = 0;
    bool holds = false;
    size_t replacements = 0;
};
BoundedDifferenceCheck check_bounded_difference(const ExperimentConfig &cfg, size_t replacements);

/// 2 exp(-2 t^2 / sum c_i^2) with c_i = 2^(1/p)/m, i.e. 2 exp(-m t^2 2^(1-2/p)).
double mcdiarmid_bound(size_t m, PExponent p, double t);
/// The same exponent read with base-2 exponentials.
double mcdiarmid_bound_base2(size_t m, PExponent p, double t);

struct McDiarmidTail {
    double t = 0;
    double empirical_tail = 0;
    double mean_y = 0;
    double bound = 0;
    double bound_base2 = 0;
    double std_error = 0;  // binomial, at min(bound, 1)
    bool within = false;   // empirical_tail <= bound + 3 std_error
    size_t trials = 0;
};
McDiarmidTail mcdiarmid_tail(const ExperimentConfig &cfg, double t);
/// Tail counts for several t over the same simulated Y values.
std::vector<McDiarmidTail> mcdiarmid_tails(std::span<const double> deviations, size_t m, PExponent p,
                                           std::span<const double> ts);

struct CardinalityFormulas {
    double theorem1_m = 0;      // c_p d / eps^2 log2(10 d^((p-1)/p) / eps)
    double theorem1_log_argument = 0;
    double hlsw_m = 0;          // 134 d log2(d) / eps^2
    double dn_m = 0;            // 37 d / eps^2 log2(15 / eps)
    double aubrun_m = 0;        // c d / eps^2 with c = c_p
};
CardinalityFormulas evaluate_cardinality_formulas(size_t d, double epsilon, PExponent p, double c_p);
/// Symbolic form of the log argument, e.g. "10/eps" at p = 1.
std::string theorem1_log_argument_text(PExponent p);

struct SweepPoint {
    size_t m = 0;
    size_t trials = 0;
    size_t passes = 0;
    double pass_fraction = 0;
    double mean_y = 0;
    double max_y = 0;
    double std_error = 0;
};

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

struct SweepReport {
    ExperimentConfig config;
    double success_fraction = 0.9;
    std::vector<SweepPoint> points;
    std::optional<size_t> m_star;
    std::optional<double> pass_fraction_at_m_star;
    std::optional<size_t> m_previous;  // grid point before m_star
    std::optional<double> pass_fraction_previous;
    size_t net_size = 0;  // net mode only
    double threshold = 0;
    double theorem1_shape = 0;  // theorem1_m at c_p = 1
    std::optional<double> fitted_c_p;
    std::optional<double> theory_m;  // fitted_c_p * theorem1_shape
    std::optional<double> fitted_aubrun_constant;
    CardinalityFormulas baselines;  // at c_p = 1
    BoundedDifferenceCheck bounded_difference;
    std::vector<McDiarmidTail> tail_observations;
    std::vector<std::string> annotations;
};

/// Cardinalities visited by a sweep: m_min, then max(prev + 1, ceil(prev * ratio)),
/// up to m_max.
std::vector<size_t> sweep_grid(size_t m_min, size_t m_max, double ratio);

/// Smallest grid m whose trial pass fraction reaches success_fraction. A trial
/// passes when every evaluated state meets its threshold (net points at
/// half threshold, sampled states at the full threshold).
SweepReport minimal_m_sweep(const ExperimentConfig &cfg, double success_fraction);

/// Notes attached to every report about ambiguous constants.
std::vector<std::string> report_annotations();

}  // namespace randomizer

#endif
