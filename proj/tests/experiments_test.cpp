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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "randomizer/experiments.hpp"

namespace {

using namespace randomizer;

ExperimentConfig haar_config(size_t d, size_t m, double p, uint64_t seed) {
    ExperimentConfig cfg;
    cfg.d = d;
    cfg.m = m;
    cfg.p = PExponent(p);
    if (!cfg.p.is_infinite()) {
        cfg.r = default_companion(cfg.p);
    }
    cfg.seed = Seed{seed, 0};
    return cfg;
}

TEST(Config, Validation) {
    ExperimentConfig cfg = haar_config(4, 8, 1, 1);
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.sweep_m_min(), 4u);
    EXPECT_EQ(cfg.sweep_m_max(), 16u);
    ExperimentConfig bad = cfg;
    bad.r = PExponent(1);
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.epsilon = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.trials = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.source = EnsembleSource::pauli_fixture;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.mode = EvaluationMode::net_certify;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_DOUBLE_EQ(default_companion(PExponent(1.5)).value(), 2.5);
    EXPECT_THROW(default_companion(PExponent::infinity()), std::invalid_argument);
}

TEST(Formulas, WorkedValues) {
    auto f = evaluate_cardinality_formulas(16, 0.5, PExponent(1), 37);
    EXPECT_NEAR(f.theorem1_m, 2368 * std::log2(20.0), 1e-9);
    EXPECT_NEAR(f.theorem1_log_argument, 20, 1e-12);
    EXPECT_NEAR(f.hlsw_m, 34304, 1e-9);
    EXPECT_NEAR(f.dn_m, 37 * 16 / 0.25 * std::log2(30.0), 1e-9);
    EXPECT_NEAR(f.aubrun_m, 37 * 16 / 0.25, 1e-9);
    EXPECT_NEAR(evaluate_cardinality_formulas(8, 0.8, PExponent(1), 1).dn_m, 37 * 8 / 0.64 * std::log2(18.75),
                1e-9);
}

TEST(Formulas, LogArgument) {
    EXPECT_EQ(theorem1_log_argument_text(PExponent(1)), "10/eps");
    EXPECT_EQ(theorem1_log_argument_text(PExponent::infinity()), "10*d/eps");
    EXPECT_EQ(theorem1_log_argument_text(PExponent(2)), "10*d^((2-1)/2)/eps");
    EXPECT_NEAR(evaluate_cardinality_formulas(9, 0.5, PExponent(2), 1).theorem1_log_argument, 60, 1e-12);
    EXPECT_NEAR(evaluate_cardinality_formulas(9, 0.5, PExponent::infinity(), 1).theorem1_log_argument, 180, 1e-12);
    EXPECT_THROW(evaluate_cardinality_formulas(1, 0.5, PExponent(1), 1), std::invalid_argument);
    EXPECT_THROW(evaluate_cardinality_formulas(4, 0, PExponent(1), 1), std::invalid_argument);
}

TEST(ExpectedDeviation, ClosedFormBounds) {
    EXPECT_NEAR(*expected_deviation_worked_bound(16, 64, PExponent(1)), 0.5, 1e-15);
    EXPECT_NEAR(*expected_deviation_worked_bound(16, 64, PExponent(2)), std::cbrt(4.0 / 4096 + 3.0 / 256), 1e-15);
    EXPECT_NEAR(*expected_deviation_worked_bound(16, 64, PExponent(2)), 0.229, 5e-3);
    EXPECT_FALSE(expected_deviation_worked_bound(16, 64, PExponent(3)).has_value());
    // General form at (p, r) = (1, 2): (d/m + 2/d)^(1/2).
    EXPECT_NEAR(expected_deviation_bound(16, 64, PExponent(1), PExponent(2)), std::sqrt(0.25 + 0.125), 1e-15);
    EXPECT_NEAR(expected_deviation_bound(16, 64, PExponent(2), PExponent(3)),
                std::cbrt(4.0 / 4096 + 3.0 / (64 * 4)), 1e-15);
}

TEST(ExpectedDeviation, PauliFixtureGivesZero) {
    ExperimentConfig cfg = haar_config(2, 4, 1, 2);
    cfg.source = EnsembleSource::pauli_fixture;
    auto est = estimate_expected_deviation(cfg);
    EXPECT_LE(est.mean_y, 1e-12);
    EXPECT_TRUE(est.within);
    EXPECT_NEAR(est.lemma_bound, std::sqrt(0.5), 1e-15);
}

TEST(ExpectedDeviation, HaarWithinBounds) {
    for (double p : {1.0, 2.0}) {
        ExperimentConfig cfg = haar_config(16, 64, p, 3);
        cfg.trials = 200;
        auto est = estimate_expected_deviation(cfg);
        EXPECT_TRUE(est.within) << "p=" << p << " mean=" << est.mean_y;
        ASSERT_TRUE(est.within_worked.has_value());
        EXPECT_TRUE(*est.within_worked);
        EXPECT_TRUE(est.purity_chain_holds);
        EXPECT_GT(est.std_error, 0);
    }
    ExperimentConfig few = haar_config(4, 8, 1, 3);
    few.trials = 10;
    EXPECT_THROW(estimate_expected_deviation(few), std::invalid_argument);
}

TEST(ExpectedDeviation, MatchesOracleDeviations) {
    ExperimentConfig cfg = haar_config(3, 5, 1.5, 4);
    auto ys = sample_deviations(cfg);
    ASSERT_EQ(ys.size(), cfg.trials);
    for (size_t t = 0; t < 5; t++) {
        UnitaryEnsemble e = trial_ensemble(cfg, cfg.m, t);
        PureState psi = sample_pure_state(cfg.d, trial_state_seed(cfg, cfg.m, t));
        std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
        EXPECT_NEAR(ys[t], oracle::distance_to_mixed(oracle::mixed_output(e.members, amps), 1.5), 1e-10);
    }
}

TEST(BoundedDifference, SelfReplacementAndSaturation) {
    ComplexMatrix id = ComplexMatrix::identity(2);
    RandomizingChannel twice(UnitaryEnsemble{2, {id, id}, Seed{}});
    PureState psi = PureState::basis(2, 0);
    EXPECT_NEAR(deviation_change(twice, psi, 1, id, PExponent(1)), 0, 1e-15);
    // X maps |0> to |1>; Y goes from 1 (pure) to 0 (maximally mixed).
    ComplexMatrix x{{0, 1}, {1, 0}};
    double delta = deviation_change(twice, psi, 1, x, PExponent(1));
    EXPECT_NEAR(delta, 1, 1e-12);
    EXPECT_DOUBLE_EQ(bounded_difference_constant(2, PExponent(1)), 1);
    EXPECT_GE(delta, 0.99 * bounded_difference_constant(2, PExponent(1)));
}

TEST(BoundedDifference, HoldsOnRandomReplacements) {
    for (auto [d, m, p] : {std::tuple{2u, 2u, 1.0}, {8u, 32u, 1.0}, {8u, 32u, 1.5}, {8u, 32u, 2.0}}) {
        auto check = check_bounded_difference(haar_config(d, m, p, 5), 200);
        EXPECT_TRUE(check.holds) << d << " " << m << " " << p;
        EXPECT_NEAR(check.bound, std::pow(2.0, 1 / p) / m, 1e-15);
        EXPECT_EQ(check.replacements, 200u);
    }
    EXPECT_THROW(check_bounded_difference(haar_config(4, 1, 1, 5), 10), std::invalid_argument);
}

TEST(McDiarmid, BoundValues) {
    EXPECT_NEAR(mcdiarmid_bound(64, PExponent(1), 0.1), 2 * std::exp(-64 * 0.01 * 0.5), 1e-15);
    EXPECT_NEAR(mcdiarmid_bound(64, PExponent(2), 0.2), 2 * std::exp(-64 * 0.04), 1e-15);
    EXPECT_NEAR(mcdiarmid_bound_base2(64, PExponent(1), 0.1), 2 * std::exp2(-64 * 0.01 * 0.5), 1e-15);
    EXPECT_NEAR(mcdiarmid_bound(64, PExponent(1), 1e-9), 2, 1e-9);
}

TEST(McDiarmid, TailsFromKnownSample) {
    std::vector<double> ys{0, 0, 0, 1};
    const double ts[] = {0.5, 2.0};
    auto tails = mcdiarmid_tails(ys, 4, PExponent(1), ts);
    EXPECT_DOUBLE_EQ(tails[0].mean_y, 0.25);
    EXPECT_DOUBLE_EQ(tails[0].empirical_tail, 0.25);
    EXPECT_DOUBLE_EQ(tails[1].empirical_tail, 0);
    EXPECT_TRUE(tails[1].within);
}

TEST(McDiarmid, HaarTailWithinBound) {
    ExperimentConfig cfg = haar_config(8, 64, 1, 6);
    cfg.trials = 500;
    auto tail = mcdiarmid_tail(cfg, 0.2);
    EXPECT_TRUE(tail.within);
    EXPECT_EQ(tail.trials, 500u);
}

TEST(Sweep, Grid) {
    std::vector<size_t> expected{2, 3, 4, 6, 8, 11, 15, 20};
    EXPECT_EQ(sweep_grid(2, 20, 1.3), expected);
    EXPECT_EQ(sweep_grid(5, 5, 1.3), std::vector<size_t>{5});
    std::vector<size_t> doubling{1, 2, 4, 8};
    EXPECT_EQ(sweep_grid(1, 10, 2), doubling);
    EXPECT_THROW(sweep_grid(5, 4, 1.3), std::invalid_argument);
    EXPECT_THROW(sweep_grid(1, 4, 1.0), std::invalid_argument);
}

TEST(Sweep, PauliFixtureFindsFour) {
    ExperimentConfig cfg = haar_config(2, 4, 1, 7);
    cfg.source = EnsembleSource::pauli_fixture;
    cfg.trials = 5;
    cfg.states_per_trial = 20;
    for (double eps : {0.01, 0.3}) {
        cfg.epsilon = eps;
        auto report = minimal_m_sweep(cfg, 0.9);
        ASSERT_TRUE(report.m_star.has_value());
        EXPECT_EQ(*report.m_star, 4u);
        EXPECT_DOUBLE_EQ(*report.pass_fraction_at_m_star, 1.0);
        ASSERT_TRUE(report.pass_fraction_previous.has_value());
        EXPECT_LT(*report.pass_fraction_previous, 0.9);
    }
    // {I, X, Y} sends the Bloch vector r to (r_x, r_y, -r_z)/3, so at p = 1
    // the worst deviation is 1/3 and any epsilon above it stops at m = 3.
    cfg.epsilon = 0.5;
    auto early = minimal_m_sweep(cfg, 0.9);
    ASSERT_TRUE(early.m_star.has_value());
    EXPECT_EQ(*early.m_star, 3u);
    EXPECT_LE(early.points.back().max_y, 1.0 / 3 + 1e-12);
}

TEST(Sweep, BracketingAndMonotoneMean) {
    ExperimentConfig cfg = haar_config(4, 4, 1, 8);
    cfg.epsilon = 0.8;
    cfg.trials = 20;
    cfg.states_per_trial = 20;
    cfg.full_grid = true;
    auto report = minimal_m_sweep(cfg, 0.9);
    ASSERT_TRUE(report.m_star.has_value());
    EXPECT_GE(*report.pass_fraction_at_m_star, 0.9);
    if (report.m_previous) {
        EXPECT_LT(*report.pass_fraction_previous, 0.9);
    }
    ASSERT_EQ(report.points.size(), sweep_grid(4, 16, 1.3).size());
    for (size_t i = 1; i < report.points.size(); i++) {
        const auto &a = report.points[i - 1], &b = report.points[i];
        double combined = std::hypot(a.std_error, b.std_error);
        EXPECT_LE(b.mean_y, a.mean_y + 2 * combined) << "m=" << b.m;
    }
    EXPECT_TRUE(report.bounded_difference.holds);
    EXPECT_EQ(report.tail_observations.size(), 3u);
    ASSERT_TRUE(report.fitted_c_p.has_value());
    EXPECT_NEAR(*report.theory_m, static_cast<double>(*report.m_star), 1e-9);
}

TEST(Sweep, NetModeAtTwoDimensions) {
    ExperimentConfig cfg = haar_config(2, 2, 1, 9);
    cfg.mode = EvaluationMode::net_certify;
    cfg.epsilon = 1.0;
    cfg.trials = 10;
    cfg.m_max = 40;
    cfg.net_budget = 300;
    auto report = minimal_m_sweep(cfg, 0.9);
    EXPECT_GT(report.net_size, 0u);
    EXPECT_DOUBLE_EQ(report.threshold, 0.5);
    ASSERT_TRUE(report.m_star.has_value());
}

TEST(Sweep, ExhaustedRangeStillReports) {
    ExperimentConfig cfg = haar_config(8, 8, 1, 10);
    cfg.epsilon = 0.05;
    cfg.trials = 3;
    cfg.states_per_trial = 5;
    cfg.m_max = 12;
    auto report = minimal_m_sweep(cfg, 0.9);
    EXPECT_FALSE(report.m_star.has_value());
    EXPECT_FALSE(report.fitted_c_p.has_value());
    EXPECT_EQ(report.points.size(), sweep_grid(8, 12, 1.3).size());
}

TEST(Sweep, ThreadCountDoesNotChangeReport) {
    ExperimentConfig cfg = haar_config(4, 4, 2, 11);
    cfg.trials = 12;
    cfg.states_per_trial = 10;
    auto one = minimal_m_sweep(cfg, 0.9);
    cfg.threads = 6;
    auto many = minimal_m_sweep(cfg, 0.9);
    ASSERT_EQ(one.points.size(), many.points.size());
    for (size_t i = 0; i < one.points.size(); i++) {
        EXPECT_EQ(one.points[i].mean_y, many.points[i].mean_y);
        EXPECT_EQ(one.points[i].passes, many.points[i].passes);
    }
}

TEST(FitLine, ExactAndNoisy) {
    std::vector<double> xs{1, 2, 3, 4}, ys{3, 5, 7, 9};
    auto fit = fit_line(xs, ys);
    EXPECT_NEAR(fit.slope, 2, 1e-12);
    EXPECT_NEAR(fit.intercept, 1, 1e-12);
    EXPECT_NEAR(fit.r_squared, 1, 1e-12);
    std::vector<double> flat{1, 1, 1, 1};
    EXPECT_THROW(fit_line(flat, ys), std::invalid_argument);
}

}  // namespace
