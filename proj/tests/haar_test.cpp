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

#include <set>

#include "oracle.hpp"
#include "randomizer/haar.hpp"

namespace {

using namespace randomizer;

TEST(Rng, CounterStreamIsPureFunctionOfSeed) {
    RandomStream a(Seed{5, 9}), b(Seed{5, 9}), c(Seed{5, 10});
    for (int i = 0; i < 100; i++) {
        uint64_t x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        EXPECT_NE(x, c.next_u64());
    }
    EXPECT_EQ(a.draws(), 100u);
    std::set<Seed> children;
    for (uint64_t k = 0; k < 1000; k++) {
        children.insert(Seed{5, 9}.child(k));
    }
    EXPECT_EQ(children.size(), 1000u);
    EXPECT_NE((Seed{5, 9}.child(3)), (Seed{5, 10}.child(3)));
}

TEST(Rng, UniformAndBelow) {
    RandomStream s(Seed{1, 0});
    double sum = 0;
    std::vector<int> counts(7);
    for (int i = 0; i < 70000; i++) {
        double u = s.uniform();
        ASSERT_GT(u, 0);
        ASSERT_LT(u, 1);
        sum += u;
        counts[s.below(7)]++;
    }
    EXPECT_NEAR(sum / 70000, 0.5, 3 * std::sqrt(1.0 / 12 / 70000));
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 4 * std::sqrt(10000.0));
    }
}

TEST(Rng, NormalMoments) {
    RandomStream s(Seed{2, 0});
    const int n = 100000;
    double m1 = 0, m2 = 0, c2 = 0;
    for (int i = 0; i < n; i++) {
        double x = s.normal();
        m1 += x;
        m2 += x * x;
        c2 += std::norm(s.complex_normal());
    }
    EXPECT_NEAR(m1 / n, 0, 4 / std::sqrt(n));
    EXPECT_NEAR(m2 / n, 1, 4 * std::sqrt(2.0 / n));
    EXPECT_NEAR(c2 / n, 1, 4 * std::sqrt(1.0 / n));
}

TEST(HaarUnitary, DeterministicAndUnitary) {
    ComplexMatrix a = sample_haar_unitary(4, Seed{7, 0});
    ComplexMatrix b = sample_haar_unitary(4, Seed{7, 0});
    EXPECT_EQ(a, b);
    EXPECT_NE(a, sample_haar_unitary(4, Seed{7, 1}));
    EXPECT_LE(unitarity_defect(a), 1e-9);

    UnitaryEnsemble e1 = sample_ensemble(8, 16, Seed{3, 4});
    UnitaryEnsemble e2 = sample_ensemble(8, 16, Seed{3, 4});
    ASSERT_EQ(e1.cardinality(), 16u);
    for (size_t i = 0; i < 16; i++) {
        EXPECT_EQ(e1.members[i], e2.members[i]);
        EXPECT_EQ(e1.members[i], sample_haar_unitary(8, Seed{3, 4}.child(i)));
    }
    EXPECT_NO_THROW(e1.validate());
}

TEST(HaarUnitary, OneDimensionalIsAPhase) {
    for (uint64_t k = 0; k < 10; k++) {
        ComplexMatrix u = sample_haar_unitary(1, Seed{k, 0});
        EXPECT_NEAR(std::abs(u(0, 0)), 1, 1e-15);
    }
}

TEST(HaarUnitary, FirstEntryMarginalMean) {
    const int n = 20000;
    RandomStream s(Seed{8, 0});
    double sum = 0, sq = 0;
    for (int i = 0; i < n; i++) {
        double x = std::norm(sample_haar_unitary(2, s)(0, 0));
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    double sigma = std::sqrt((sq / n - mean * mean) / n);
    EXPECT_NEAR(mean, 0.5, 3 * sigma);
}

TEST(HaarUnitary, LeftInvarianceKolmogorovSmirnov) {
    // |U_11|^2 is Beta(1, d-1): CDF 1 - (1 - x)^(d-1).
    const size_t d = 4;
    const int n = 10000;
    std::mt19937_64 gen(99);
    ComplexMatrix v = oracle::random_unitary(d, gen);
    RandomStream s(Seed{9, 0});
    std::vector<double> plain, rotated;
    for (int i = 0; i < n; i++) {
        ComplexMatrix u = sample_haar_unitary(d, s);
        plain.push_back(std::norm(u(0, 0)));
        rotated.push_back(std::norm(multiply(v, u)(0, 0)));
    }
    auto cdf = [&](double x) { return 1 - std::pow(1 - x, static_cast<double>(d - 1)); };
    EXPECT_LE(oracle::ks_statistic(plain, cdf), 0.02);
    EXPECT_LE(oracle::ks_statistic(rotated, cdf), 0.02);
}

TEST(HaarUnitary, FirstEntryHasZeroMean) {
    const int n = 20000;
    RandomStream s(Seed{10, 0});
    Complex sum = 0;
    for (int i = 0; i < n; i++) {
        sum += sample_haar_unitary(3, s)(0, 0);
    }
    EXPECT_LE(std::abs(sum / static_cast<double>(n)), 4 / std::sqrt(3.0 * n));
}

TEST(PureStates, NormalizationAndMarginal) {
    for (size_t d : {1u, 2u, 16u}) {
        PureState psi = sample_pure_state(d, Seed{11, d});
        double norm = 0;
        for (auto z : psi.amplitudes()) {
            norm += std::norm(z);
        }
        EXPECT_NEAR(norm, 1, 1e-12);
    }
    const int n = 20000;
    RandomStream s(Seed{12, 0});
    double sum = 0, sq = 0;
    for (int i = 0; i < n; i++) {
        double x = std::norm(sample_pure_state(2, s).amplitudes()[0]);
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    EXPECT_NEAR(mean, 0.5, 3 * std::sqrt((sq / n - mean * mean) / n));
}

TEST(PureStates, Validation) {
    EXPECT_THROW(PureState({Complex(1), Complex(1)}), std::invalid_argument);
    EXPECT_THROW(PureState::normalized({Complex(0), Complex(0)}), std::invalid_argument);
    PureState psi = PureState::normalized({Complex(3), Complex(0, 4)});
    EXPECT_NEAR(std::abs(psi.amplitudes()[1]), 0.8, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(psi, psi)), 1, 1e-15);
}

TEST(Isotropy, PilotConstantAtTwoDimensions) {
    // n * deviation^2 has mean 1 - 1/d; check the 4/sqrt(n) tolerance against
    // the spread of 200 independent estimates.
    const size_t n = 1000;
    double worst = 0, mean_sq = 0;
    for (uint64_t k = 0; k < 200; k++) {
        IsotropyCheck c = check_isotropy(2, n, PureState::basis(2, 0), Seed{13, k});
        double scaled = c.deviation * std::sqrt(static_cast<double>(n));
        worst = std::max(worst, scaled);
        mean_sq += scaled * scaled / 200;
        EXPECT_TRUE(c.pass);
    }
    EXPECT_NEAR(mean_sq, 0.5, 0.1);
    EXPECT_LT(worst, 2.5);
}

TEST(Isotropy, PassesAtTenThousandSamples) {
    for (size_t d : {2u, 16u}) {
        IsotropyCheck c = check_isotropy(d, 10000, sample_pure_state(d, Seed{14, d}), Seed{15, d});
        EXPECT_TRUE(c.pass) << "d=" << d << " deviation=" << c.deviation;
        EXPECT_DOUBLE_EQ(c.tolerance, 0.04);
    }
    EXPECT_THROW(check_isotropy(2, 50, PureState::basis(2, 0), Seed{}), std::invalid_argument);
}

}  // namespace
