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

// Reference computations for tests. Everything here goes through Eigen or
// through closed forms, never through the library's own decompositions.

#ifndef RANDOMIZER_TESTS_ORACLE_HPP
#define RANDOMIZER_TESTS_ORACLE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "randomizer/linalg.hpp"

namespace oracle {

using randomizer::Complex;
using randomizer::ComplexMatrix;

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix &a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
        }
    }
    return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd &a) {
    ComplexMatrix out(static_cast<size_t>(a.rows()), static_cast<size_t>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out(static_cast<size_t>(i), static_cast<size_t>(j)) = a(i, j);
        }
    }
    return out;
}

inline std::vector<double> singular_values(const ComplexMatrix &a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
    const auto &s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

// p = +inf gives the operator norm.
inline double schatten(const ComplexMatrix &a, double p) {
    std::vector<double> s = singular_values(a);
    if (std::isinf(p)) {
        return s.empty() ? 0.0 : s.front();
    }
    double total = 0;
    for (double x : s) {
        total += std::pow(x, p);
    }
    return std::pow(total, 1.0 / p);
}

inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), Eigen::EigenvaluesOnly);
    const auto &v = es.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

// Deterministic test matrices from std::mt19937_64, unrelated to the
// library's counter-based generator.
inline ComplexMatrix random_matrix(size_t rows, size_t cols, std::mt19937_64 &gen, bool complex_entries = true) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix out(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            out(i, j) = Complex(n(gen), complex_entries ? n(gen) : 0.0);
        }
    }
    return out;
}

inline ComplexMatrix random_unitary(size_t d, std::mt19937_64 &gen) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(random_matrix(d, d, gen)));
    Eigen::MatrixXcd q = qr.householderQ();
    return from_eigen(q);
}

inline std::vector<Complex> random_state(size_t d, std::mt19937_64 &gen) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> v(d);
    double norm = 0;
    for (auto &z : v) {
        z = Complex(n(gen), n(gen));
        norm += std::norm(z);
    }
    for (auto &z : v) {
        z /= std::sqrt(norm);
    }
    return v;
}

// Direct sum (1/m) sum U psi psi^dagger U^dagger with Eigen products.
inline ComplexMatrix mixed_output(const std::vector<ComplexMatrix> &unitaries, const std::vector<Complex> &psi) {
    size_t d = psi.size();
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d));
    for (size_t i = 0; i < d; i++) {
        v(static_cast<Eigen::Index>(i)) = psi[i];
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (const auto &u : unitaries) {
        Eigen::VectorXcd w = to_eigen(u) * v;
        rho += w * w.adjoint();
    }
    rho /= static_cast<double>(unitaries.size());
    return from_eigen(rho);
}

// ||rho - I/d||_p through Eigen.
inline double distance_to_mixed(const ComplexMatrix &rho, double p) {
    Eigen::MatrixXcd diff = to_eigen(rho);
    diff -= Eigen::MatrixXcd::Identity(diff.rows(), diff.cols()) / static_cast<double>(diff.rows());
    return schatten(from_eigen(diff), p);
}

// Kolmogorov-Smirnov statistic of samples against a CDF.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf) {
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double worst = 0;
    for (size_t i = 0; i < samples.size(); i++) {
        double f = cdf(samples[i]);
        worst = std::max({worst, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)});
    }
    return worst;
}

}  // namespace oracle

#endif
