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

#include "randomizer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace randomizer {

namespace {

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }
}

double frobenius_squared(const ComplexMatrix &a) {
    double total = 0;
    for (const auto &z : a.entries()) {
        total += std::norm(z);
    }
    return total;
}

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTolerance = 1e-14;
constexpr int kMaxSweeps = 100;

ComplexMatrix symmetrized(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_eigen: matrix must be square");
    }
    double defect = hermiticity_defect(a);
    if (defect > kHermitianTolerance * std::max(1.0, max_abs(a))) {
        throw std::invalid_argument(
            "hermitian_eigen: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (size_t i = 0; i < n; i++) {
        h(i, i) = a(i, i).real();
        for (size_t j = i + 1; j < n; j++) {
            Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

double off_diagonal_squared(const ComplexMatrix &a) {
    double total = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = i + 1; j < a.cols(); j++) {
            total += 2 * std::norm(a(i, j));
        }
    }
    return total;
}

// Cyclic Jacobi. Each rotation is W = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// on the (p, q) plane, which first makes a_pq real and then annihilates it.
std::vector<double> jacobi(ComplexMatrix a, ComplexMatrix *vectors) {
    size_t n = a.rows();
    double target = kOffDiagonalTolerance * kOffDiagonalTolerance * frobenius_squared(a);
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        if (off_diagonal_squared(a) <= target) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex g = a(p, q);
                double h = std::abs(g);
                if (h == 0) {
                    continue;
                }
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                Complex phase = g / h;  // e^{i phi}
                double theta = (aqq - app) / (2 * h);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                Complex conj_phase = std::conj(phase);

                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = c * akp - s * conj_phase * akq;
                    a(k, q) = s * akp + c * conj_phase * akq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, p) = app - t * h;
                a(q, q) = aqq + t * h;
                a(p, q) = 0;
                a(q, p) = 0;

                if (vectors != nullptr) {
                    ComplexMatrix &v = *vectors;
                    for (size_t k = 0; k < n; k++) {
                        Complex vkp = v(k, p);
                        Complex vkq = v(k, q);
                        v(k, p) = c * vkp - s * conj_phase * vkq;
                        v(k, q) = s * vkp + c * conj_phase * vkq;
                    }
                }
            }
        }
    }
    std::vector<double> values(n);
    for (size_t i = 0; i < n; i++) {
        values[i] = a(i, i).real();
    }
    return values;
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("entry count does not match rows * cols");
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    require_finite(m.entries());
    return m;
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "add");
    ComplexMatrix out = a;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) += b(i, j);
        }
    }
    return out;
}

ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "subtract");
    ComplexMatrix out = a;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) -= b(i, j);
        }
    }
    return out;
}

ComplexMatrix scale(const ComplexMatrix &a, Complex factor) {
    ComplexMatrix out = a;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) *= factor;
        }
    }
    require_finite(out.entries());
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("trace: matrix must be square");
    }
    Complex total = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        total += a(i, i);
    }
    return total;
}

std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v) {
    if (v.size() != a.cols()) {
        throw std::invalid_argument("apply: vector length differs from column count");
    }
    std::vector<Complex> out(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        Complex acc = 0;
        for (size_t j = 0; j < a.cols(); j++) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

ComplexMatrix outer(std::span<const Complex> v) {
    ComplexMatrix out(v.size(), v.size());
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            out(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return out;
}

double max_abs(const ComplexMatrix &a) {
    double best = 0;
    for (const auto &z : a.entries()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0;
    for (size_t i = 0; i < a.entries().size(); i++) {
        best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return best;
}

double hermiticity_defect(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermiticity_defect: matrix must be square");
    }
    double best = 0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = i; j < a.cols(); j++) {
            best = std::max(best, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return best;
}

double unitarity_defect(const ComplexMatrix &u) {
    if (!u.is_square()) {
        throw std::invalid_argument("unitarity_defect: matrix must be square");
    }
    return max_abs_diff(multiply(adjoint(u), u), ComplexMatrix::identity(u.rows()));
}

HermitianEigenSystem hermitian_eigen(const ComplexMatrix &a) {
    ComplexMatrix h = symmetrized(a);
    size_t n = h.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    std::vector<double> values = jacobi(std::move(h), &v);

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return values[x] < values[y]; });

    HermitianEigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (size_t k = 0; k < n; k++) {
        out.eigenvalues[k] = values[order[k]];
        for (size_t i = 0; i < n; i++) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) {
    std::vector<double> values = jacobi(symmetrized(a), nullptr);
    std::sort(values.begin(), values.end());
    return values;
}

QrFactors qr_unitary(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("qr_unitary: matrix must be square");
    }
    size_t n = a.rows();
    double rank_floor = 1e-12 * max_abs(a);
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(n);
    std::vector<Complex> v(n);

    for (size_t k = 0; k < n; k++) {
        double norm_x = 0;
        for (size_t i = k; i < n; i++) {
            norm_x += std::norm(r(i, k));
        }
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0) {
            throw RankDeficientError("qr_unitary: zero pivot column");
        }
        Complex x0 = r(k, k);
        Complex phase = std::abs(x0) == 0 ? Complex{1} : x0 / std::abs(x0);
        Complex alpha = -phase * norm_x;

        double v_norm2 = 0;
        for (size_t i = k; i < n; i++) {
            v[i] = r(i, k);
        }
        v[k] -= alpha;
        for (size_t i = k; i < n; i++) {
            v_norm2 += std::norm(v[i]);
        }

        if (v_norm2 > 0) {
            for (size_t j = k; j < n; j++) {
                Complex w = 0;
                for (size_t i = k; i < n; i++) {
                    w += std::conj(v[i]) * r(i, j);
                }
                w *= 2 / v_norm2;
                for (size_t i = k; i < n; i++) {
                    r(i, j) -= v[i] * w;
                }
            }
            for (size_t row = 0; row < n; row++) {
                Complex w = 0;
                for (size_t i = k; i < n; i++) {
                    w += q(row, i) * v[i];
                }
                w *= 2 / v_norm2;
                for (size_t i = k; i < n; i++) {
                    q(row, i) -= w * std::conj(v[i]);
                }
            }
        }
        r(k, k) = alpha;
        for (size_t i = k + 1; i < n; i++) {
            r(i, k) = 0;
        }
    }

    for (size_t k = 0; k < n; k++) {
        double magnitude = std::abs(r(k, k));
        if (!(magnitude >= rank_floor) || magnitude == 0) {
            throw RankDeficientError("qr_unitary: |r_kk| below rank tolerance at k=" + std::to_string(k));
        }
        Complex phase = r(k, k) / magnitude;
        for (size_t i = 0; i < n; i++) {
            q(i, k) *= phase;
        }
        Complex conj_phase = std::conj(phase);
        for (size_t j = k; j < n; j++) {
            r(k, j) *= conj_phase;
        }
        r(k, k) = magnitude;
    }
    return {std::move(q), std::move(r)};
}

}  // namespace randomizer
