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

#include "randomizer/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace randomizer {

PExponent::PExponent(double value) : value_(value) {
    if (std::isinf(value) && value > 0) {
        infinite_ = true;
        value_ = 1;
        return;
    }
    if (!(value >= 1) || !std::isfinite(value)) {
        throw std::invalid_argument("Schatten exponent must be >= 1 or infinity");
    }
}

PExponent PExponent::infinity() {
    PExponent p;
    p.infinite_ = true;
    return p;
}

PExponent PExponent::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo" || text == "INF" || text == "Infinity") {
        return infinity();
    }
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument("cannot parse Schatten exponent '" + std::string(text) + "'");
    }
    return PExponent(value);
}

double PExponent::value() const {
    if (infinite_) {
        throw std::logic_error("PExponent::value on infinity");
    }
    return value_;
}

double PExponent::reciprocal() const {
    return infinite_ ? 0.0 : 1.0 / value_;
}

std::string PExponent::to_string() const {
    if (infinite_) {
        return "inf";
    }
    std::ostringstream out;
    out.precision(17);
    out << value_;
    return out.str();
}

bool PExponent::operator<(const PExponent &other) const {
    if (infinite_) {
        return false;
    }
    return other.infinite_ || value_ < other.value_;
}

namespace {

bool is_hermitian(const ComplexMatrix &a) {
    return a.is_square() && hermiticity_defect(a) <= 1e-12 * std::max(1.0, max_abs(a));
}

void require_square(const ComplexMatrix &a, const char *op) {
    if (!a.is_square()) {
        throw std::invalid_argument(std::string(op) + ": matrix must be square");
    }
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix &a) {
    std::vector<double> s;
    if (is_hermitian(a)) {
        s = hermitian_eigenvalues(a);
        for (double &x : s) {
            x = std::abs(x);
        }
    } else {
        // Dilation [[0, A], [A^dagger, 0]] has eigenvalues +-s_i (and zeros).
        size_t r = a.rows(), c = a.cols(), n = r + c;
        ComplexMatrix h(n, n);
        for (size_t i = 0; i < r; i++) {
            for (size_t j = 0; j < c; j++) {
                h(i, r + j) = a(i, j);
                h(r + j, i) = std::conj(a(i, j));
            }
        }
        std::vector<double> eig = hermitian_eigenvalues(h);
        size_t k = std::min(r, c);
        s.assign(eig.end() - static_cast<std::ptrdiff_t>(k), eig.end());
        for (double &x : s) {
            x = std::max(0.0, x);
        }
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

double schatten_from_singular_values(std::span<const double> singular, PExponent p) {
    double top = 0;
    for (double s : singular) {
        top = std::max(top, std::abs(s));
    }
    if (p.is_infinite() || top == 0) {
        return top;
    }
    double exponent = p.value();
    if (exponent == 1) {
        double total = 0;
        for (double s : singular) {
            total += std::abs(s);
        }
        return total;
    }
    double total = 0;
    for (double s : singular) {
        total += std::pow(std::abs(s) / top, exponent);
    }
    return top * std::pow(total, 1 / exponent);
}

double schatten_norm(const ComplexMatrix &a, PExponent p) {
    require_square(a, "schatten_norm");
    if (!p.is_infinite() && p.value() == 2) {
        double total = 0;
        for (const auto &z : a.entries()) {
            total += std::norm(z);
        }
        return std::sqrt(total);
    }
    return schatten_from_singular_values(singular_values(a), p);
}

double schatten_norm_hermitian(const ComplexMatrix &a, PExponent p) {
    require_square(a, "schatten_norm_hermitian");
    std::vector<double> spectrum = hermitian_eigenvalues(a);
    return schatten_from_singular_values(spectrum, p);
}

InterpolationCheck check_interpolation(const ComplexMatrix &a, PExponent p) {
    require_square(a, "check_interpolation");
    std::vector<double> s = singular_values(a);
    InterpolationCheck out;
    out.operator_norm = schatten_from_singular_values(s, PExponent::infinity());
    out.p_norm = schatten_from_singular_values(s, p);
    out.trace_norm = schatten_from_singular_values(s, PExponent(1));
    out.holds = out.operator_norm <= out.p_norm + kInequalitySlack && out.p_norm <= out.trace_norm + kInequalitySlack;
    return out;
}

HoelderCheck check_hoelder(const ComplexMatrix &a, PExponent p, PExponent r) {
    require_square(a, "check_hoelder");
    if (!(p < r)) {
        throw std::invalid_argument("check_hoelder: requires r > p");
    }
    double d = static_cast<double>(a.rows());
    std::vector<double> s = singular_values(a);
    HoelderCheck out;
    out.r_norm = schatten_from_singular_values(s, r);
    out.p_norm = schatten_from_singular_values(s, p);
    out.upper = std::pow(d, p.reciprocal() - r.reciprocal()) * out.r_norm;
    out.holds = out.r_norm <= out.p_norm + kInequalitySlack && out.p_norm <= out.upper + kInequalitySlack;
    return out;
}

ReverseTriangleCheck check_reverse_triangle(const ComplexMatrix &a, const ComplexMatrix &b, PExponent p) {
    require_square(a, "check_reverse_triangle");
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("check_reverse_triangle: shape mismatch");
    }
    ReverseTriangleCheck out;
    out.gap = std::abs(schatten_norm(a, p) - schatten_norm(b, p));
    out.distance = schatten_norm(subtract(a, b), p);
    out.holds = out.gap <= out.distance + kInequalitySlack;
    return out;
}

void require_density_matrix(const ComplexMatrix &a, double tolerance) {
    if (!a.is_square()) {
        throw std::invalid_argument("density matrix must be square");
    }
    if (hermiticity_defect(a) > tolerance) {
        throw std::invalid_argument("density matrix must be Hermitian");
    }
    Complex tr = trace(a);
    if (std::abs(tr - Complex{1}) > tolerance) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
    std::vector<double> spectrum = hermitian_eigenvalues(a);
    if (spectrum.front() < -tolerance) {
        throw std::invalid_argument("density matrix must be positive semidefinite");
    }
}

DensityDeviationBound density_deviation_bound(const ComplexMatrix &a, PExponent p, PExponent r) {
    require_density_matrix(a);
    if (p.is_infinite() || r.is_infinite()) {
        throw std::invalid_argument("density_deviation_bound: p and r must be finite");
    }
    if (!(p < r)) {
        throw std::invalid_argument("density_deviation_bound: requires r > p");
    }
    size_t n = a.rows();
    double d = static_cast<double>(n);
    double pv = p.value();
    double rv = r.value();

    ComplexMatrix centered = a;
    for (size_t i = 0; i < n; i++) {
        centered(i, i) -= 1.0 / d;
    }
    double factor = std::pow(d, (rv - pv) / pv);
    double r_norm = schatten_norm_hermitian(a, r);

    DensityDeviationBound out;
    out.lhs = std::pow(schatten_norm_hermitian(centered, p), rv);
    out.rhs = factor * std::pow(r_norm, rv) - factor / std::pow(d, pv);
    out.rhs_alternative = factor * std::pow(r_norm, rv) - factor * std::pow(d, 1 - rv);
    out.holds = out.lhs <= out.rhs + kInequalitySlack;
    out.holds_alternative = out.lhs <= out.rhs_alternative + kInequalitySlack;
    return out;
}

}  // namespace randomizer
