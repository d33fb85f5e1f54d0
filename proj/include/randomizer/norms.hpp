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

#ifndef RANDOMIZER_NORMS_HPP
#define RANDOMIZER_NORMS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "randomizer/linalg.hpp"

namespace randomizer {

/// Schatten exponent: any real p >= 1, or infinity.
class PExponent {
   public:
    explicit PExponent(double value);
    static PExponent infinity();
    /// Accepts "inf", "infinity", "oo" or a decimal number >= 1.
    static PExponent parse(std::string_view text);

    bool is_infinite() const {
        return infinite_;
    }
    /// Finite value; throws for infinity.
    double value() const;
    /// 1/p, with 1/inf = 0.
    double reciprocal() const;
    /// (p - 1)/p, the exponent of d in the randomization threshold; 1 at infinity.
    double threshold_exponent() const {
        return 1.0 - reciprocal();
    }

    std::string to_string() const;

    bool operator==(const PExponent &) const = default;
    bool operator<(const PExponent &other) const;

   private:
    PExponent() = default;
    double value_ = 1;
    bool infinite_ = false;
};

/// Singular values, descending. Hermitian input uses |eigenvalues|; otherwise
/// the nonnegative eigenvalues of the Hermitian dilation [[0, a], [a^dagger, 0]].
std::vector<double> singular_values(const ComplexMatrix &a);

/// (sum s_i^p)^(1/p) evaluated with max-scaling; max s_i at infinity.
double schatten_from_singular_values(std::span<const double> singular, PExponent p);

/// Schatten p-norm of a square matrix. p = 2 is taken directly as
/// sqrt(tr a^dagger a).
double schatten_norm(const ComplexMatrix &a, PExponent p);

/// Schatten p-norm of a Hermitian matrix from its spectrum.
double schatten_norm_hermitian(const ComplexMatrix &a, PExponent p);

constexpr double kInequalitySlack = 1e-9;

/// ||a||_inf <= ||a||_p <= ||a||_1.
struct InterpolationCheck {
    bool holds = false;
    double operator_norm = 0;
    double p_norm = 0;
    double trace_norm = 0;
};
InterpolationCheck check_interpolation(const ComplexMatrix &a, PExponent p);

/// ||a||_r <= ||a||_p <= d^(1/p - 1/r) ||a||_r for r > p.
struct HoelderCheck {
    bool holds = false;
    double r_norm = 0;
    double p_norm = 0;
    double upper = 0;  // d^(1/p - 1/r) * r_norm
};
HoelderCheck check_hoelder(const ComplexMatrix &a, PExponent p, PExponent r);

/// | ||a||_p - ||b||_p | <= ||a - b||_p.
struct ReverseTriangleCheck {
    bool holds = false;
    double gap = 0;       // | ||a||_p - ||b||_p |
    double distance = 0;  // ||a - b||_p
};
ReverseTriangleCheck check_reverse_triangle(const ComplexMatrix &a, const ComplexMatrix &b, PExponent p);

/// Density-matrix deviation bound
///   ||A - I/d||_p^r <= d^((r-p)/p) ||A||_r^r - subtrahend.
///
/// Two subtrahends are evaluated side by side: the literal d^((r-p)/p) / d^p
/// and d^((r-p)/p) * d^(1-r), the form that follows from Hoelder applied to
/// A - I/d and reproduces d^(-3/2) at (p, r) = (2, 3). Neither is preferred.
struct DensityDeviationBound {
    double lhs = 0;
    double rhs = 0;              // literal subtrahend d^((r-p)/p) / d^p
    double rhs_alternative = 0;  // subtrahend d^((r-p)/p) * d^(1-r)
    bool holds = false;
    bool holds_alternative = false;

    bool variants_disagree() const {
        return holds != holds_alternative;
    }
};
DensityDeviationBound density_deviation_bound(const ComplexMatrix &a, PExponent p, PExponent r);

/// Throws std::invalid_argument unless a is Hermitian PSD with unit trace
/// (all within `tolerance`).
void require_density_matrix(const ComplexMatrix &a, double tolerance = 1e-9);

}  // namespace randomizer

#endif
