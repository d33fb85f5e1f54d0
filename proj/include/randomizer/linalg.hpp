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

#ifndef RANDOMIZER_LINALG_HPP
#define RANDOMIZER_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace randomizer {

using Complex = std::complex<double>;

/// Dense row-major complex matrix with value semantics.
///
/// Every entry is finite; constructors reject NaN/Inf. Free functions below
/// never mutate their arguments and always return a fresh matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero matrix of the given shape. Both dimensions must be positive.
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    const Complex &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> entries() const {
        return entries_;
    }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Raised by qr_unitary when a pivot falls below the rank tolerance. Callers
/// sampling random matrices treat this as a request to redraw.
class RankDeficientError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(const ComplexMatrix &a, Complex factor);
Complex trace(const ComplexMatrix &a);

/// Matrix-vector product.
std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v);

/// |v><v|, the rank-one outer product v v^dagger.
ComplexMatrix outer(std::span<const Complex> v);

/// Largest absolute entry.
double max_abs(const ComplexMatrix &a);
/// Largest absolute entrywise difference; shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Max-entry distance between a and a^dagger (0 for exactly Hermitian input).
double hermiticity_defect(const ComplexMatrix &a);
/// Max-entry distance between u^dagger u and the identity.
double unitarity_defect(const ComplexMatrix &u);

struct HermitianEigenSystem {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// The input is symmetrized as (a + a^dagger)/2 after checking that the
/// Hermiticity defect is at most 1e-10 (relative to max(1, max|a|)). Sweeps
/// stop once the off-diagonal Frobenius mass drops below 1e-14 * ||a||_F, or
/// after 100 sweeps.
HermitianEigenSystem hermitian_eigen(const ComplexMatrix &a);

/// Same as hermitian_eigen without accumulating eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);

struct QrFactors {
    ComplexMatrix q;  // unitary
    ComplexMatrix r;  // upper triangular, real positive diagonal
};

/// Householder QR with the diagonal phases of R pushed into Q.
///
/// Throws RankDeficientError when some |r_ii| < 1e-12 * max|a|.
QrFactors qr_unitary(const ComplexMatrix &a);

}  // namespace randomizer

#endif
