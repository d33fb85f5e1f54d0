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

#ifndef RANDOMIZER_HAAR_HPP
#define RANDOMIZER_HAAR_HPP

#include <span>
#include <vector>

#include "randomizer/linalg.hpp"
#include "randomizer/rng.hpp"

namespace randomizer {

/// Unit vector in C^d.
class PureState {
   public:
    /// Normalizes nothing: amplitudes must already have unit norm within 1e-12.
    explicit PureState(std::vector<Complex> amplitudes);
    /// Rescales a nonzero vector to unit norm.
    static PureState normalized(std::vector<Complex> amplitudes);
    /// Computational basis vector |index>.
    static PureState basis(size_t dim, size_t index);

    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    /// |psi><psi|.
    ComplexMatrix projector() const;

   private:
    std::vector<Complex> amplitudes_;
};

Complex inner_product(const PureState &a, const PureState &b);

/// m unitaries of dimension d, with the seed that generated them.
struct UnitaryEnsemble {
    size_t dim = 0;
    std::vector<ComplexMatrix> members;
    Seed seed;

    size_t cardinality() const {
        return members.size();
    }
    /// Throws unless every member is d x d with unitarity defect <= 1e-9.
    void validate() const;
};

/// d x d matrix of i.i.d. standard complex Gaussians.
ComplexMatrix sample_ginibre(size_t d, RandomStream &stream);

/// Haar unitary from Ginibre + QR; R-diagonal phases are absorbed into Q.
/// Rank-deficient draws are redrawn from the same stream.
ComplexMatrix sample_haar_unitary(size_t d, RandomStream &stream);
ComplexMatrix sample_haar_unitary(size_t d, Seed seed);

/// Normalized complex Gaussian vector.
PureState sample_pure_state(size_t d, RandomStream &stream);
PureState sample_pure_state(size_t d, Seed seed);

/// Member i is drawn under seed.child(i), so any member can be regenerated
/// (or replaced) independently of the others.
UnitaryEnsemble sample_ensemble(size_t d, size_t m, Seed seed);

struct IsotropyCheck {
    double deviation = 0;  // || (1/n) sum U psi U^dagger - I/d ||_2
    double tolerance = 0;  // 4 / sqrt(n)
    bool pass = false;
};

/// Monte Carlo check that the Haar average of U psi U^dagger is I/d.
IsotropyCheck check_isotropy(size_t d, size_t n_samples, const PureState &psi, Seed seed);

}  // namespace randomizer

#endif
