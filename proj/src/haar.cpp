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

#include "randomizer/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "randomizer/norms.hpp"

namespace randomizer {

namespace {

double squared_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &z : v) {
        total += std::norm(z);
    }
    return total;
}

void require_dim(size_t d) {
    if (d == 0) {
        throw std::invalid_argument("dimension must be at least 1");
    }
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("pure state needs at least one amplitude");
    }
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("pure state amplitudes must be finite");
        }
    }
    if (std::abs(squared_norm(amplitudes_) - 1) > 1e-12) {
        throw std::invalid_argument("pure state must have unit norm");
    }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    for (auto &z : amplitudes) {
        z /= norm;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(size_t dim, size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> v(dim);
    v[index] = 1;
    return PureState(std::move(v));
}

ComplexMatrix PureState::projector() const {
    return outer(amplitudes_);
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex total = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        total += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return total;
}

void UnitaryEnsemble::validate() const {
    if (members.empty()) {
        throw std::invalid_argument("ensemble must contain at least one unitary");
    }
    for (size_t i = 0; i < members.size(); i++) {
        const auto &u = members[i];
        if (u.rows() != dim || u.cols() != dim) {
            throw std::invalid_argument("ensemble member " + std::to_string(i) + " has the wrong shape");
        }
        if (unitarity_defect(u) > 1e-9) {
            throw std::invalid_argument("ensemble member " + std::to_string(i) + " is not unitary");
        }
    }
}

ComplexMatrix sample_ginibre(size_t d, RandomStream &stream) {
    require_dim(d);
    ComplexMatrix g(d, d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            g(i, j) = stream.complex_normal();
        }
    }
    return g;
}

ComplexMatrix sample_haar_unitary(size_t d, RandomStream &stream) {
    while (true) {
        try {
            return qr_unitary(sample_ginibre(d, stream)).q;
        } catch (const RankDeficientError &) {
            // Probability zero; draw again from the continuing stream.
        }
    }
}

ComplexMatrix sample_haar_unitary(size_t d, Seed seed) {
    RandomStream stream(seed);
    return sample_haar_unitary(d, stream);
}

PureState sample_pure_state(size_t d, RandomStream &stream) {
    require_dim(d);
    while (true) {
        std::vector<Complex> v(d);
        for (auto &z : v) {
            z = stream.complex_normal();
        }
        if (squared_norm(v) > 1e-300) {
            return PureState::normalized(std::move(v));
        }
    }
}

PureState sample_pure_state(size_t d, Seed seed) {
    RandomStream stream(seed);
    return sample_pure_state(d, stream);
}

UnitaryEnsemble sample_ensemble(size_t d, size_t m, Seed seed) {
    require_dim(d);
    if (m == 0) {
        throw std::invalid_argument("ensemble cardinality must be at least 1");
    }
    UnitaryEnsemble ensemble{d, {}, seed};
    ensemble.members.reserve(m);
    for (size_t i = 0; i < m; i++) {
        ensemble.members.push_back(sample_haar_unitary(d, seed.child(i)));
    }
    return ensemble;
}

IsotropyCheck check_isotropy(size_t d, size_t n_samples, const PureState &psi, Seed seed) {
    require_dim(d);
    if (psi.dim() != d) {
        throw std::invalid_argument("check_isotropy: state dimension mismatch");
    }
    if (n_samples < 100) {
        throw std::invalid_argument("check_isotropy: needs at least 100 samples");
    }
    RandomStream stream(seed);
    ComplexMatrix average(d, d);
    for (size_t k = 0; k < n_samples; k++) {
        ComplexMatrix u = sample_haar_unitary(d, stream);
        std::vector<Complex> v = randomizer::apply(u, psi.amplitudes());
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                average(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    double n = static_cast<double>(n_samples);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            average(i, j) /= n;
        }
        average(i, i) -= 1.0 / static_cast<double>(d);
    }
    IsotropyCheck out;
    out.deviation = schatten_norm(average, PExponent(2));
    out.tolerance = 4 / std::sqrt(n);
    out.pass = out.deviation <= out.tolerance;
    return out;
}

}  // namespace randomizer
