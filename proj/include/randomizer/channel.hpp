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

#ifndef RANDOMIZER_CHANNEL_HPP
#define RANDOMIZER_CHANNEL_HPP

#include <stdexcept>
#include <vector>

#include "randomizer/haar.hpp"
#include "randomizer/net.hpp"
#include "randomizer/norms.hpp"

namespace randomizer {

/// Mixed-unitary channel rho -> (1/m) sum_i U_i rho U_i^dagger.
///
/// The channel is only the ensemble. Tolerances (epsilon) belong to the
/// experiment that evaluates it.
class RandomizingChannel {
   public:
    /// Validates the ensemble (shapes and unitarity).
    explicit RandomizingChannel(UnitaryEnsemble ensemble);

    size_t dim() const {
        return ensemble_.dim;
    }
    size_t cardinality() const {
        return ensemble_.cardinality();
    }
    const UnitaryEnsemble &ensemble() const {
        return ensemble_;
    }

    /// Requires a d x d density matrix (Hermitian PSD, trace 1 within 1e-9).
    ComplexMatrix apply(const ComplexMatrix &rho) const;
    /// Pure-state input, computed as (1/m) sum_i |U_i psi><U_i psi|.
    ComplexMatrix apply(const PureState &psi) const;
    /// The vectors U_i |psi>, in ensemble order.
    std::vector<std::vector<Complex>> images(const PureState &psi) const;

   private:
    UnitaryEnsemble ensemble_;
};

inline ComplexMatrix apply_channel(const RandomizingChannel &channel, const ComplexMatrix &rho) {
    return channel.apply(rho);
}

/// m unitaries cycling through I, X, Y, Z on C^2. At m = 4 (or any multiple)
/// the channel maps every state to I/2.
UnitaryEnsemble pauli_ensemble(size_t m = 4);

ComplexMatrix maximally_mixed(size_t d);

/// epsilon / d^((p-1)/p); the exponent is 1 at p = infinity.
double randomization_threshold(size_t d, PExponent p, double epsilon);

/// Trace-norm radius a net must have to certify at epsilon:
/// epsilon / (2 d^((p-1)/p)).
double required_net_radius(size_t d, PExponent p, double epsilon);

/// ||out - I/d||_p for a Hermitian channel output.
double distance_to_maximally_mixed(const ComplexMatrix &out, PExponent p);

struct DeviationRecord {
    PExponent p{1};
    double y_value = 0;
    double threshold = 0;
    bool meets = false;
    Seed state_seed;
    size_t state_index = 0;  // net point index or sample index
};

/// Y = ||R(psi) - I/d||_p against the threshold epsilon / d^((p-1)/p).
DeviationRecord deviation(const RandomizingChannel &channel, const PureState &psi, PExponent p, double epsilon,
                          Seed state_seed = {}, size_t state_index = 0);

enum class EvidenceKind { certificate, statistical_evidence };
const char *to_string(EvidenceKind kind);

struct SamplePlan {
    size_t states = 1000;
    Seed seed;
};

struct Certification {
    bool certified = false;
    EvidenceKind kind = EvidenceKind::statistical_evidence;
    DeviationRecord worst;
    double threshold_applied = 0;
    size_t evaluated = 0;
    size_t failures = 0;

    double failure_fraction() const {
        return evaluated == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(evaluated);
    }
};

/// Raised when a net is too coarse to certify at the requested epsilon.
class NetTooCoarseError : public std::invalid_argument {
   public:
    NetTooCoarseError(double net_eta, double required_eta);
    double net_eta() const {
        return net_eta_;
    }
    double required_eta() const {
        return required_eta_;
    }

   private:
    double net_eta_;
    double required_eta_;
};

/// Certificate on a net: every net point must satisfy the half threshold
/// epsilon / (2 d^((p-1)/p)). The net radius must be at most that value.
Certification certify_epsilon_randomizing(const RandomizingChannel &channel, PExponent p, double epsilon,
                                          const Net &net, size_t threads = 1);

/// Statistical evidence on sampled states at the full threshold. Never a
/// certificate.
Certification certify_epsilon_randomizing(const RandomizingChannel &channel, PExponent p, double epsilon,
                                          const SamplePlan &plan, size_t threads = 1);

struct HaydenWinterCheck {
    double max_norm = 0;  // max over sampled psi of ||R(psi)||_p
    double bound = 0;     // ((1 + epsilon)/d)^(1 - 1/p)
    bool holds = false;
};

/// Output-norm bound for an epsilon-randomizing channel; p must exceed 1.
HaydenWinterCheck hayden_winter_bound(const RandomizingChannel &channel, PExponent p, double epsilon,
                                      size_t samples, Seed seed, size_t threads = 1);

}  // namespace randomizer

#endif
