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

#include "randomizer/channel.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "randomizer/parallel.hpp"

namespace randomizer {

namespace {

void require_epsilon(double epsilon) {
    if (!(epsilon > 0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be a positive finite number");
    }
}

std::string coarse_message(double net_eta, double required_eta) {
    std::ostringstream out;
    out.precision(17);
    out << "net radius " << net_eta << " is too coarse; certification needs eta <= " << required_eta;
    return out.str();
}

DeviationRecord worst_of(const std::vector<DeviationRecord> &records) {
    DeviationRecord worst = records.front();
    for (const auto &rec : records) {
        if (rec.y_value > worst.y_value) {
            worst = rec;
        }
    }
    return worst;
}

}  // namespace

RandomizingChannel::RandomizingChannel(UnitaryEnsemble ensemble) : ensemble_(std::move(ensemble)) {
    ensemble_.validate();
}

ComplexMatrix RandomizingChannel::apply(const ComplexMatrix &rho) const {
    if (rho.rows() != dim() || rho.cols() != dim()) {
        throw std::invalid_argument("apply_channel: input dimension does not match the channel");
    }
    require_density_matrix(rho);
    ComplexMatrix out(dim(), dim());
    for (const auto &u : ensemble_.members) {
        out = add(out, multiply(multiply(u, rho), adjoint(u)));
    }
    return scale(out, 1.0 / static_cast<double>(cardinality()));
}

ComplexMatrix RandomizingChannel::apply(const PureState &psi) const {
    if (psi.dim() != dim()) {
        throw std::invalid_argument("apply_channel: state dimension does not match the channel");
    }
    size_t d = dim();
    ComplexMatrix out(d, d);
    for (const auto &v : images(psi)) {
        for (size_t i = 0; i < d; i++) {
            for (size_t j = i; j < d; j++) {
                out(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    double weight = 1.0 / static_cast<double>(cardinality());
    for (size_t i = 0; i < d; i++) {
        out(i, i) = out(i, i).real() * weight;
        for (size_t j = i + 1; j < d; j++) {
            out(i, j) *= weight;
            out(j, i) = std::conj(out(i, j));
        }
    }
    return out;
}

std::vector<std::vector<Complex>> RandomizingChannel::images(const PureState &psi) const {
    std::vector<std::vector<Complex>> out;
    out.reserve(cardinality());
    for (const auto &u : ensemble_.members) {
        out.push_back(randomizer::apply(u, psi.amplitudes()));
    }
    return out;
}

UnitaryEnsemble pauli_ensemble(size_t m) {
    if (m == 0) {
        throw std::invalid_argument("pauli_ensemble: m must be positive");
    }
    const Complex i{0, 1};
    const std::vector<ComplexMatrix> paulis{
        ComplexMatrix::identity(2),
        ComplexMatrix{{0, 1}, {1, 0}},
        ComplexMatrix{{0, -i}, {i, 0}},
        ComplexMatrix{{1, 0}, {0, -1}},
    };
    UnitaryEnsemble out{2, {}, Seed{}};
    for (size_t k = 0; k < m; k++) {
        out.members.push_back(paulis[k % 4]);
    }
    return out;
}

ComplexMatrix maximally_mixed(size_t d) {
    return scale(ComplexMatrix::identity(d), 1.0 / static_cast<double>(d));
}

double randomization_threshold(size_t d, PExponent p, double epsilon) {
    require_epsilon(epsilon);
    return epsilon / std::pow(static_cast<double>(d), p.threshold_exponent());
}

double required_net_radius(size_t d, PExponent p, double epsilon) {
    return randomization_threshold(d, p, epsilon) / 2;
}

double distance_to_maximally_mixed(const ComplexMatrix &out, PExponent p) {
    ComplexMatrix centered = out;
    double inv_d = 1.0 / static_cast<double>(out.rows());
    for (size_t i = 0; i < out.rows(); i++) {
        centered(i, i) -= inv_d;
    }
    if (!p.is_infinite() && p.value() == 2) {
        return schatten_norm(centered, p);
    }
    return schatten_norm_hermitian(centered, p);
}

DeviationRecord deviation(const RandomizingChannel &channel, const PureState &psi, PExponent p, double epsilon,
                          Seed state_seed, size_t state_index) {
    DeviationRecord rec;
    rec.p = p;
    rec.y_value = distance_to_maximally_mixed(channel.apply(psi), p);
    rec.threshold = randomization_threshold(channel.dim(), p, epsilon);
    rec.meets = rec.y_value <= rec.threshold;
    rec.state_seed = state_seed;
    rec.state_index = state_index;
    return rec;
}

const char *to_string(EvidenceKind kind) {
    return kind == EvidenceKind::certificate ? "certificate" : "statistical evidence";
}

NetTooCoarseError::NetTooCoarseError(double net_eta, double required_eta)
    : std::invalid_argument(coarse_message(net_eta, required_eta)), net_eta_(net_eta), required_eta_(required_eta) {
}

Certification certify_epsilon_randomizing(const RandomizingChannel &channel, PExponent p, double epsilon,
                                          const Net &net, size_t threads) {
    require_epsilon(epsilon);
    if (net.dim != channel.dim()) {
        throw std::invalid_argument("certify: net dimension does not match the channel");
    }
    if (net.points.empty()) {
        throw std::invalid_argument("certify: empty net");
    }
    double half = required_net_radius(channel.dim(), p, epsilon);
    if (net.eta > half) {
        throw NetTooCoarseError(net.eta, half);
    }
    std::vector<DeviationRecord> records(net.points.size());
    parallel_for(records.size(), threads, [&](size_t k) {
        DeviationRecord rec = deviation(channel, net.points[k], p, epsilon, net.construction_seed, k);
        rec.threshold = half;
        rec.meets = rec.y_value <= half;
        records[k] = rec;
    });

    Certification out;
    out.kind = EvidenceKind::certificate;
    out.threshold_applied = half;
    out.evaluated = records.size();
    for (const auto &rec : records) {
        out.failures += rec.meets ? 0 : 1;
    }
    out.worst = worst_of(records);
    out.certified = out.failures == 0;
    return out;
}

Certification certify_epsilon_randomizing(const RandomizingChannel &channel, PExponent p, double epsilon,
                                          const SamplePlan &plan, size_t threads) {
    require_epsilon(epsilon);
    if (plan.states == 0) {
        throw std::invalid_argument("certify: sample plan needs at least one state");
    }
    std::vector<DeviationRecord> records(plan.states);
    parallel_for(plan.states, threads, [&](size_t k) {
        Seed state_seed = plan.seed.child(k);
        records[k] = deviation(channel, sample_pure_state(channel.dim(), state_seed), p, epsilon, state_seed, k);
    });

    Certification out;
    out.kind = EvidenceKind::statistical_evidence;
    out.threshold_applied = randomization_threshold(channel.dim(), p, epsilon);
    out.evaluated = records.size();
    for (const auto &rec : records) {
        out.failures += rec.meets ? 0 : 1;
    }
    out.worst = worst_of(records);
    out.certified = out.failures == 0;
    return out;
}

HaydenWinterCheck hayden_winter_bound(const RandomizingChannel &channel, PExponent p, double epsilon,
                                      size_t samples, Seed seed, size_t threads) {
    require_epsilon(epsilon);
    if (!p.is_infinite() && p.value() <= 1) {
        throw std::invalid_argument("hayden_winter_bound: requires p > 1");
    }
    if (samples == 0) {
        throw std::invalid_argument("hayden_winter_bound: needs at least one sample");
    }
    std::vector<double> norms(samples);
    parallel_for(samples, threads, [&](size_t k) {
        PureState psi = sample_pure_state(channel.dim(), seed.child(k));
        norms[k] = schatten_norm_hermitian(channel.apply(psi), p);
    });
    HaydenWinterCheck out;
    for (double n : norms) {
        out.max_norm = std::max(out.max_norm, n);
    }
    double d = static_cast<double>(channel.dim());
    out.bound = std::pow((1 + epsilon) / d, p.threshold_exponent());
    out.holds = out.max_norm <= out.bound + kInequalitySlack;
    return out;
}

}  // namespace randomizer
