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

#include "randomizer/net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "randomizer/parallel.hpp"

namespace randomizer {

double trace_distance_pure(const PureState &a, const PureState &b) {
    double overlap = std::norm(inner_product(a, b));
    return 2 * std::sqrt(std::max(0.0, 1 - overlap));
}

double net_size_bound(size_t d, double eta) {
    return std::pow(5 / eta, 2 * static_cast<double>(d));
}

NearestPoint nearest_point(const Net &net, const PureState &psi) {
    if (net.points.empty()) {
        throw std::invalid_argument("nearest_point: empty net");
    }
    NearestPoint best{0, std::numeric_limits<double>::infinity()};
    for (size_t i = 0; i < net.points.size(); i++) {
        double dist = trace_distance_pure(net.points[i], psi);
        if (dist < best.distance) {
            best = {i, dist};
        }
    }
    return best;
}

Net build_net(size_t d, double eta, size_t budget, Seed seed) {
    if (d == 0 || d > kMaxNetDimension) {
        throw std::invalid_argument("build_net: nets are only built for 1 <= d <= " +
                                    std::to_string(kMaxNetDimension) + " (got d=" + std::to_string(d) + ")");
    }
    if (!(eta > 0) || eta > 2) {
        throw std::invalid_argument("build_net: eta must lie in (0, 2]");
    }
    if (budget == 0) {
        throw std::invalid_argument("build_net: budget must be positive");
    }
    Net net{d, eta, {}, seed};
    RandomStream stream(seed);
    double separation = eta / 2;
    size_t rejections = 0;
    size_t draws = 0;
    while (rejections < budget) {
        PureState candidate = sample_pure_state(d, stream);
        draws++;
        bool admitted = std::all_of(net.points.begin(), net.points.end(), [&](const PureState &point) {
            return trace_distance_pure(point, candidate) > separation;
        });
        if (admitted) {
            net.points.push_back(std::move(candidate));
            rejections = 0;
        } else {
            rejections++;
        }
        if (net.points.empty() && draws >= budget) {
            break;
        }
    }
    if (net.points.empty()) {
        throw std::runtime_error("build_net: no candidate admitted within budget");
    }
    return net;
}

CoveringCheck verify_covering(const Net &net, size_t probes, Seed seed, size_t threads) {
    if (probes < 100) {
        throw std::invalid_argument("verify_covering: needs at least 100 probes");
    }
    std::vector<double> distances(probes);
    parallel_for(probes, threads, [&](size_t k) {
        PureState probe = sample_pure_state(net.dim, seed.child(k));
        distances[k] = nearest_point(net, probe).distance;
    });
    CoveringCheck out;
    out.max_min_distance = *std::max_element(distances.begin(), distances.end());
    out.pass = out.max_min_distance <= net.eta;
    return out;
}

}  // namespace randomizer
