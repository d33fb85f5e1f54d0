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

#ifndef RANDOMIZER_NET_HPP
#define RANDOMIZER_NET_HPP

#include <vector>

#include "randomizer/haar.hpp"

namespace randomizer {

/// Largest dimension for which nets are built; sizes grow like (5/eta)^(2d).
constexpr size_t kMaxNetDimension = 3;

/// Finite set of pure states covering all pure states within trace
/// distance eta. Points are pairwise more than eta/2 apart.
struct Net {
    size_t dim = 0;
    double eta = 0;
    std::vector<PureState> points;
    Seed construction_seed;
};

/// ||a a^dagger - b b^dagger||_1 = 2 sqrt(1 - |<a|b>|^2).
double trace_distance_pure(const PureState &a, const PureState &b);

/// Volumetric cardinality bound (5/eta)^(2d).
double net_size_bound(size_t d, double eta);

struct NearestPoint {
    size_t index = 0;
    double distance = 0;
};
NearestPoint nearest_point(const Net &net, const PureState &psi);

/// Greedy random packing at radius eta/2.
///
/// Candidates are Haar-random pure states drawn from `seed`. A candidate is
/// admitted when it is farther than eta/2 from every admitted point; the
/// construction stops after `budget` consecutive rejections. Requires
/// d <= kMaxNetDimension and eta in (0, 2].
Net build_net(size_t d, double eta, size_t budget, Seed seed);

struct CoveringCheck {
    double max_min_distance = 0;
    bool pass = false;
};

/// Probes random pure states and reports the worst distance to the net.
CoveringCheck verify_covering(const Net &net, size_t probes, Seed seed, size_t threads = 1);

}  // namespace randomizer

#endif
