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

#ifndef RANDOMIZER_RNG_HPP
#define RANDOMIZER_RNG_HPP

#include <complex>
#include <cstdint>

namespace randomizer {

/// A (value, stream) pair. Every sample drawn in this library is a pure
/// function of the seed it was drawn under and its draw index.
struct Seed {
    uint64_t value = 0;
    uint64_t stream = 0;

    /// Derived seed for sub-task `index` (trial k, ensemble member i, ...).
    /// Children of distinct indices, and of distinct parents, land on
    /// unrelated streams.
    Seed child(uint64_t index) const;

    bool operator==(const Seed &) const = default;
    auto operator<=>(const Seed &) const = default;
};

/// Counter-based generator: the n-th output is mix(key(seed), n).
class RandomStream {
   public:
    explicit RandomStream(Seed seed);

    uint64_t next_u64();
    /// Uniform on the open interval (0, 1).
    double uniform();
    /// Standard normal via Box-Muller. Consumes two uniforms per pair.
    double normal();
    /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
    std::complex<double> complex_normal();
    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound);

    uint64_t draws() const {
        return counter_;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
    double spare_normal_ = 0;
    bool has_spare_ = false;
};

/// SplitMix64 finalizer.
uint64_t mix64(uint64_t x);

}  // namespace randomizer

#endif
