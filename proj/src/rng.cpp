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

#include "randomizer/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace randomizer {

namespace {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

Seed Seed::child(uint64_t index) const {
    return Seed{value, mix64(mix64(stream + kGolden) ^ mix64(index * 0xD1B54A32D192ED03ULL + 1))};
}

RandomStream::RandomStream(Seed seed) : key_(mix64(mix64(seed.value) ^ (seed.stream * kGolden + 0x632BE59BD9B4E019ULL))) {
}

uint64_t RandomStream::next_u64() {
    uint64_t n = counter_++;
    return mix64(key_ + (n + 1) * kGolden);
}

double RandomStream::uniform() {
    // 53 random bits, shifted off zero.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::complex<double> RandomStream::complex_normal() {
    double re = normal();
    double im = normal();
    return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

uint64_t RandomStream::below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RandomStream::below: bound must be positive");
    }
    // Rejection keeps the result exactly uniform.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        uint64_t x = next_u64();
        if (x < limit) {
            return x % bound;
        }
    }
}

}  // namespace randomizer
