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

#ifndef RANDOMIZER_PARALLEL_HPP
#define RANDOMIZER_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace randomizer {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// claimed from a shared counter; callers write results into slot i so the
/// outcome does not depend on the thread count. The first exception thrown
/// by any body is rethrown after all workers join.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &body);

}  // namespace randomizer

#endif
