// Copyright 2026 The hmds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HMDS_PARALLEL_HPP_
#define HMDS_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <limits>

namespace hmds {

// Worker count: HMDS_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t DefaultThreadCount();

// Runs body(i) for every i in [0, count) on up to `threads` workers (0 means
// DefaultThreadCount()). Indices are claimed dynamically in ascending order.
// The first exception thrown by a body is rethrown after all workers stop.
void ParallelFor(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

inline constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();
// Index of the first item (in order) for which `ok` is false, or kNoFailure.
// Items after a known failure are skipped, so the answer does not depend on
// the thread count.
std::size_t FirstFailure(std::size_t count, std::size_t threads, const std::function<bool(std::size_t)>& ok);

}  // namespace hmds

#endif  // HMDS_PARALLEL_HPP_
