// Copyright 2026 The kanjinet Authors
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

#ifndef KANJINET_METRICS_SERIAL_HPP
#define KANJINET_METRICS_SERIAL_HPP

// Straightforward single-threaded versions of the metric kernels. Kept as the
// reference the parallel kernels are tested and benchmarked against.

#include <vector>

#include "kanjinet/metrics.hpp"

namespace kanjinet::serial {

PathStatistics path_statistics(const SimpleGraph& g);
std::vector<double> local_clustering(const SimpleGraph& g);
BaselineStats c_rand_baseline(std::size_t n, std::size_t m, std::size_t samples,
                              std::uint64_t seed);

}  // namespace kanjinet::serial

#endif  // KANJINET_METRICS_SERIAL_HPP
