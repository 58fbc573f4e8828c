/* Copyright 2026 The wishful authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wishful {

// Number of points of the resolution-k rational grid on the (n-1)-simplex,
// i.e. compositions of k into n nonnegative parts: C(n+k-1, n-1).
std::uint64_t simplex_grid_size(std::size_t n, int k);

// The grid points themselves, each a probability vector with entries i/k,
// flattened row-major in lexicographically decreasing order of the integer
// compositions. Deterministic ordering; callers index into it.
std::vector<double> simplex_grid_points(std::size_t n, int k);

}  // namespace wishful
