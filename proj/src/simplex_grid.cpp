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

#include "wishful/simplex_grid.hpp"

#include <stdexcept>

namespace wishful {

std::uint64_t simplex_grid_size(std::size_t n, int k) {
  if (n == 0) throw std::invalid_argument("simplex_grid_size: empty state set");
  if (k < 1) throw std::invalid_argument("simplex_grid_size: resolution must be >= 1");
  // C(n + k - 1, n - 1), kept in integer arithmetic.
  std::uint64_t result = 1;
  for (std::size_t i = 1; i < n; ++i) {
    result = result * (static_cast<std::uint64_t>(k) + i) / i;
  }
  return result;
}

std::vector<double> simplex_grid_points(std::size_t n, int k) {
  const std::uint64_t count = simplex_grid_size(n, k);
  std::vector<double> points;
  points.reserve(count * n);

  std::vector<int> comp(n, 0);
  comp[0] = k;
  const double inv = 1.0 / static_cast<double>(k);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) points.push_back(comp[i] * inv);
    // Next composition in lexicographically decreasing order: move one unit
    // from the rightmost positive entry before the tail into the tail.
    std::size_t i = n - 1;
    while (i > 0 && comp[i - 1] == 0) --i;
    if (i == 0) break;
    --comp[i - 1];
    const int tail = comp[n - 1];
    comp[n - 1] = 0;
    comp[i] = tail + 1;
  }
  return points;
}

}  // namespace wishful
