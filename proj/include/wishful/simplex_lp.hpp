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
#include <vector>

namespace wishful {

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
};

// Maximizes c.x subject to A x = b, x >= 0 with a dense tableau simplex.
// `basis` names m = A.size() columns forming a feasible starting basis with
// B^{-1} b >= 0 (the callers here always have an identity block available).
// Bland's rule keeps pivoting deterministic and cycle-free. Throws
// numerical_error on unbounded problems or iteration blow-up.
LpSolution simplex_maximize(const std::vector<std::vector<double>>& A,
                            const std::vector<double>& b, const std::vector<double>& c,
                            std::vector<std::size_t> basis);

}  // namespace wishful
