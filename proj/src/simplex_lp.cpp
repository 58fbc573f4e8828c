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

#include "wishful/simplex_lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wishful/errors.hpp"

namespace wishful {

namespace {
constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
}  // namespace

LpSolution simplex_maximize(const std::vector<std::vector<double>>& A,
                            const std::vector<double>& b, const std::vector<double>& c,
                            std::vector<std::size_t> basis) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m || basis.size() != m) {
    throw std::invalid_argument("simplex_maximize: inconsistent dimensions");
  }
  for (const auto& row : A) {
    if (row.size() != n) throw std::invalid_argument("simplex_maximize: ragged constraint matrix");
  }

  // Tableau rows are B^{-1} A with B^{-1} b appended; the caller's basis must
  // be the identity block, so no initial inversion is needed.
  std::vector<std::vector<double>> T(m, std::vector<double>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n] = b[i];
    if (T[i][n] < 0.0) {
      throw std::invalid_argument("simplex_maximize: starting basis is infeasible");
    }
  }

  for (int iter = 0; iter < 10000; ++iter) {
    // Reduced costs under Bland's rule: enter the lowest-index improving
    // column.
    std::size_t enter = n;
    for (std::size_t j = 0; j < n && enter == n; ++j) {
      double reduced = c[j];
      for (std::size_t i = 0; i < m; ++i) reduced -= c[basis[i]] * T[i][j];
      bool basic = false;
      for (std::size_t i = 0; i < m; ++i) basic = basic || basis[i] == j;
      if (!basic && reduced > kReducedCostTol) enter = j;
    }
    if (enter == n) break;  // optimal

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] > kPivotTol) {
        const double ratio = T[i][n] / T[i][enter];
        if (ratio < best_ratio - kPivotTol ||
            (ratio < best_ratio + kPivotTol && (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) throw numerical_error("simplex_maximize: unbounded objective");

    const double pivot = T[leave][enter];
    for (std::size_t j = 0; j <= n; ++j) T[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0.0) continue;
      const double factor = T[i][enter];
      for (std::size_t j = 0; j <= n; ++j) T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
    if (iter == 9999) throw numerical_error("simplex_maximize: iteration limit reached");
  }

  LpSolution sol;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) sol.x[basis[i]] = std::max(0.0, T[i][n]);
  for (std::size_t j = 0; j < n; ++j) sol.value += c[j] * sol.x[j];
  return sol;
}

}  // namespace wishful
