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

#include "wishful/finite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "wishful/errors.hpp"
#include "wishful/simplex_grid.hpp"
#include "wishful/simplex_lp.hpp"

namespace wishful {

namespace {

constexpr double kVertexDedupTol = 1e-10;
constexpr double kCollinearTol = 1e-9;

void check_binary_actions(const DecisionProblem& problem) {
  problem.validate();
  if (problem.n_actions() != 2) {
    throw std::invalid_argument("finite-persuasion operations require exactly two actions");
  }
}

bool same_belief(const Belief& a, const Belief& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

double raw_net_gain(const std::vector<double>& w, std::span<const double> mu) {
  double g = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) g += w[i] * mu[i];
  return g;
}

}  // namespace

std::vector<double> action_one_weights(const DecisionProblem& problem, ReceiverMode mode) {
  check_binary_actions(problem);
  const std::size_t n = problem.n_states();
  std::vector<double> w(n);
  if (mode == ReceiverMode::Bayesian) {
    for (std::size_t s = 0; s < n; ++s) w[s] = problem.u(1, s) - problem.u(0, s);
  } else {
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t s = 0; s < n; ++s) shift = std::max(shift, problem.rho * problem.u(a, s));
    }
    for (std::size_t s = 0; s < n; ++s) {
      w[s] = std::exp(problem.rho * problem.u(1, s) - shift) -
             std::exp(problem.rho * problem.u(0, s) - shift);
    }
  }
  double norm = 0.0;
  for (double v : w) norm = std::max(norm, std::abs(v));
  if (norm > 0.0) {
    for (double& v : w) v /= norm;
  }
  return w;
}

double net_gain(const DecisionProblem& problem, const Belief& mu, ReceiverMode mode) {
  if (mu.size() != problem.n_states()) {
    throw std::invalid_argument("belief dimension does not match the state set");
  }
  return raw_net_gain(action_one_weights(problem, mode), mu.probs());
}

bool membership(const DecisionProblem& problem, const Belief& mu, ReceiverMode mode) {
  return net_gain(problem, mu, mode) >= -kMembershipTol;
}

std::vector<EdgePoint> edge_indifference_points(const DecisionProblem& problem,
                                                ReceiverMode mode) {
  const auto w = action_one_weights(problem, mode);
  const std::size_t n = w.size();
  std::vector<EdgePoint> points;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w[i] * w[j] >= 0.0) continue;  // same sign or a zero weight: no interior point
      std::vector<double> p(n, 0.0);
      // mu_i w_i + mu_j w_j = 0 with mu_i + mu_j = 1.
      p[i] = w[j] / (w[j] - w[i]);
      p[j] = w[i] / (w[i] - w[j]);
      points.push_back(EdgePoint{i, j, Belief(std::move(p))});
    }
  }
  return points;
}

ActionPolytope action_polytope(const DecisionProblem& problem, ReceiverMode mode) {
  const auto w = action_one_weights(problem, mode);
  ActionPolytope polytope;
  polytope.mode = mode;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (w[s] >= -kMembershipTol) polytope.vertices.push_back(Belief::dirac(w.size(), s));
  }
  for (auto& edge : edge_indifference_points(problem, mode)) {
    bool dup = false;
    for (const auto& v : polytope.vertices) dup = dup || same_belief(v, edge.belief, kVertexDedupTol);
    if (!dup) polytope.vertices.push_back(std::move(edge.belief));
  }
  return polytope;
}

FavoredSummary is_favored(const DecisionProblem& problem) {
  FavoredSummary summary;
  const auto bayes_vertices = action_polytope(problem, ReceiverMode::Bayesian).vertices;
  summary.favored = true;
  for (const auto& v : bayes_vertices) {
    summary.favored = summary.favored && membership(problem, v, ReceiverMode::Wishful);
  }

  const auto wb = action_one_weights(problem, ReceiverMode::Bayesian);
  for (std::size_t i = 0; i + 1 < wb.size(); ++i) {
    for (std::size_t j = i + 1; j < wb.size(); ++j) {
      if (wb[i] * wb[j] >= 0.0) continue;
      const std::size_t high = wb[i] > 0.0 ? i : j;
      const std::size_t low = wb[i] > 0.0 ? j : i;
      const BinaryPayoffs restricted(problem.u(0, low), problem.u(0, high), problem.u(1, low),
                                     problem.u(1, high));
      summary.pairs.push_back(PairReport{low, high, classify_favored(restricted, problem.rho)});
    }
  }
  return summary;
}

FinitePolicy optimal_policy_finite(const DecisionProblem& problem, const Belief& mu0,
                                   ReceiverMode mode) {
  check_binary_actions(problem);
  if (mu0.size() != problem.n_states()) {
    throw std::invalid_argument("prior dimension does not match the state set");
  }
  const std::size_t n = problem.n_states();
  for (std::size_t s = 0; s < n; ++s) {
    if (!(mu0[s] > 0.0)) throw std::invalid_argument("prior must be interior");
  }

  // Candidates: all degenerate beliefs first (they are the identity starting
  // basis), then the region vertices that are not degenerate.
  std::vector<Belief> candidates;
  for (std::size_t s = 0; s < n; ++s) candidates.push_back(Belief::dirac(n, s));
  for (auto& v : action_polytope(problem, mode).vertices) {
    bool dup = false;
    for (std::size_t s = 0; s < n; ++s) dup = dup || same_belief(v, candidates[s], kVertexDedupTol);
    if (!dup) candidates.push_back(std::move(v));
  }

  std::vector<std::vector<double>> A(n, std::vector<double>(candidates.size()));
  std::vector<double> b(n);
  std::vector<double> c(candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    for (std::size_t s = 0; s < n; ++s) A[s][j] = candidates[j][s];
    c[j] = membership(problem, candidates[j], mode) ? 1.0 : 0.0;
  }
  for (std::size_t s = 0; s < n; ++s) b[s] = mu0[s];

  std::vector<std::size_t> basis(n);
  for (std::size_t s = 0; s < n; ++s) basis[s] = s;
  const LpSolution sol = simplex_maximize(A, b, c, std::move(basis));

  FinitePolicy policy;
  policy.value = sol.value;
  double total = 0.0;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (sol.x[j] > 1e-12) {
      policy.posteriors.push_back(candidates[j]);
      policy.weights.push_back(sol.x[j]);
      total += sol.x[j];
    }
  }
  // Bayes plausibility must survive the pivoting noise.
  for (std::size_t s = 0; s < n; ++s) {
    double avg = 0.0;
    for (std::size_t p = 0; p < policy.posteriors.size(); ++p) {
      avg += policy.weights[p] * policy.posteriors[p][s];
    }
    if (std::abs(avg - mu0[s]) > 1e-9 || std::abs(total - 1.0) > 1e-9) {
      throw numerical_error("optimal_policy_finite: Bayes plausibility lost in the LP");
    }
  }
  return policy;
}

FinitePolicy condense_policy(const DecisionProblem& problem, const FinitePolicy& policy,
                             ReceiverMode mode) {
  const std::size_t n = problem.n_states();
  std::vector<double> inside(n, 0.0), outside(n, 0.0);
  double w_in = 0.0, w_out = 0.0;
  for (std::size_t p = 0; p < policy.posteriors.size(); ++p) {
    const bool in = membership(problem, policy.posteriors[p], mode);
    auto& acc = in ? inside : outside;
    (in ? w_in : w_out) += policy.weights[p];
    for (std::size_t s = 0; s < n; ++s) acc[s] += policy.weights[p] * policy.posteriors[p][s];
  }
  FinitePolicy merged;
  merged.value = w_in;
  if (w_in > 0.0) {
    for (double& v : inside) v /= w_in;
    merged.posteriors.push_back(Belief(std::move(inside)));
    merged.weights.push_back(w_in);
  }
  if (w_out > 0.0) {
    for (double& v : outside) v /= w_out;
    merged.posteriors.push_back(Belief(std::move(outside)));
    merged.weights.push_back(w_out);
  }
  return merged;
}

namespace {

// Best two-point coverage anchored at the member grid point `p`:
//  - pairs (p, q) with q another grid point collinear with mu0 within the
//    tolerance, weights solved exactly from the projection;
//  - the ray decomposition that keeps p and pushes the complementary
//    posterior q = (mu0 - lambda p)/(1 - lambda) as far as the simplex
//    allows. q is then a boundary point off the grid, but the pair is still
//    a feasible two-point policy, so the oracle stays a lower bound; this
//    route is what makes the bound converge at the 1/k rate.
double best_through_member(std::span<const double> p, const std::vector<double>& grid,
                           const std::vector<char>& member,
                           const std::vector<double>& region_weights,
                           std::span<const double> mu0, std::size_t n) {
  const std::size_t count = grid.size() / n;
  double best = 0.0;
  for (std::size_t gq = 0; gq < count; ++gq) {
    const double* q = grid.data() + gq * n;
    double dir_sq = 0.0;
    double proj = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double d = p[s] - q[s];
      dir_sq += d * d;
      proj += (mu0[s] - q[s]) * d;
    }
    if (dir_sq == 0.0) continue;
    const double lambda = proj / dir_sq;
    if (lambda < 0.0 || lambda > 1.0) continue;
    double resid = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      resid = std::max(resid, std::abs(q[s] + lambda * (p[s] - q[s]) - mu0[s]));
    }
    if (resid > kCollinearTol) continue;
    const double value = member[gq] ? 1.0 : lambda;
    best = std::max(best, value);
  }

  double lambda_ray = 1.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (p[s] > 0.0) lambda_ray = std::min(lambda_ray, mu0[s] / p[s]);
  }
  if (lambda_ray > 0.0 && lambda_ray < 1.0) {
    double tail_gain = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      tail_gain += region_weights[s] * (mu0[s] - lambda_ray * p[s]) / (1.0 - lambda_ray);
    }
    best = std::max(best, lambda_ray + (tail_gain >= -kMembershipTol ? 1.0 - lambda_ray : 0.0));
  }
  return best;
}

// The mirrored ray decomposition anchored at a non-member grid point q: the
// member posterior slides along the exact ray from q through mu0 onto the
// region boundary (w . p = 0), which is where the optimal policy puts it.
double best_against_nonmember(std::span<const double> q,
                              const std::vector<double>& region_weights,
                              std::span<const double> mu0, double mu0_gain, std::size_t n) {
  double q_gain = 0.0;
  for (std::size_t s = 0; s < n; ++s) q_gain += region_weights[s] * q[s];
  if (q_gain >= -kMembershipTol) return 0.0;
  const double one_minus_lambda = mu0_gain / q_gain;
  const double lambda = 1.0 - one_minus_lambda;
  if (!(lambda > 0.0) || !(lambda <= 1.0)) return 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (mu0[s] - one_minus_lambda * q[s] < -1e-15) return 0.0;  // p would leave the simplex
  }
  return lambda;
}

double grid_oracle_impl(const DecisionProblem& problem, const Belief& mu0, ReceiverMode mode,
                        int resolution, bool parallel) {
  check_binary_actions(problem);
  const std::size_t n = problem.n_states();
  if (mu0.size() != n) throw std::invalid_argument("prior dimension does not match the state set");
  if (resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  const std::uint64_t count = simplex_grid_size(n, resolution);
  if (count > 200000) {
    throw std::invalid_argument("grid resolution too fine for this state count");
  }

  if (membership(problem, mu0, mode)) return 1.0;  // no disclosure already wins

  const auto w = action_one_weights(problem, mode);
  const double mu0_gain = raw_net_gain(w, mu0.probs());
  const std::vector<double> grid = simplex_grid_points(n, resolution);
  std::vector<char> member(count);
  std::vector<std::uint32_t> members;
  for (std::uint64_t g = 0; g < count; ++g) {
    member[g] = raw_net_gain(w, std::span<const double>(grid.data() + g * n, n)) >= -kMembershipTol;
    if (member[g]) members.push_back(static_cast<std::uint32_t>(g));
  }

  // Pairs with both endpoints outside the region are worth zero, so only
  // member-anchored pairs are scanned; every grid point additionally anchors
  // a ray decomposition. Anchors are independent and the max reduction is
  // exact, so the parallel and serial paths agree bitwise.
  const std::int64_t anchors = static_cast<std::int64_t>(members.size());
  const std::int64_t points = static_cast<std::int64_t>(count);
  double best = 0.0;
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(max : best)
    for (std::int64_t a = 0; a < anchors; ++a) {
      const double* p = grid.data() + static_cast<std::size_t>(members[a]) * n;
      best = std::max(best, best_through_member(std::span<const double>(p, n), grid, member, w,
                                                mu0.probs(), n));
    }
#pragma omp parallel for schedule(static) reduction(max : best)
    for (std::int64_t g = 0; g < points; ++g) {
      const double* q = grid.data() + static_cast<std::size_t>(g) * n;
      best = std::max(best, best_against_nonmember(std::span<const double>(q, n), w, mu0.probs(),
                                                   mu0_gain, n));
    }
  } else {
    for (std::int64_t a = 0; a < anchors; ++a) {
      const double* p = grid.data() + static_cast<std::size_t>(members[a]) * n;
      best = std::max(best, best_through_member(std::span<const double>(p, n), grid, member, w,
                                                mu0.probs(), n));
    }
    for (std::int64_t g = 0; g < points; ++g) {
      const double* q = grid.data() + static_cast<std::size_t>(g) * n;
      best = std::max(best, best_against_nonmember(std::span<const double>(q, n), w, mu0.probs(),
                                                   mu0_gain, n));
    }
  }
  return best;
}

}  // namespace

double grid_oracle_value(const DecisionProblem& problem, const Belief& mu0, ReceiverMode mode,
                         int resolution) {
  return grid_oracle_impl(problem, mu0, mode, resolution, true);
}

double grid_oracle_value_serial(const DecisionProblem& problem, const Belief& mu0,
                                ReceiverMode mode, int resolution) {
  return grid_oracle_impl(problem, mu0, mode, resolution, false);
}

}  // namespace wishful
