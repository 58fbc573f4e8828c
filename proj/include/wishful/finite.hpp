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

#include "wishful/belief.hpp"
#include "wishful/binary.hpp"

namespace wishful {

// Whose action region is meant: the undistorted receiver's or the wishful
// receiver's (utilities passed through z -> exp(rho z)).
enum class ReceiverMode { Bayesian, Wishful };

// Tolerance on the normalized net gain for region membership.
inline constexpr double kMembershipTol = 1e-12;

// Per-state gain of action 1 over action 0 (utility differences in Bayesian
// mode, differences of shifted exponentials in Wishful mode), normalized so
// the largest magnitude is 1. The action-1 region is {mu : w . mu >= 0}.
// Requires a binary action set; throws std::invalid_argument otherwise.
std::vector<double> action_one_weights(const DecisionProblem& problem, ReceiverMode mode);

double net_gain(const DecisionProblem& problem, const Belief& mu, ReceiverMode mode);

// Whether mu lies in the action-1 region: net_gain(mu) >= -kMembershipTol.
bool membership(const DecisionProblem& problem, const Belief& mu, ReceiverMode mode);

// Indifference point on the simplex edge between two states whose weights
// have strictly opposite signs.
struct EdgePoint {
  std::size_t state_a = 0;  // state with the smaller index
  std::size_t state_b = 0;
  Belief belief;
};

// All edge indifference points, in lexicographic (state_a, state_b) order.
std::vector<EdgePoint> edge_indifference_points(const DecisionProblem& problem,
                                                ReceiverMode mode);

// Extreme points of the action-1 region: the degenerate beliefs with
// nonnegative weight plus the edge indifference points, deduplicated.
struct ActionPolytope {
  ReceiverMode mode = ReceiverMode::Bayesian;
  std::vector<Belief> vertices;
};

ActionPolytope action_polytope(const DecisionProblem& problem, ReceiverMode mode);

// Two-state restriction of the problem to one pair of states, classified
// with the binary threshold machinery. high_state is the state where
// action 1 wins.
struct PairReport {
  std::size_t low_state = 0;
  std::size_t high_state = 0;
  FavoredReport report;
};

// Action 1 is favored iff the Bayesian action-1 region is contained in the
// wishful one; by convexity it suffices to test the Bayesian vertices.
// `pairs` carries the two-state restriction report for every edge with an
// interior indifference point.
struct FavoredSummary {
  bool favored = false;
  std::vector<PairReport> pairs;
};

FavoredSummary is_favored(const DecisionProblem& problem);

// Bayes-plausible distribution over posteriors; value is the mass on
// posteriors inside the action-1 region (sender utility = indicator of
// action 1).
struct FinitePolicy {
  std::vector<Belief> posteriors;
  std::vector<double> weights;
  double value = 0.0;
};

// Sender-optimal policy via a small LP over candidate posteriors (action
// polytope vertices plus all degenerate beliefs). Every point of the
// candidate hull decomposes over the candidates without changing the
// objective, so the LP value is the exact concave envelope at mu0.
// Requires an interior mu0. Returns an optimal basic solution.
FinitePolicy optimal_policy_finite(const DecisionProblem& problem, const Belief& mu0,
                                   ReceiverMode mode);

// Merges the support of a policy into one posterior inside the action-1
// region and one outside (both regions are convex, so membership of the
// merged points is preserved, and so is the value). Gives the canonical
// two-point representation of an optimal policy.
FinitePolicy condense_policy(const DecisionProblem& problem, const FinitePolicy& policy,
                             ReceiverMode mode);

// Brute-force lower bound on the optimal value over two-point policies:
//  - no disclosure;
//  - pairs of resolution-k grid points collinear with mu0 within 1e-9,
//    with exact barycentric weights;
//  - ray decompositions anchored at a grid point, with the partner
//    posterior pushed along the exact ray through mu0 (to the simplex
//    boundary from a member anchor, onto the region boundary from a
//    non-member anchor).
// Every candidate is a feasible policy, so the result never exceeds the
// true value, and the ray routes make it converge from below at the 1/k
// rate. The scan is the heavy data-parallel kernel: `grid_oracle_value`
// runs it under OpenMP, `grid_oracle_value_serial` is the reference
// implementation; both produce identical results.
double grid_oracle_value(const DecisionProblem& problem, const Belief& mu0, ReceiverMode mode,
                         int resolution);
double grid_oracle_value_serial(const DecisionProblem& problem, const Belief& mu0,
                                ReceiverMode mode, int resolution);

}  // namespace wishful
