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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "wishful/finite.hpp"
#include "wishful/health.hpp"
#include "wishful/simplex_grid.hpp"
#include "wishful/simplex_lp.hpp"

using namespace wishful;
using wishful::testing::Rng;

namespace {

DecisionProblem ternary_problem(double rho = 1.0) {
  DecisionProblem problem;
  problem.states = {"t0", "t1", "t2"};
  problem.actions = {"a0", "a1"};
  problem.utility = {{2.0, 3.0, -1.0}, {1.0, 0.0, 4.0}};
  problem.sender_utility = {0.0, 1.0};
  problem.rho = rho;
  return problem;
}

DecisionProblem binary_from(const BinaryPayoffs& p, double rho) {
  DecisionProblem problem;
  problem.states = {"low", "high"};
  problem.actions = {"a0", "a1"};
  problem.utility = {{p.u_low_0, p.u_high_0}, {p.u_low_1, p.u_high_1}};
  problem.sender_utility = {0.0, 1.0};
  problem.rho = rho;
  return problem;
}

// mass on the gaining state at the 2x2 indifference solve:
// mu * w_gain + (1 - mu) * w_lose = 0
double edge_share(double w_lose, double w_gain) { return -w_lose / (w_gain - w_lose); }

double find_edge_mu2(const std::vector<EdgePoint>& points, std::size_t a, std::size_t b) {
  for (const auto& e : points) {
    if (e.state_a == a && e.state_b == b) return e.belief[b];
  }
  REQUIRE(false);
  return 0.0;
}

// fraction of the simplex hull of `vertices` containing mu, via an LP
// feasibility test: is mu a convex combination of the vertices?
bool in_hull(const std::vector<Belief>& vertices, const Belief& mu) {
  // Feasibility via phase-1 style LP: minimize the deviation variables.
  // max -(sum of slacks) == 0 iff mu decomposes exactly.
  const std::size_t n = mu.size();
  const std::size_t m = vertices.size();
  std::vector<std::vector<double>> A(n, std::vector<double>(m + n, 0.0));
  std::vector<double> b(n);
  std::vector<double> c(m + n, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t s = 0; s < n; ++s) A[s][j] = vertices[j][s];
  }
  for (std::size_t s = 0; s < n; ++s) {
    A[s][m + s] = 1.0;  // slack basis
    b[s] = mu[s];
    c[m + s] = -1.0;
  }
  std::vector<std::size_t> basis(n);
  for (std::size_t s = 0; s < n; ++s) basis[s] = m + s;
  const auto sol = simplex_maximize(A, b, c, std::move(basis));
  return sol.value > -1e-8;
}

}  // namespace

TEST_CASE("dense simplex LP on a hand-checked problem") {
  // max x0 + 2 x1 s.t. x0 + x1 + x2 = 1, x1 <= 1/3 (slack x3); optimum
  // x = (2/3, 1/3, 0, 0) with value 4/3.
  const std::vector<std::vector<double>> A = {{1.0, 1.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 1.0}};
  const std::vector<double> b = {1.0, 1.0 / 3.0};
  const std::vector<double> c = {1.0, 2.0, 0.0, 0.0};
  const auto sol = simplex_maximize(A, b, c, {2, 3});
  CHECK(sol.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(sol.x[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sol.x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(sol.x[2] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(simplex_maximize({{1.0}}, {1.0, 2.0}, {1.0}, {0}), std::invalid_argument);
}

TEST_CASE("simplex grid enumeration") {
  CHECK(simplex_grid_size(3, 40) == 861);
  CHECK(simplex_grid_size(2, 200) == 201);
  const auto pts = simplex_grid_points(3, 2);
  REQUIRE(pts.size() == 6 * 3);
  // first point is the (1,0,0) vertex, last is (0,0,1)
  CHECK(pts[0] == 1.0);
  CHECK(pts[pts.size() - 1] == 1.0);
  for (std::size_t g = 0; g < 6; ++g) {
    CHECK(pts[3 * g] + pts[3 * g + 1] + pts[3 * g + 2] == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("membership on the ternary example") {
  const auto problem = ternary_problem();
  for (ReceiverMode mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
    CHECK(membership(problem, Belief::dirac(3, 2), mode));
    CHECK_FALSE(membership(problem, Belief::dirac(3, 0), mode));
  }
  CHECK(membership(problem, Belief({0.0, 0.70, 0.30}), ReceiverMode::Wishful));
  CHECK_FALSE(membership(problem, Belief({0.0, 0.70, 0.30}), ReceiverMode::Bayesian));

  DecisionProblem three_actions = problem;
  three_actions.actions.push_back("a2");
  three_actions.utility.push_back({0.0, 0.0, 0.0});
  three_actions.sender_utility.push_back(0.0);
  CHECK_THROWS_AS(membership(three_actions, Belief::dirac(3, 0), ReceiverMode::Bayesian),
                  std::invalid_argument);
}

TEST_CASE("edge indifference points: closed-form cross-check") {
  const auto problem = ternary_problem();
  const auto bayes = edge_indifference_points(problem, ReceiverMode::Bayesian);
  REQUIRE(bayes.size() == 2);
  CHECK(find_edge_mu2(bayes, 0, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(find_edge_mu2(bayes, 1, 2) == doctest::Approx(3.0 / 8.0).epsilon(1e-12));

  const auto wish = edge_indifference_points(problem, ReceiverMode::Wishful);
  REQUIRE(wish.size() == 2);
  // independent 2x2 solves on the raw exponential weights
  const double e = std::exp(1.0);
  const double w0 = e - e * e;
  const double w1 = 1.0 - std::exp(3.0);
  const double w2 = std::exp(4.0) - std::exp(-1.0);
  CHECK(find_edge_mu2(wish, 0, 2) == doctest::Approx(edge_share(w0, w2)).epsilon(1e-12));
  CHECK(find_edge_mu2(wish, 0, 2) == doctest::Approx(0.0792986657771).epsilon(1e-9));
  CHECK(find_edge_mu2(wish, 1, 2) == doctest::Approx(edge_share(w1, w2)).epsilon(1e-12));
  CHECK(find_edge_mu2(wish, 1, 2) == doctest::Approx(0.260319535037).epsilon(1e-9));

  // net gain vanishes at every edge point
  for (const auto& mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
    for (const auto& point : edge_indifference_points(problem, mode)) {
      CHECK(std::abs(net_gain(problem, point.belief, mode)) <= 1e-10);
    }
  }
}

TEST_CASE("action polytopes of the ternary example") {
  const auto problem = ternary_problem();
  const auto bayes = action_polytope(problem, ReceiverMode::Bayesian);
  REQUIRE(bayes.vertices.size() == 3);  // dirac t2 + two edge points
  CHECK(bayes.vertices[0][2] == 1.0);

  const auto wish = action_polytope(problem, ReceiverMode::Wishful);
  REQUIRE(wish.vertices.size() == 3);

  // binary-state problem: the region is the interval [mu_wishful, 1]
  const BinaryPayoffs p(3.0, -1.0, 1.0, 4.0);
  const auto interval = action_polytope(binary_from(p, 1.3), ReceiverMode::Wishful);
  REQUIRE(interval.vertices.size() == 2);
  CHECK(interval.vertices[0][1] == 1.0);  // dirac on high
  CHECK(interval.vertices[1][1] == doctest::Approx(mu_wishful(p, 1.3)).epsilon(1e-12));
}

TEST_CASE("polytope soundness: membership equals hull membership") {
  Rng rng(testing::kSeed + 10);
  int checked = 0;
  for (int i = 0; i < 25; ++i) {
    const auto problem = testing::random_problem(rng, 3 + i % 2, 2, 0.3, 2.0);
    for (ReceiverMode mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
      const auto polytope = action_polytope(problem, mode);
      if (polytope.vertices.empty()) continue;
      for (int j = 0; j < 20; ++j) {
        const auto mu = testing::random_interior_belief(rng, problem.n_states());
        const bool member = membership(problem, mu, mode);
        // stay away from the boundary where the two tests may tie-break apart
        if (std::abs(net_gain(problem, mu, mode)) < 1e-7) continue;
        CHECK(member == in_hull(polytope.vertices, mu));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("is_favored on the reference problems") {
  const auto summary = is_favored(ternary_problem());
  CHECK(summary.favored);
  REQUIRE(summary.pairs.size() == 2);
  for (const auto& pair : summary.pairs) {
    CHECK(pair.high_state == 2);
    CHECK(pair.report.favored == Favoredness::Favored);
  }

  // two-state embeddings go through the same machinery
  CHECK(is_favored(binary_from(BinaryPayoffs(3.0, 0.5, 1.0, 4.0), 0.7)).favored);
  CHECK_FALSE(is_favored(binary_from(BinaryPayoffs(4.0, 1.0, -1.0, 3.0), 2.0)).favored);
  CHECK(is_favored(binary_from(BinaryPayoffs(4.0, 1.0, -1.0, 3.0), 0.3)).favored);
}

TEST_CASE("is_favored equals the pairwise two-state comparison") {
  Rng rng(testing::kSeed + 11);
  int informative = 0;
  for (int i = 0; i < 120; ++i) {
    const auto problem = testing::random_problem(rng, 3 + i % 2, 2, 0.2, 2.5);
    const auto summary = is_favored(problem);
    bool all_pairs_favored = true;
    bool knife_edge = false;
    for (const auto& pair : summary.pairs) {
      knife_edge = knife_edge || std::abs(pair.report.mu_w - pair.report.mu_b) < 1e-9;
      all_pairs_favored =
          all_pairs_favored && pair.report.mu_w <= pair.report.mu_b + 1e-9;
    }
    if (knife_edge) continue;
    ++informative;
    CHECK(summary.favored == all_pairs_favored);
  }
  CHECK(informative > 80);
}

TEST_CASE("LP policy on the binary health problem matches the threshold policy") {
  const HealthModel model(HealthParams{2.0, 0.5, 0.8, 0.1, 0.9, 2.0});
  const auto problem = model.decision_problem();
  const Belief mu0({0.8, 0.2});
  const auto policy = optimal_policy_finite(problem, mu0, ReceiverMode::Wishful);
  CHECK(policy.value == doctest::Approx(0.2 / model.mu_wishful()).epsilon(1e-10));
  const auto bayes = optimal_policy_finite(problem, mu0, ReceiverMode::Bayesian);
  CHECK(bayes.value == doctest::Approx(0.2 / model.mu_bayes()).epsilon(1e-10));

  const auto condensed = condense_policy(problem, policy, ReceiverMode::Wishful);
  REQUIRE(condensed.posteriors.size() == 2);
  CHECK(condensed.posteriors[0][1] == doctest::Approx(model.mu_wishful()).epsilon(1e-10));
  CHECK(condensed.posteriors[1][1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("LP policy on the ternary example") {
  const auto problem = ternary_problem();
  const Belief mu0({0.45, 0.45, 0.10});

  // interior of both regions: no disclosure, value 1
  const Belief inside({0.01, 0.01, 0.98});
  CHECK(optimal_policy_finite(problem, inside, ReceiverMode::Bayesian).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(optimal_policy_finite(problem, inside, ReceiverMode::Wishful).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto wish = optimal_policy_finite(problem, mu0, ReceiverMode::Wishful);
  const auto bayes = optimal_policy_finite(problem, mu0, ReceiverMode::Bayesian);
  // frozen from the hand LP solve on the exact edge thresholds
  CHECK(wish.value == doctest::Approx(0.724015467883).epsilon(1e-9));
  CHECK(bayes.value == doctest::Approx(0.566666666667).epsilon(1e-9));
  CHECK(wish.value > bayes.value);

  // the condensed policy has one posterior on the region boundary and one
  // strictly outside
  const auto condensed = condense_policy(problem, wish, ReceiverMode::Wishful);
  REQUIRE(condensed.posteriors.size() == 2);
  CHECK(std::abs(net_gain(problem, condensed.posteriors[0], ReceiverMode::Wishful)) < 1e-9);
  CHECK(net_gain(problem, condensed.posteriors[1], ReceiverMode::Wishful) < -1e-6);
  CHECK(condensed.weights[0] == doctest::Approx(wish.value).epsilon(1e-10));

  // Bayes plausibility of the raw policy
  for (std::size_t s = 0; s < 3; ++s) {
    double avg = 0.0;
    for (std::size_t p = 0; p < wish.posteriors.size(); ++p) {
      avg += wish.weights[p] * wish.posteriors[p][s];
    }
    CHECK(avg == doctest::Approx(mu0[s]).epsilon(1e-10));
  }

  CHECK_THROWS_AS(optimal_policy_finite(problem, Belief({0.0, 0.9, 0.1}), ReceiverMode::Wishful),
                  std::invalid_argument);
}

TEST_CASE("grid oracle: inside, binary and ternary cases") {
  const auto problem = ternary_problem();
  // priors inside the region score 1 at every resolution
  for (int k : {3, 10, 25}) {
    CHECK(grid_oracle_value(problem, Belief({0.01, 0.01, 0.98}), ReceiverMode::Wishful, k) == 1.0);
  }

  // binary-state case against the closed-form threshold policy
  const HealthModel model(HealthParams{2.0, 0.5, 0.8, 0.1, 0.9, 2.0});
  const auto health = model.decision_problem();
  const double oracle =
      grid_oracle_value(health, Belief({0.8, 0.2}), ReceiverMode::Wishful, 200);
  CHECK(std::abs(oracle - 0.2 / model.mu_wishful()) < 5e-3);
  CHECK(oracle <= 0.2 / model.mu_wishful() + 1e-12);

  // ternary: oracle sandwiched under the LP value
  const Belief mu0({0.45, 0.45, 0.10});
  const auto lp = optimal_policy_finite(problem, mu0, ReceiverMode::Wishful);
  const double k50 = grid_oracle_value(problem, mu0, ReceiverMode::Wishful, 50);
  CHECK(k50 <= lp.value + 1e-9);
  CHECK(lp.value - k50 < 0.02);
}

TEST_CASE("grid oracle rejects resolutions beyond the work guard") {
  Rng rng(testing::kSeed + 16);
  const auto problem = testing::random_problem(rng, 6, 2);
  CHECK_THROWS_AS(
      grid_oracle_value(problem, Belief::uniform(6), ReceiverMode::Bayesian, 40),
      std::invalid_argument);
}

TEST_CASE("grid oracle parallel kernel equals the serial reference") {
  Rng rng(testing::kSeed + 12);
  for (int i = 0; i < 10; ++i) {
    const auto problem = testing::random_problem(rng, 3, 2, 0.3, 2.0);
    const auto mu0 = testing::random_interior_belief(rng, 3);
    for (ReceiverMode mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
      const double parallel = grid_oracle_value(problem, mu0, mode, 30);
      const double serial = grid_oracle_value_serial(problem, mu0, mode, 30);
      CHECK(parallel == serial);
    }
  }
}

TEST_CASE("LP value dominates the grid oracle on random problems") {
  Rng rng(testing::kSeed + 13);
  const int k = 40;
  for (int i = 0; i < 25; ++i) {
    const auto problem = testing::random_problem(rng, 3, 2, 0.3, 2.0);
    // prior on the oracle grid so collinear decompositions exist
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<double> counts{1.0, 1.0, 1.0};
    for (int r = 0; r < k - 3; ++r) counts[pick(rng)] += 1.0;
    std::vector<double> p(3);
    for (std::size_t s = 0; s < 3; ++s) p[s] = counts[s] / k;
    const Belief mu0(std::move(p));
    for (ReceiverMode mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
      const double lp = optimal_policy_finite(problem, mu0, mode).value;
      const double oracle = grid_oracle_value(problem, mu0, mode, k);
      CHECK(lp >= oracle - 1e-9);
      CHECK(lp - oracle <= 2.0 / k);
    }
  }
}

TEST_CASE("four-state LP against the oracle") {
  Rng rng(testing::kSeed + 15);
  const int k = 20;
  for (int i = 0; i < 5; ++i) {
    const auto problem = testing::random_problem(rng, 4, 2, 0.3, 1.5);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<double> counts{1.0, 1.0, 1.0, 1.0};
    for (int r = 0; r < k - 4; ++r) counts[pick(rng)] += 1.0;
    std::vector<double> p(4);
    for (std::size_t s = 0; s < 4; ++s) p[s] = counts[s] / k;
    const Belief mu0(std::move(p));
    for (ReceiverMode mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
      const double lp = optimal_policy_finite(problem, mu0, mode).value;
      const double oracle = grid_oracle_value(problem, mu0, mode, k);
      CHECK(lp >= oracle - 1e-9);
      CHECK(lp - oracle <= 2.0 / k);
    }
  }
}

TEST_CASE("binary cross-check: finite LP equals the threshold policy value") {
  Rng rng(testing::kSeed + 14);
  for (int i = 0; i < 50; ++i) {
    const auto p = testing::random_binary_payoffs(rng);
    const double rho = testing::uniform(rng, 0.2, 3.0);
    const double mu0 = testing::uniform(rng, 0.05, 0.95);
    const auto problem = binary_from(p, rho);
    const Belief prior({1.0 - mu0, mu0});
    const double threshold = mu_wishful(p, rho);
    const double expected = mu0 >= threshold ? 1.0 : mu0 / threshold;
    CHECK(optimal_policy_finite(problem, prior, ReceiverMode::Wishful).value ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("condensing preserves plausibility, value and membership split") {
  Rng rng(testing::kSeed + 17);
  for (int i = 0; i < 40; ++i) {
    const auto problem = testing::random_problem(rng, 3 + i % 2, 2, 0.3, 2.0);
    const auto mu0 = testing::random_interior_belief(rng, problem.n_states());
    for (ReceiverMode mode : {ReceiverMode::Bayesian, ReceiverMode::Wishful}) {
      const auto policy = optimal_policy_finite(problem, mu0, mode);
      const auto merged = condense_policy(problem, policy, mode);
      CHECK(merged.value == doctest::Approx(policy.value).epsilon(1e-10));
      CHECK(merged.posteriors.size() <= 2);
      double weight = 0.0;
      for (std::size_t s = 0; s < mu0.size(); ++s) {
        double avg = 0.0;
        for (std::size_t p = 0; p < merged.posteriors.size(); ++p) {
          avg += merged.weights[p] * merged.posteriors[p][s];
        }
        CHECK(avg == doctest::Approx(mu0[s]).epsilon(1e-9));
      }
      for (std::size_t p = 0; p < merged.posteriors.size(); ++p) weight += merged.weights[p];
      CHECK(weight == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("wishful value weakly grows with rho on the favored ternary example") {
  const Belief mu0({0.45, 0.45, 0.10});
  double prev = 0.0;
  for (double rho : {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    const auto problem = ternary_problem(rho);
    REQUIRE(is_favored(problem).favored);
    const double value = optimal_policy_finite(problem, mu0, ReceiverMode::Wishful).value;
    CHECK(value >= prev - 1e-10);
    prev = value;
  }
}
