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

// End-to-end acceptance suite: one line per criterion, nonzero exit if any
// of them fails. Tolerances are fixed here, not tuned at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "test_support.hpp"
#include "wishful/belief.hpp"
#include "wishful/binary.hpp"
#include "wishful/finite.hpp"
#include "wishful/health.hpp"
#include "wishful/investor.hpp"
#include "wishful/scenario.hpp"
#include "wishful/voting.hpp"

using namespace wishful;
using wishful::testing::Rng;
namespace cli = wishful::cli;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// --- criterion 1: health thresholds and distorted beliefs -----------------

void criterion_health() {
  const auto t0 = std::chrono::steady_clock::now();
  const HealthModel model(HealthParams{2.0, 0.5, 0.8, 0.1, 0.9, 2.0});
  const DecisionProblem dp = model.decision_problem();
  const Belief at({1.0 - model.mu_wishful(), model.mu_wishful()});
  const double eta0 = tilt_belief(dp, 0, at)[1];
  const double eta1 = tilt_belief(dp, 1, at)[1];
  const double elapsed = ms_since(t0);

  bool pass = near(model.mu_bayes(), 0.265625, 1e-9);
  pass = pass && near(model.mu_wishful(), 0.685486, 1e-5);
  pass = pass && near(eta0, 0.0815927, 1e-5);
  pass = pass && near(eta1, 0.534719, 1e-5);
  pass = pass && elapsed < 1.0;
  std::ostringstream detail;
  detail << "mu_B=" << model.mu_bayes() << " mu_W=" << model.mu_wishful() << " eta0=" << eta0
         << " eta1=" << eta1 << " in " << elapsed << " ms";
  report(1, "health thresholds", pass, detail.str());
}

// --- criterion 2: voting figure -------------------------------------------

void criterion_voting() {
  Electorate e;
  e.betas = {0.25, 0.5, 0.75};
  e.rho = 2.0;
  const double t1 = voter_threshold(0.25, 2.0);
  const double t2 = voter_threshold(0.5, 2.0);
  const double t3 = voter_threshold(0.75, 2.0);
  const auto profile = polarization(0.5, e);
  const double argmax = polarization_argmax(e);

  bool pass = near(t1, 0.842940, 1e-5) && near(t2, 0.5, 1e-12) && near(t3, 0.157060, 1e-5);
  pass = pass && near(profile.beliefs[0], 0.182426, 1e-5) &&
         near(profile.beliefs[1], 0.731059, 1e-5) && near(profile.beliefs[2], 0.817574, 1e-5);
  pass = pass && near(profile.pi, 1.270296, 1e-4);
  pass = pass && near(argmax, 0.5, 1e-6);
  std::ostringstream detail;
  detail << "thresholds=(" << t1 << "," << t2 << "," << t3 << ") pi=" << profile.pi
         << " argmax=" << argmax;
  report(2, "voting polarization figure", pass, detail.str());
}

// --- criterion 3: threshold crossing point --------------------------------

void criterion_rho_bar() {
  const BinaryPayoffs p(3.0, -1.0, 1.0, 4.0);
  bool pass = near(mu_bayes(p), 2.0 / 7.0, 1e-12);
  const auto crossing = rho_bar(p);
  pass = pass && crossing.has_value();
  if (crossing) {
    pass = pass && near(mu_wishful(p, *crossing), mu_bayes(p), 1e-9);
    pass = pass && near(*crossing, 0.621806, 5e-4);
  }
  std::ostringstream detail;
  detail << "mu_B=" << mu_bayes(p) << " rho_bar=" << (crossing ? *crossing : -1.0);
  report(3, "threshold crossing for (3,-1,1,4)", pass, detail.str());
}

// --- criterion 4: the three payoff patterns -------------------------------

void criterion_patterns() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;

  const BinaryPayoffs case_i(3.0, 0.5, 1.0, 4.0);
  for (double rho : {0.1, 1.0, 10.0}) {
    pass = pass && classify_favored(case_i, rho).favored == Favoredness::Favored;
  }

  const BinaryPayoffs case_ii(3.0, -1.0, 1.0, 4.0);
  const auto rb2 = rho_bar(case_ii);
  pass = pass && rb2.has_value();
  for (double rho : {0.1, 0.3, 0.5, 0.7, 1.0, 10.0}) {
    const bool favored = classify_favored(case_ii, rho).favored == Favoredness::Favored;
    pass = pass && favored == (rho > *rb2);
  }

  const BinaryPayoffs case_iii(4.0, 1.0, -1.0, 3.0);
  const auto rb3 = rho_bar(case_iii);
  pass = pass && rb3.has_value();
  for (double rho : {0.1, 0.3, 0.5, 0.7, 1.0, 2.0, 10.0}) {
    const bool favored = classify_favored(case_iii, rho).favored == Favoredness::Favored;
    pass = pass && favored == (rho < *rb3);
  }

  const double elapsed = ms_since(t0);
  pass = pass && elapsed < 10.0;
  std::ostringstream detail;
  detail << "rho_bar(ii)=" << (rb2 ? *rb2 : -1.0) << " rho_bar(iii)=" << (rb3 ? *rb3 : -1.0)
         << " in " << elapsed << " ms";
  report(4, "favored-action patterns", pass, detail.str());
}

// --- criterion 5: small-rho limit and the logistic ODE ---------------------

void criterion_limits_ode() {
  Rng rng(testing::kSeed + 40);
  bool pass = true;
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_binary_payoffs(rng);
    pass = pass && std::abs(mu_wishful(p, 1e-6) - mu_bayes(p)) < 1e-4;
  }
  const BinaryPayoffs p(3.0, -1.0, 1.0, 4.0);
  double worst = 0.0;
  for (int g = 0; g < 50; ++g) {
    const double rho = 0.05 + g * (3.0 - 0.05) / 49.0;
    const double h = 1e-5;
    const double derivative = (mu_wishful(p, rho + h) - mu_wishful(p, rho - h)) / (2.0 * h);
    const double mw = mu_wishful(p, rho);
    const double rhs = alpha_coeff(p, rho) * mw * (1.0 - mw);
    const double scale = std::max(std::abs(rhs), 1e-6);
    worst = std::max(worst, std::abs(derivative - rhs) / scale);
  }
  pass = pass && worst < 1e-4;
  std::ostringstream detail;
  detail << "worst ODE relative error " << worst;
  report(5, "limits and logistic ODE", pass, detail.str());
}

// --- criterion 6: finite-state LP against the grid oracle ------------------

void criterion_finite() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(testing::kSeed + 41);
  bool pass = true;
  const int k = 40;
  for (int i = 0; i < 50; ++i) {
    const auto problem = testing::random_problem(rng, 3, 2, 0.3, 2.0);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<double> counts{1.0, 1.0, 1.0};
    for (int r = 0; r < k - 3; ++r) counts[pick(rng)] += 1.0;
    const Belief mu0({counts[0] / k, counts[1] / k, counts[2] / k});
    const ReceiverMode mode = i % 2 == 0 ? ReceiverMode::Wishful : ReceiverMode::Bayesian;
    const double lp = optimal_policy_finite(problem, mu0, mode).value;
    const double oracle = grid_oracle_value(problem, mu0, mode, k);
    pass = pass && lp >= oracle - 1e-9 && lp - oracle <= 2.0 / k;
  }

  DecisionProblem ternary;
  ternary.states = {"t0", "t1", "t2"};
  ternary.actions = {"a0", "a1"};
  ternary.utility = {{2.0, 3.0, -1.0}, {1.0, 0.0, 4.0}};
  ternary.sender_utility = {0.0, 1.0};
  ternary.rho = 1.0;
  const Belief mu0({0.45, 0.45, 0.10});
  const double vw = optimal_policy_finite(ternary, mu0, ReceiverMode::Wishful).value;
  const double vb = optimal_policy_finite(ternary, mu0, ReceiverMode::Bayesian).value;
  pass = pass && vw > vb && is_favored(ternary).favored;

  const double elapsed = ms_since(t0);
  pass = pass && elapsed < 5000.0;
  std::ostringstream detail;
  detail << "ternary wishful=" << vw << " bayesian=" << vb << " in " << elapsed << " ms";
  report(6, "finite-state oracle equivalence", pass, detail.str());
}

// --- criterion 7: investor thresholds --------------------------------------

void criterion_investor() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto uniform_prior = ReturnPrior::uniform(-2.0, 1.0);

  // independent oracle for the wishful cutoff: root of (e - e^z) = (1 - z)
  double lo = -2.0, hi = 0.0;
  auto gap = [](double z) { return (std::exp(1.0) - std::exp(z)) - (1.0 - z); };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) * gap(lo) > 0.0 ? lo : hi) = mid;
  }
  const double theta_w_oracle = 0.5 * (lo + hi);

  const auto sol = solve_investor(uniform_prior, 1.0);
  bool pass = near(sol.theta_bayes, -1.0, 1e-9);
  pass = pass && near(sol.theta_wishful, theta_w_oracle, 1e-9);
  pass = pass && sol.prob_wishful > sol.prob_bayes;

  for (int i = 1; i < 200 && pass; ++i) {
    const double z = -2.0 + 3.0 * i / 200.0;
    pass = pass && trunc_exp_mean(uniform_prior, z, 1.0) >
                       std::exp(1.0 * trunc_mean(uniform_prior, z));
  }

  Rng rng(testing::kSeed + 42);
  int solved = 0;
  while (solved < 100 && pass) {
    const double low = testing::uniform(rng, -3.0, -1.0);
    const double high = testing::uniform(rng, 0.3, 1.5);
    const double rho = testing::uniform(rng, 0.2, 2.0);
    const ReturnPrior prior = solved % 2 == 0
                                  ? ReturnPrior::uniform(low, high)
                                  : ReturnPrior::truncated_normal(
                                        testing::uniform(rng, -1.0, 0.0),
                                        testing::uniform(rng, 0.3, 1.0), low, high);
    if (exp_moment(prior, rho) >= 1.0) continue;
    const auto s = solve_investor(prior, rho);
    pass = pass && s.theta_wishful < s.theta_bayes;
    ++solved;
  }

  const double elapsed = ms_since(t0);
  pass = pass && elapsed < 2000.0;
  std::ostringstream detail;
  detail << "theta_B=" << sol.theta_bayes << " theta_W=" << sol.theta_wishful << " (oracle "
         << theta_w_oracle << ") in " << elapsed << " ms";
  report(7, "investor thresholds", pass, detail.str());
}

// --- criterion 8: randomized property suites --------------------------------

void criterion_properties() {
  Rng rng(testing::kSeed);
  bool pass = true;
  std::string failed;

  // normalization of tilted beliefs
  for (int i = 0; i < 1000 && pass; ++i) {
    const auto problem = testing::random_problem(rng, 2 + i % 5, 2 + i % 3);
    const auto mu = testing::random_interior_belief(rng, problem.n_states());
    const auto eta = tilt_belief(problem, i % problem.n_actions(), mu);
    double sum = 0.0;
    for (std::size_t s = 0; s < eta.size(); ++s) sum += eta[s];
    pass = pass && std::abs(sum - 1.0) <= 1e-12;
  }
  if (!pass) failed = "normalization";

  // Donsker-Varadhan bound and its attainment
  if (pass) {
    for (int i = 0; i < 1000 && pass; ++i) {
      const auto problem = testing::random_problem(rng, 2 + i % 4, 2);
      const auto mu = testing::random_interior_belief(rng, problem.n_states());
      const std::size_t a = i % 2;
      const double w = wellbeing(problem, a, mu);
      const auto eta = testing::random_interior_belief(rng, problem.n_states());
      double objective = 0.0;
      for (std::size_t s = 0; s < eta.size(); ++s) objective += problem.u(a, s) * eta[s];
      objective -= kl_divergence(eta, mu) / problem.rho;
      pass = pass && objective <= w + 1e-10;
      const auto tilt = tilt_belief(problem, a, mu);
      double attained = 0.0;
      for (std::size_t s = 0; s < tilt.size(); ++s) attained += problem.u(a, s) * tilt[s];
      attained -= kl_divergence(tilt, mu) / problem.rho;
      pass = pass && std::abs(attained - w) <= 1e-8 * (1.0 + std::abs(w));
    }
    if (!pass) failed = "donsker-varadhan";
  }

  // behavioral equivalence with exponentially transformed utilities
  if (pass) {
    for (int i = 0; i < 1000 && pass; ++i) {
      const auto problem = testing::random_problem(rng, 2 + i % 4, 2 + i % 3);
      const auto mu = testing::random_interior_belief(rng, problem.n_states());
      DecisionProblem transformed = problem;
      for (std::size_t a = 0; a < problem.n_actions(); ++a) {
        for (std::size_t s = 0; s < problem.n_states(); ++s) {
          transformed.utility[a][s] = std::exp(problem.rho * problem.u(a, s));
        }
      }
      pass = pass && optimal_action_set(problem, mu) == bayesian_action_set(transformed, mu);
    }
    if (!pass) failed = "behavioral-equivalence";
  }

  // deterministic tie-breaking
  if (pass) {
    for (int i = 0; i < 1000 && pass; ++i) {
      const auto problem = testing::random_problem(rng, 2 + i % 3, 2 + i % 2);
      const auto mu = testing::random_interior_belief(rng, problem.n_states());
      const auto first = optimal_belief(problem, mu);
      const auto second = optimal_belief(problem, mu);
      pass = pass && first.action == second.action && first.belief == second.belief &&
             first.wellbeing == second.wellbeing;
    }
    if (!pass) failed = "tie-break determinism";
  }

  // voter threshold symmetry
  if (pass) {
    for (int i = 0; i < 1000 && pass; ++i) {
      const double beta = testing::uniform(rng, 0.01, 0.99);
      const double rho = testing::uniform(rng, 0.05, 6.0);
      pass = pass &&
             std::abs(voter_threshold(beta, rho) + voter_threshold(1.0 - beta, rho) - 1.0) <=
                 1e-12;
    }
    if (!pass) failed = "threshold symmetry";
  }

  // CSV determinism of a preset run
  if (pass) {
    for (const char* preset : {"health-fig3", "binary-fig6a", "voting-fig7"}) {
      std::ostringstream first, second, err;
      pass = pass && cli::run(cli::preset_config(preset), first, err) == cli::kExitOk;
      pass = pass && cli::run(cli::preset_config(preset), second, err) == cli::kExitOk;
      pass = pass && first.str() == second.str() && !first.str().empty();
    }
    if (!pass) failed = "csv determinism";
  }

  report(8, "randomized property suites (seed 20260810)", pass,
         pass ? "1000 cases per suite" : "failed suite: " + failed);
}

}  // namespace

int main() {
  criterion_health();
  criterion_voting();
  criterion_rho_bar();
  criterion_patterns();
  criterion_limits_ode();
  criterion_finite();
  criterion_investor();
  criterion_properties();
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
