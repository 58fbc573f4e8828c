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

#include "wishful/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wishful {

namespace {

constexpr double kSumTol = 1e-12;

void check_action(const DecisionProblem& problem, std::size_t action) {
  problem.validate();
  if (action >= problem.n_actions()) {
    throw std::invalid_argument("action index out of range");
  }
}

void check_belief(const DecisionProblem& problem, const Belief& mu) {
  if (mu.size() != problem.n_states()) {
    throw std::invalid_argument("belief dimension does not match the state set");
  }
}

}  // namespace

Belief::Belief(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw std::invalid_argument("belief must have at least one state");
  double sum = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("belief entries must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument("belief entries must sum to one");
  }
}

Belief Belief::uniform(std::size_t n) {
  return Belief(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Belief Belief::dirac(std::size_t n, std::size_t state) {
  if (state >= n) throw std::invalid_argument("dirac state out of range");
  std::vector<double> p(n, 0.0);
  p[state] = 1.0;
  return Belief(std::move(p));
}

void DecisionProblem::validate() const {
  if (states.size() < 2) throw std::invalid_argument("need at least two states");
  if (actions.size() < 2) throw std::invalid_argument("need at least two actions");
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("rho must be strictly positive and finite");
  }
  if (utility.size() != actions.size()) {
    throw std::invalid_argument("utility table must have one row per action");
  }
  for (const auto& row : utility) {
    if (row.size() != states.size()) {
      throw std::invalid_argument("utility row length must match the state set");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("utilities must be finite");
    }
  }
  if (sender_utility.size() != actions.size()) {
    throw std::invalid_argument("sender utility must have one entry per action");
  }
  for (double v : sender_utility) {
    if (!std::isfinite(v)) throw std::invalid_argument("sender utilities must be finite");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> DecisionProblem::dominated_action_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_actions(); ++a) {
    for (std::size_t b = 0; b < n_actions(); ++b) {
      if (a == b || sender_utility[a] != sender_utility[b]) continue;
      bool weak = true;
      bool strict = false;
      for (std::size_t s = 0; s < n_states(); ++s) {
        if (u(a, s) > u(b, s)) weak = false;
        if (u(a, s) < u(b, s)) strict = true;
      }
      if (weak && strict) out.emplace_back(a, b);
    }
  }
  return out;
}

double kl_divergence(const Belief& eta, const Belief& mu) {
  if (eta.size() != mu.size()) {
    throw std::invalid_argument("kl_divergence: beliefs live on different state sets");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const double p = eta[i];
    if (p == 0.0) continue;  // 0 ln 0 = 0
    const double q = mu[i];
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    sum += p * std::log(p / q);
  }
  // Rounding can push an exact zero a hair negative.
  return sum < 0.0 ? 0.0 : sum;
}

Belief tilt_belief(const DecisionProblem& problem, std::size_t action, const Belief& mu) {
  check_action(problem, action);
  check_belief(problem, mu);
  const std::size_t n = mu.size();
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < n; ++s) {
    if (mu[s] > 0.0) shift = std::max(shift, problem.rho * problem.u(action, s));
  }
  std::vector<double> w(n, 0.0);
  double total = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (mu[s] == 0.0) continue;
    w[s] = mu[s] * std::exp(problem.rho * problem.u(action, s) - shift);
    total += w[s];
  }
  for (double& v : w) v /= total;
  return Belief(std::move(w));
}

double wellbeing(const DecisionProblem& problem, std::size_t action, const Belief& mu) {
  check_action(problem, action);
  check_belief(problem, mu);
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < mu.size(); ++s) {
    if (mu[s] > 0.0) shift = std::max(shift, problem.rho * problem.u(action, s));
  }
  double total = 0.0;
  for (std::size_t s = 0; s < mu.size(); ++s) {
    if (mu[s] == 0.0) continue;
    total += mu[s] * std::exp(problem.rho * problem.u(action, s) - shift);
  }
  return (shift + std::log(total)) / problem.rho;
}

namespace {

std::vector<std::size_t> argmax_set(const std::vector<double>& scores) {
  double best = -std::numeric_limits<double>::infinity();
  for (double v : scores) best = std::max(best, v);
  const double tol = kIndifferenceRelTol * std::max(1.0, std::abs(best));
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < scores.size(); ++a) {
    if (scores[a] >= best - tol) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> optimal_action_set(const DecisionProblem& problem, const Belief& mu) {
  std::vector<double> w(problem.n_actions());
  for (std::size_t a = 0; a < problem.n_actions(); ++a) w[a] = wellbeing(problem, a, mu);
  return argmax_set(w);
}

std::vector<std::size_t> bayesian_action_set(const DecisionProblem& problem, const Belief& mu) {
  problem.validate();
  check_belief(problem, mu);
  std::vector<double> eu(problem.n_actions(), 0.0);
  for (std::size_t a = 0; a < problem.n_actions(); ++a) {
    for (std::size_t s = 0; s < mu.size(); ++s) eu[a] += problem.u(a, s) * mu[s];
  }
  return argmax_set(eu);
}

MotivatedOutcome optimal_belief(const DecisionProblem& problem, const Belief& mu) {
  const auto candidates = optimal_action_set(problem, mu);
  std::size_t pick = candidates.front();
  for (std::size_t a : candidates) {
    if (problem.sender_utility[a] > problem.sender_utility[pick] + 1e-12) pick = a;
  }
  return MotivatedOutcome{tilt_belief(problem, pick, mu), pick, wellbeing(problem, pick, mu)};
}

}  // namespace wishful
