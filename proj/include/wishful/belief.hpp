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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wishful {

// Probability vector over a finite ordered state set. Entries must be
// nonnegative and sum to one within 1e-12. Immutable after construction, so
// values can be shared across threads freely.
class Belief {
 public:
  explicit Belief(std::vector<double> probs);

  static Belief uniform(std::size_t n);
  static Belief dirac(std::size_t n, std::size_t state);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probs() const { return p_; }

  bool operator==(const Belief& other) const { return p_ == other.p_; }

 private:
  std::vector<double> p_;
};

// A finite decision problem: receiver utility table u[action][state], a
// state-independent sender utility per action, and the self-deception
// weight rho > 0 that trades anticipatory utility against the cost of
// distorting beliefs.
struct DecisionProblem {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::vector<std::vector<double>> utility;  // [action][state]
  std::vector<double> sender_utility;        // [action]
  double rho = 1.0;

  std::size_t n_states() const { return states.size(); }
  std::size_t n_actions() const { return actions.size(); }
  double u(std::size_t action, std::size_t state) const { return utility[action][state]; }

  // Throws std::invalid_argument on malformed tables or rho <= 0.
  void validate() const;

  // Diagnostic only: pairs (a, b) where action a is weakly dominated by b
  // with strict domination somewhere and equal sender utility. Such actions
  // are never chosen and usually indicate a mis-specified table.
  std::vector<std::pair<std::size_t, std::size_t>> dominated_action_pairs() const;
};

// Receiver's optimally distorted belief, the action it motivates, and the
// attained psychological well-being.
struct MotivatedOutcome {
  Belief belief;
  std::size_t action = 0;
  double wellbeing = 0.0;
};

// Relative tolerance used when comparing well-being or expected-utility
// values for action indifference.
inline constexpr double kIndifferenceRelTol = 1e-10;

// Kullback-Leibler divergence sum_s eta(s) ln(eta(s)/mu(s)) with the
// 0 ln 0 = 0 convention. Returns +infinity when eta puts mass outside the
// support of mu. Throws std::invalid_argument on dimension mismatch.
double kl_divergence(const Belief& eta, const Belief& mu);

// The optimal belief motivated by a fixed action: mu exponentially tilted
// by exp(rho u(action, .)), normalized. Computed with a max-shift over the
// support of mu so large rho*u never overflows.
Belief tilt_belief(const DecisionProblem& problem, std::size_t action, const Belief& mu);

// Psychological well-being of motivating `action`:
// (1/rho) ln sum_s exp(rho u(action, s)) mu(s), evaluated as a max-shifted
// log-sum-exp. Exact for state-independent utility rows.
double wellbeing(const DecisionProblem& problem, std::size_t action, const Belief& mu);

// Actions whose well-being is maximal within kIndifferenceRelTol.
std::vector<std::size_t> optimal_action_set(const DecisionProblem& problem, const Belief& mu);

// Benchmark without belief distortion: actions maximizing expected utility
// under mu itself, same tolerance rule.
std::vector<std::size_t> bayesian_action_set(const DecisionProblem& problem, const Belief& mu);

// Picks the well-being-maximizing action (ties broken by sender utility,
// then by lowest action index) and returns the tilted belief, the action
// and the attained well-being.
MotivatedOutcome optimal_belief(const DecisionProblem& problem, const Belief& mu);

}  // namespace wishful
