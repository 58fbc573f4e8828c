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

#include "wishful/belief.hpp"
#include "wishful/binary.hpp"

namespace wishful {

// Preventive-treatment scenario. The state is the infection risk (low or
// high), action 1 adopts a treatment of the given efficacy at the given
// cost, and falling ill costs `severity`. Payoffs:
//   u(0, risk) = -severity * risk
//   u(1, risk) = -(1 - efficacy) * risk * severity - cost.
struct HealthParams {
  double severity = 2.0;
  double cost = 0.5;
  double efficacy = 0.8;
  double risk_low = 0.1;
  double risk_high = 0.9;
  double rho = 2.0;

  // Requires 0 < risk_low < risk_high < 1 and the interior trade-off
  // severity*efficacy*risk_low < cost < severity*efficacy*risk_high, so
  // neither action is dominant. Throws std::invalid_argument otherwise.
  void validate() const;
};

struct AdoptionProbability {
  double wishful = 0.0;
  double bayes = 0.0;
};

class HealthModel {
 public:
  explicit HealthModel(const HealthParams& params);

  const HealthParams& params() const { return params_; }
  const BinaryPayoffs& payoffs() const { return payoffs_; }
  double mu_bayes() const { return mu_b_; }
  double mu_wishful() const { return mu_w_; }

  // The same scenario as a two-state decision problem (states low/high,
  // actions keep/adopt); consistent with the closed forms below.
  DecisionProblem decision_problem() const;

  // Receiver's distorted belief at posterior mu: the downward tilt while
  // not adopting below mu_wishful, the (weaker) downward tilt while
  // adopting at or above it. Always <= mu.
  double belief(double mu) const;

  // Probability of inducing adoption under the sender-optimal policy,
  // min(1, mu0/threshold) for the wishful and undistorted thresholds.
  AdoptionProbability adoption_probability(double mu0) const;

 private:
  HealthParams params_;
  BinaryPayoffs payoffs_;
  double mu_b_ = 0.0;
  double mu_w_ = 0.0;
};

// Closed-form thresholds, tolerant of the boundary severities where one
// action becomes weakly dominant (the threshold then reaches 0 or 1).
// Used by severity sweeps that include the boundary of the trade-off range.
double health_mu_bayes(double severity, double cost, double efficacy, double risk_low,
                       double risk_high);
double health_mu_wishful(double severity, double cost, double efficacy, double risk_low,
                         double risk_high, double rho);

}  // namespace wishful
