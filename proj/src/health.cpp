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

#include "wishful/health.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wishful {

namespace {

BinaryPayoffs health_payoffs(const HealthParams& p) {
  p.validate();
  return BinaryPayoffs(/*u_low_0=*/-p.severity * p.risk_low,
                       /*u_high_0=*/-p.severity * p.risk_high,
                       /*u_low_1=*/-(1.0 - p.efficacy) * p.risk_low * p.severity - p.cost,
                       /*u_high_1=*/-(1.0 - p.efficacy) * p.risk_high * p.severity - p.cost);
}

}  // namespace

void HealthParams::validate() const {
  if (!(severity > 0.0) || !std::isfinite(severity)) {
    throw std::invalid_argument("severity must be positive");
  }
  if (!(cost > 0.0) || !std::isfinite(cost)) throw std::invalid_argument("cost must be positive");
  if (!(efficacy >= 0.0) || !(efficacy <= 1.0)) {
    throw std::invalid_argument("efficacy must lie in [0, 1]");
  }
  if (!(risk_low > 0.0) || !(risk_low < 1.0) || !(risk_high > 0.0) || !(risk_high < 1.0)) {
    throw std::invalid_argument("risk levels must lie in (0, 1)");
  }
  if (!(risk_low < risk_high)) throw std::invalid_argument("risk_low must be below risk_high");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
  if (!(severity * efficacy * risk_low < cost && cost < severity * efficacy * risk_high)) {
    throw std::invalid_argument(
        "no trade-off: need severity*efficacy*risk_low < cost < severity*efficacy*risk_high");
  }
}

HealthModel::HealthModel(const HealthParams& params)
    : params_(params),
      payoffs_(health_payoffs(params)),
      mu_b_(wishful::mu_bayes(payoffs_)),
      mu_w_(wishful::mu_wishful(payoffs_, params.rho)) {}

DecisionProblem HealthModel::decision_problem() const {
  DecisionProblem problem;
  problem.states = {"low", "high"};
  problem.actions = {"keep", "adopt"};
  problem.utility = {{payoffs_.u_low_0, payoffs_.u_high_0}, {payoffs_.u_low_1, payoffs_.u_high_1}};
  problem.sender_utility = {0.0, 1.0};
  problem.rho = params_.rho;
  problem.validate();
  return problem;
}

double HealthModel::belief(double mu) const {
  if (!(mu >= 0.0) || !(mu <= 1.0)) throw std::invalid_argument("posterior must lie in [0, 1]");
  const double spread = params_.severity * (params_.risk_high - params_.risk_low);
  if (mu < mu_w_) {
    // Not adopting: full exposure, strongest downward tilt.
    return mu / (mu + (1.0 - mu) * std::exp(params_.rho * spread));
  }
  // Adopting: only the residual risk (1 - efficacy) is at stake.
  const double damp = std::exp(-params_.rho * (1.0 - params_.efficacy) * spread);
  return mu * damp / (mu * damp + (1.0 - mu));
}

AdoptionProbability HealthModel::adoption_probability(double mu0) const {
  if (!(mu0 > 0.0) || !(mu0 < 1.0)) {
    throw std::invalid_argument("prior must lie strictly between 0 and 1");
  }
  return AdoptionProbability{std::min(1.0, mu0 / mu_w_), std::min(1.0, mu0 / mu_b_)};
}

double health_mu_bayes(double severity, double cost, double efficacy, double risk_low,
                       double risk_high) {
  const double v = (cost - efficacy * risk_low * severity) /
                   (efficacy * (risk_high - risk_low) * severity);
  return std::clamp(v, 0.0, 1.0);
}

double health_mu_wishful(double severity, double cost, double efficacy, double risk_low,
                         double risk_high, double rho) {
  const double u_low_0 = -severity * risk_low;
  const double u_high_0 = -severity * risk_high;
  const double u_low_1 = -(1.0 - efficacy) * risk_low * severity - cost;
  const double u_high_1 = -(1.0 - efficacy) * risk_high * severity - cost;
  const double d1 = u_low_0 - u_low_1;
  const double d2 = u_high_1 - u_high_0;
  if (d1 <= 0.0) return 0.0;  // adoption dominant even at low risk
  if (d2 <= 0.0) return 1.0;  // adoption never worthwhile
  const double ratio =
      std::exp(-rho * (u_low_0 - u_high_1)) * (std::expm1(-rho * d2) / std::expm1(-rho * d1));
  return 1.0 / (1.0 + ratio);
}

}  // namespace wishful
