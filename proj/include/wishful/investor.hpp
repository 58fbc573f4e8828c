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

// Continuous prior over the return of a risky asset on [low, high] with
// low < 0 < high. Built-in families keep pdf and cdf consistent by
// construction; construction verifies F(low) = 0, F(high) = 1, monotone F
// and unit mass under quadrature.
class ReturnPrior {
 public:
  enum class Kind { Uniform, TruncatedNormal, PiecewiseLinear };

  static ReturnPrior uniform(double low, double high);
  static ReturnPrior truncated_normal(double mean, double stddev, double low, double high);
  // Density proportional to the piecewise-linear interpolation of
  // (x[i], density[i]); normalized to unit mass.
  static ReturnPrior piecewise_linear(std::vector<double> x, std::vector<double> density);

  Kind kind() const { return kind_; }
  double support_low() const { return low_; }
  double support_high() const { return high_; }
  double pdf(double t) const;
  double cdf(double t) const;

  // Interior points where the density is not smooth (the knots of a
  // piecewise-linear density); quadrature splits there.
  std::vector<double> interior_breakpoints() const;

 private:
  ReturnPrior() = default;
  void validate() const;

  Kind kind_ = Kind::Uniform;
  double low_ = 0.0;
  double high_ = 0.0;
  // truncated normal
  double mean_ = 0.0;
  double stddev_ = 1.0;
  double z_low_ = 0.0;   // parent cdf at low
  double z_mass_ = 1.0;  // parent mass on [low, high]
  // piecewise linear
  std::vector<double> knots_x_;
  std::vector<double> knots_f_;   // normalized density values
  std::vector<double> knots_cdf_;  // cdf at the knots
};

// Thresholds and persuasion probabilities for the investment problem.
// Invariants: low < theta_wishful < theta_bayes < 0 and
// prob_wishful > prob_bayes.
struct InvestorSolution {
  double theta_wishful = 0.0;
  double theta_bayes = 0.0;
  double prob_wishful = 0.0;  // 1 - F(theta_wishful)
  double prob_bayes = 0.0;    // 1 - F(theta_bayes)
  double x_hat = 0.0;         // prior exponential moment
  double m_hat = 0.0;         // prior mean
};

// integral of exp(rho t) dF(t), adaptive quadrature with absolute tolerance
// 1e-10. Less than 1 exactly when the wishful investor stays out at the
// prior.
double exp_moment(const ReturnPrior& prior, double rho);

// Conditional mean of the return above a cutoff z (the cutoff-indexed
// pooling value); strictly increasing in z, with the convention value
// `high` when the tail mass vanishes.
double trunc_mean(const ReturnPrior& prior, double z);

// Conditional mean of exp(rho t) above z, convention exp(rho*high) at the
// top.
double trunc_exp_mean(const ReturnPrior& prior, double z, double rho);

// Root of trunc_mean = 0: the pooling cutoff that persuades an undistorted
// investor. Requires a negative prior mean.
double theta_bayes(const ReturnPrior& prior);

// Root of trunc_exp_mean = 1: the cutoff persuading a wishful investor.
// Requires exp_moment < 1. Always strictly below theta_bayes.
double theta_wishful(const ReturnPrior& prior, double rho);

InvestorSolution solve_investor(const ReturnPrior& prior, double rho);

}  // namespace wishful
