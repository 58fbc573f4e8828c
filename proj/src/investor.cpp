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

#include "wishful/investor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wishful/errors.hpp"
#include "wishful/quadrature.hpp"
#include "wishful/rootfind.hpp"

namespace wishful {

namespace {

constexpr double kTailTol = 1e-12;     // below this tail mass, use the endpoint convention
constexpr double kRootQuadTol = 1e-12;  // quadrature tolerance inside root finding

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_pdf(double x) {
  constexpr double inv_sqrt_2pi = 0.3989422804014327;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

void check_cutoff(const ReturnPrior& prior, double z) {
  if (!(z >= prior.support_low()) || !(z <= prior.support_high())) {
    throw std::invalid_argument("cutoff must lie inside the prior support");
  }
}

double tail_integral(const ReturnPrior& prior, double z, double rho, bool exponential,
                     double tol) {
  auto integrand = [&](double t) {
    return (exponential ? std::exp(rho * t) : t) * prior.pdf(t);
  };
  // Split at density kinks so the adaptive rule only ever sees smooth pieces.
  std::vector<double> cuts{z};
  for (double knot : prior.interior_breakpoints()) {
    if (knot > z) cuts.push_back(knot);
  }
  cuts.push_back(prior.support_high());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += integrate(integrand, cuts[i], cuts[i + 1], tol);
  }
  return total;
}

double conditional_tail_mean(const ReturnPrior& prior, double z, double rho, bool exponential,
                             double tol) {
  check_cutoff(prior, z);
  const double tail = 1.0 - prior.cdf(z);
  if (tail < kTailTol) {
    return exponential ? std::exp(rho * prior.support_high()) : prior.support_high();
  }
  return tail_integral(prior, z, rho, exponential, tol) / tail;
}

}  // namespace

ReturnPrior ReturnPrior::uniform(double low, double high) {
  ReturnPrior prior;
  prior.kind_ = Kind::Uniform;
  prior.low_ = low;
  prior.high_ = high;
  prior.validate();
  return prior;
}

ReturnPrior ReturnPrior::truncated_normal(double mean, double stddev, double low, double high) {
  if (!(stddev > 0.0)) throw std::invalid_argument("stddev must be positive");
  ReturnPrior prior;
  prior.kind_ = Kind::TruncatedNormal;
  prior.low_ = low;
  prior.high_ = high;
  prior.mean_ = mean;
  prior.stddev_ = stddev;
  prior.z_low_ = normal_cdf((low - mean) / stddev);
  prior.z_mass_ = normal_cdf((high - mean) / stddev) - prior.z_low_;
  if (!(prior.z_mass_ > 0.0)) {
    throw std::invalid_argument("truncation interval carries no parent mass");
  }
  prior.validate();
  return prior;
}

ReturnPrior ReturnPrior::piecewise_linear(std::vector<double> x, std::vector<double> density) {
  if (x.size() != density.size() || x.size() < 2) {
    throw std::invalid_argument("piecewise_linear needs matching knot and density lists (>= 2)");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw std::invalid_argument("piecewise_linear knots must be strictly ascending");
    }
    if (!(density[i] > 0.0) || !std::isfinite(density[i])) {
      throw std::invalid_argument("piecewise_linear density values must be strictly positive");
    }
  }
  // Trapezoid mass is exact for a piecewise-linear density.
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    mass += 0.5 * (density[i] + density[i + 1]) * (x[i + 1] - x[i]);
  }
  ReturnPrior prior;
  prior.kind_ = Kind::PiecewiseLinear;
  prior.low_ = x.front();
  prior.high_ = x.back();
  prior.knots_x_ = std::move(x);
  prior.knots_f_ = std::move(density);
  for (double& f : prior.knots_f_) f /= mass;
  prior.knots_cdf_.assign(prior.knots_x_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < prior.knots_x_.size(); ++i) {
    prior.knots_cdf_[i + 1] = prior.knots_cdf_[i] +
                              0.5 * (prior.knots_f_[i] + prior.knots_f_[i + 1]) *
                                  (prior.knots_x_[i + 1] - prior.knots_x_[i]);
  }
  prior.knots_cdf_.back() = 1.0;
  prior.validate();
  return prior;
}

double ReturnPrior::pdf(double t) const {
  if (t < low_ || t > high_) return 0.0;
  switch (kind_) {
    case Kind::Uniform:
      return 1.0 / (high_ - low_);
    case Kind::TruncatedNormal:
      return normal_pdf((t - mean_) / stddev_) / (stddev_ * z_mass_);
    case Kind::PiecewiseLinear: {
      auto it = std::upper_bound(knots_x_.begin(), knots_x_.end(), t);
      const std::size_t hi = std::min<std::size_t>(it - knots_x_.begin(), knots_x_.size() - 1);
      const std::size_t lo = hi == 0 ? 0 : hi - 1;
      if (hi == lo) return knots_f_[lo];
      const double s = (t - knots_x_[lo]) / (knots_x_[hi] - knots_x_[lo]);
      return knots_f_[lo] + s * (knots_f_[hi] - knots_f_[lo]);
    }
  }
  return 0.0;
}

double ReturnPrior::cdf(double t) const {
  if (t <= low_) return 0.0;
  if (t >= high_) return 1.0;
  switch (kind_) {
    case Kind::Uniform:
      return (t - low_) / (high_ - low_);
    case Kind::TruncatedNormal:
      return (normal_cdf((t - mean_) / stddev_) - z_low_) / z_mass_;
    case Kind::PiecewiseLinear: {
      auto it = std::upper_bound(knots_x_.begin(), knots_x_.end(), t);
      const std::size_t hi = std::min<std::size_t>(it - knots_x_.begin(), knots_x_.size() - 1);
      const std::size_t lo = hi == 0 ? 0 : hi - 1;
      if (hi == lo) return knots_cdf_[lo];
      const double dx = t - knots_x_[lo];
      const double slope = (knots_f_[hi] - knots_f_[lo]) / (knots_x_[hi] - knots_x_[lo]);
      return knots_cdf_[lo] + knots_f_[lo] * dx + 0.5 * slope * dx * dx;
    }
  }
  return 1.0;
}

std::vector<double> ReturnPrior::interior_breakpoints() const {
  if (kind_ != Kind::PiecewiseLinear || knots_x_.size() <= 2) return {};
  return std::vector<double>(knots_x_.begin() + 1, knots_x_.end() - 1);
}

void ReturnPrior::validate() const {
  if (!std::isfinite(low_) || !std::isfinite(high_) || !(low_ < 0.0) || !(high_ > 0.0)) {
    throw std::invalid_argument("return prior support must satisfy low < 0 < high");
  }
  if (std::abs(cdf(low_)) > 1e-9 || std::abs(cdf(high_) - 1.0) > 1e-9) {
    throw std::invalid_argument("return prior cdf endpoints are inconsistent");
  }
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = low_ + (high_ - low_) * i / 1000.0;
    const double f = cdf(t);
    if (f < prev - 1e-12) throw std::invalid_argument("return prior cdf is not monotone");
    if (!(pdf(t) >= 0.0)) throw std::invalid_argument("return prior density is negative");
    prev = f;
  }
  std::vector<double> cuts{low_};
  for (double knot : interior_breakpoints()) cuts.push_back(knot);
  cuts.push_back(high_);
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    mass += integrate([this](double t) { return pdf(t); }, cuts[i], cuts[i + 1], 1e-10);
  }
  if (std::abs(mass - 1.0) > 1e-8) {
    throw std::invalid_argument("return prior density does not integrate to one");
  }
}

double exp_moment(const ReturnPrior& prior, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  return tail_integral(prior, prior.support_low(), rho, /*exponential=*/true, 1e-10);
}

double trunc_mean(const ReturnPrior& prior, double z) {
  return conditional_tail_mean(prior, z, 0.0, /*exponential=*/false, 1e-10);
}

double trunc_exp_mean(const ReturnPrior& prior, double z, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  return conditional_tail_mean(prior, z, rho, /*exponential=*/true, 1e-10);
}

double theta_bayes(const ReturnPrior& prior) {
  const double span = prior.support_high() - prior.support_low();
  const double lo = prior.support_low() + 1e-12 * span;
  const double m_hat = conditional_tail_mean(prior, lo, 0.0, false, kRootQuadTol);
  if (!(m_hat < 0.0)) {
    throw std::invalid_argument("theta_bayes: prior mean must be negative");
  }
  auto gap = [&](double z) { return conditional_tail_mean(prior, z, 0.0, false, kRootQuadTol); };
  return bisect(gap, lo, 0.0, 1e-10 * span);
}

double theta_wishful(const ReturnPrior& prior, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  const double span = prior.support_high() - prior.support_low();
  const double lo = prior.support_low() + 1e-12 * span;
  const double x_hat = exp_moment(prior, rho);
  if (!(x_hat < 1.0)) {
    throw std::invalid_argument("theta_wishful: the wishful investor already invests at the prior");
  }
  auto gap = [&](double z) {
    return conditional_tail_mean(prior, z, rho, true, kRootQuadTol) - 1.0;
  };
  return bisect(gap, lo, 0.0, 1e-10 * span);
}

InvestorSolution solve_investor(const ReturnPrior& prior, double rho) {
  InvestorSolution sol;
  sol.x_hat = exp_moment(prior, rho);
  sol.m_hat = trunc_mean(prior, prior.support_low());
  if (!(sol.x_hat < 1.0)) {
    throw std::invalid_argument("solve_investor: the wishful investor already invests at the prior");
  }
  // x_hat < 1 forces a negative mean (Jensen), asserted here as a diagnostic.
  if (!(sol.m_hat < 0.0)) {
    throw numerical_error("solve_investor: x_hat < 1 but the prior mean is not negative");
  }
  sol.theta_wishful = theta_wishful(prior, rho);
  sol.theta_bayes = theta_bayes(prior);
  sol.prob_wishful = 1.0 - prior.cdf(sol.theta_wishful);
  sol.prob_bayes = 1.0 - prior.cdf(sol.theta_bayes);
  if (!(prior.support_low() < sol.theta_wishful && sol.theta_wishful < sol.theta_bayes &&
        sol.theta_bayes < 0.0) ||
      !(sol.prob_wishful > sol.prob_bayes)) {
    throw numerical_error("solve_investor: threshold ordering invariant violated");
  }
  return sol;
}

}  // namespace wishful
