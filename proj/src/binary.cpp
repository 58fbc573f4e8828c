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

#include "wishful/binary.hpp"

#include <cmath>
#include <stdexcept>

#include "wishful/errors.hpp"

namespace wishful {

namespace {

constexpr double kThresholdEqTol = 1e-12;

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("rho must be strictly positive and finite");
  }
}

// The crossing exists exactly for the two non-monotone threshold shapes.
bool crossing_predicted(const BinaryPayoffs& p) {
  return (p.u_max() < 0.0 && p.var0() > p.var1()) || (p.u_max() > 0.0 && p.var0() < p.var1());
}

}  // namespace

BinaryPayoffs::BinaryPayoffs(double ul0, double uh0, double ul1, double uh1)
    : u_low_0(ul0), u_high_0(uh0), u_low_1(ul1), u_high_1(uh1) {
  if (!std::isfinite(ul0) || !std::isfinite(uh0) || !std::isfinite(ul1) || !std::isfinite(uh1)) {
    throw std::invalid_argument("payoffs must be finite");
  }
  if (!(u_low_0 > u_low_1)) {
    throw std::invalid_argument("action 0 must be strictly better in the low state");
  }
  if (!(u_high_1 > u_high_0)) {
    throw std::invalid_argument("action 1 must be strictly better in the high state");
  }
}

double mu_bayes(const BinaryPayoffs& p) {
  const double d1 = p.u_low_0 - p.u_low_1;
  const double d2 = p.u_high_1 - p.u_high_0;
  return d1 / (d1 + d2);
}

double mu_wishful(const BinaryPayoffs& p, double rho) {
  check_rho(rho);
  const double d1 = p.u_low_0 - p.u_low_1;   // > 0
  const double d2 = p.u_high_1 - p.u_high_0;  // > 0
  // mu = 1 / (1 + r) with
  // r = exp(-rho u_max) (1 - exp(-rho d2)) / (1 - exp(-rho d1)),
  // obtained by factoring the dominant exponential out of each difference.
  // expm1 keeps the small-rho regime exact (r -> d2/d1 recovers the
  // undistorted threshold), and the lone exp saturates gracefully.
  const double ratio =
      std::exp(-rho * p.u_max()) * (std::expm1(-rho * d2) / std::expm1(-rho * d1));
  return 1.0 / (1.0 + ratio);
}

double alpha_coeff(const BinaryPayoffs& p, double rho) {
  check_rho(rho);
  const double d1 = p.u_low_0 - p.u_low_1;
  const double d2 = p.u_high_1 - p.u_high_0;
  if (rho * std::max(d1, d2) < 1e-4) {
    // Second-order series; the 1/rho poles of the two terms cancel.
    return 0.5 * (p.var0() - p.var1()) + rho * (d1 * d1 - d2 * d2) / 12.0;
  }
  const double term0 = d1 / -std::expm1(-rho * d1) + p.u_low_1;
  const double term1 = d2 / -std::expm1(-rho * d2) + p.u_high_0;
  return term0 - term1;
}

std::optional<double> rho_bar(const BinaryPayoffs& p) {
  const double mb = mu_bayes(p);
  auto gap = [&](double r) { return mu_wishful(p, r) - mb; };
  const double scale = p.scale();
  const double lo = 1e-8 / scale;
  const double hi = 1e4 / scale;
  constexpr int kScanPoints = 64;
  const double step = std::log(hi / lo) / (kScanPoints - 1);

  double prev_r = lo;
  double prev_g = gap(lo);
  if (prev_g == 0.0 && crossing_predicted(p)) return lo;
  for (int i = 1; i < kScanPoints; ++i) {
    const double r = lo * std::exp(step * i);
    const double g = gap(r);
    if (g == 0.0 && crossing_predicted(p)) return r;
    if (prev_g * g < 0.0) {
      double left = prev_r;
      double right = r;
      for (int it = 0; it < 200 && (right - left) > 1e-10 * (1.0 + 0.5 * (left + right)); ++it) {
        const double mid = 0.5 * (left + right);
        const double gm = gap(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (prev_g < 0.0)) {
          left = mid;
        } else {
          right = mid;
        }
      }
      return 0.5 * (left + right);
    }
    prev_r = r;
    prev_g = g;
  }
  if (crossing_predicted(p)) {
    throw numerical_error("rho_bar: threshold shape predicts a crossing but none was bracketed");
  }
  return std::nullopt;
}

FavoredReport classify_favored(const BinaryPayoffs& p, double rho) {
  FavoredReport report;
  report.mu_b = mu_bayes(p);
  report.mu_w = mu_wishful(p, rho);
  if (report.mu_w < report.mu_b - kThresholdEqTol) {
    report.favored = Favoredness::Favored;
  } else if (report.mu_w > report.mu_b + kThresholdEqTol) {
    report.favored = Favoredness::NotFavored;
  } else {
    report.favored = Favoredness::Equal;
  }
  const double umax = p.u_max();
  const double v0 = p.var0();
  const double v1 = p.var1();
  if (umax <= 0.0 && v0 < v1) {
    report.lemma_case = LemmaCase::CaseI;
  } else if (umax < 0.0 && v0 > v1) {
    report.lemma_case = LemmaCase::CaseII;
  } else if (umax > 0.0 && v0 < v1) {
    report.lemma_case = LemmaCase::CaseIII;
  }
  report.rho_bar = rho_bar(p);
  return report;
}

ThresholdPolicy optimal_policy(double mu0, double threshold) {
  if (!(mu0 > 0.0) || !(mu0 < 1.0)) {
    throw std::invalid_argument("prior must lie strictly between 0 and 1");
  }
  if (!(threshold > 0.0) || !(threshold < 1.0)) {
    throw std::invalid_argument("threshold must lie strictly between 0 and 1");
  }
  ThresholdPolicy policy;
  if (mu0 >= threshold) {  // no disclosure needed
    policy.high = mu0;
    policy.weight_high = 1.0;
    policy.value = 1.0;
  } else {
    policy.high = threshold;
    policy.weight_high = mu0 / threshold;
    policy.value = policy.weight_high;
  }
  return policy;
}

BlackwellOrder blackwell_compare(const ThresholdPolicy& a, const ThresholdPolicy& b) {
  if (a.low != 0.0 || b.low != 0.0) {
    throw std::invalid_argument("blackwell_compare expects policies with low posterior 0");
  }
  if (std::abs(a.high - b.high) <= kThresholdEqTol) return BlackwellOrder::Equal;
  return a.high > b.high ? BlackwellOrder::MoreInformative : BlackwellOrder::LessInformative;
}

}  // namespace wishful
