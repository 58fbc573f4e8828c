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

#include <algorithm>
#include <cmath>
#include <optional>

namespace wishful {

// Payoffs of a two-state / two-action problem where action 1 is the correct
// choice in the high state and action 0 in the low state. Beliefs are
// identified with the probability of the high state throughout.
//
// The constructor enforces the two inequalities the threshold theory needs:
// u_low_0 > u_low_1 and u_high_1 > u_high_0 (each action strictly best in
// "its" state, so both behavioral thresholds are interior). The payoff
// variabilities var0/var1 may have either sign; e.g. a partially effective
// preventive treatment gives var1 < 0.
struct BinaryPayoffs {
  double u_low_0;   // action 0 in the low state
  double u_high_0;  // action 0 in the high state
  double u_low_1;   // action 1 in the low state
  double u_high_1;  // action 1 in the high state

  BinaryPayoffs(double u_low_0, double u_high_0, double u_low_1, double u_high_1);

  // Payoff variability of each action (spread across states, signed).
  double var0() const { return u_low_0 - u_high_0; }
  double var1() const { return u_high_1 - u_low_1; }
  // Gap between action 0's best payoff and action 1's best payoff; its sign
  // drives the large-rho limit of the wishful threshold.
  double u_max() const { return u_low_0 - u_high_1; }
  double scale() const {
    return std::max({std::abs(u_low_0), std::abs(u_high_0), std::abs(u_low_1), std::abs(u_high_1)});
  }
};

// Two-point information policy supported on {0, high} with the stated mass
// on the high posterior. Bayes plausibility ties weight_high * high to the
// prior. value is the probability the induced posterior clears the
// behavioral threshold.
struct ThresholdPolicy {
  double low = 0.0;
  double high = 0.0;
  double weight_high = 0.0;
  double value = 0.0;
};

enum class Favoredness { Favored, NotFavored, Equal };

// Payoff pattern from the threshold-shape analysis. CaseI: action 1 favored
// at every rho. CaseII: favored iff rho exceeds the crossing point. CaseIII:
// favored iff rho is below it. None: no pattern applies (boundary payoffs,
// or the mirror patterns under which action 0 is the favored one).
enum class LemmaCase { CaseI, CaseII, CaseIII, None };

struct FavoredReport {
  Favoredness favored = Favoredness::Equal;
  LemmaCase lemma_case = LemmaCase::None;
  double mu_b = 0.0;
  double mu_w = 0.0;
  std::optional<double> rho_bar;
};

enum class BlackwellOrder { MoreInformative, LessInformative, Equal, Incomparable };

// Indifference belief of an undistorted receiver:
// (u_low_0 - u_low_1) / (u_low_0 - u_low_1 + u_high_1 - u_high_0).
double mu_bayes(const BinaryPayoffs& p);

// Indifference belief of a wishful receiver, the same expression with
// payoffs passed through z -> exp(rho z). Evaluated in shifted-exponential
// form so it is stable for any rho > 0; tends to mu_bayes as rho -> 0 and
// saturates at 0, 1/2 or 1 as rho -> infinity depending on sign(u_max).
double mu_wishful(const BinaryPayoffs& p, double rho);

// Varying coefficient of the logistic ODE satisfied by mu_wishful:
// d mu_wishful / d rho = alpha_coeff(rho) * mu_wishful (1 - mu_wishful).
// Tends to (var0 - var1)/2 as rho -> 0 and to u_max as rho -> infinity.
// Tiny rho is handled by a second-order series of each term.
double alpha_coeff(const BinaryPayoffs& p, double rho);

// The crossing point rho_bar with mu_wishful(rho_bar) = mu_bayes, when the
// difference changes sign on (0, 1e4/scale): geometric bracket scan followed
// by bisection to |d rho| <= 1e-10 (1 + rho_bar). Returns nullopt when the
// thresholds never cross; throws numerical_error if the payoff pattern
// predicts a crossing but no bracket is found.
std::optional<double> rho_bar(const BinaryPayoffs& p);

// Whether action 1 is favored (taken on a strictly larger set of beliefs by
// the wishful receiver), decided by direct threshold comparison; the payoff
// pattern and the crossing point are reported alongside.
FavoredReport classify_favored(const BinaryPayoffs& p, double rho);

// Sender-optimal policy against a given behavioral threshold: no disclosure
// when mu0 >= threshold, otherwise the two-point policy on {0, threshold}
// with weight mu0/threshold on the high posterior.
ThresholdPolicy optimal_policy(double mu0, double threshold);

// Blackwell order of two two-point policies sharing the low posterior 0:
// the one with the larger high posterior is more informative (its support's
// convex hull contains the other's).
BlackwellOrder blackwell_compare(const ThresholdPolicy& a, const ThresholdPolicy& b);

}  // namespace wishful
