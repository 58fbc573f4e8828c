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

#include "wishful/voting.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "wishful/errors.hpp"

namespace wishful {

namespace {

constexpr int kScanPoints = 10000;  // intervals of the coarse argmax scan
constexpr double kCandidateMargin = 1e-12;

void check_posterior(double mu) {
  if (!(mu >= 0.0) || !(mu <= 1.0)) throw std::invalid_argument("posterior must lie in [0, 1]");
}

}  // namespace

void Electorate::validate() const {
  if (betas.size() < 3 || betas.size() % 2 == 0) {
    throw std::invalid_argument("electorate size must be odd and at least 3");
  }
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0) || !(betas[i] < 1.0)) {
      throw std::invalid_argument("partisan preferences must lie strictly inside (0, 1)");
    }
    if (i > 0 && betas[i] < betas[i - 1]) {
      throw std::invalid_argument("partisan preferences must be sorted ascending");
    }
  }
}

bool Electorate::symmetric() const {
  const std::size_t n = betas.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(betas[i] + betas[n - 1 - i] - 1.0) > 1e-12) return false;
  }
  return true;
}

double voter_threshold(double beta, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive");
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw std::invalid_argument(
        "voter_threshold: beta in {0, 1} makes one payoff row constant, so the voter "
        "has no interior threshold; use beta strictly inside (0, 1)");
  }
  const double a = rho * (1.0 - beta);
  const double b = rho * beta;
  if (a > 350.0 && b > 350.0) {
    // both expm1 terms overflow; only their ratio matters
    return 1.0 / (1.0 + std::exp(b - a));
  }
  const double num = std::expm1(a);
  return num / (num + std::expm1(b));
}

double voter_belief(double mu, double beta, double rho) {
  check_posterior(mu);
  const double threshold = voter_threshold(beta, rho);
  if (mu >= threshold) {
    // Voting for the proposal: optimism about the state that vindicates it,
    // written so the tilt saturates instead of overflowing.
    return 1.0 / (1.0 + ((1.0 - mu) / mu) * std::exp(-rho * beta));
  }
  return mu / (mu + (1.0 - mu) * std::exp(rho * (1.0 - beta)));
}

PolarizationProfile polarization(double mu, const Electorate& electorate) {
  electorate.validate();
  check_posterior(mu);
  PolarizationProfile profile;
  profile.mu = mu;
  profile.beliefs.reserve(electorate.size());
  for (double beta : electorate.betas) {
    profile.beliefs.push_back(voter_belief(mu, beta, electorate.rho));
  }
  for (std::size_t i = 0; i + 1 < profile.beliefs.size(); ++i) {
    for (std::size_t j = i + 1; j < profile.beliefs.size(); ++j) {
      profile.pi += std::abs(profile.beliefs[i] - profile.beliefs[j]);
    }
  }
  return profile;
}

double polarization_rearranged(double mu, const Electorate& electorate) {
  electorate.validate();
  check_posterior(mu);
  const std::size_t n = electorate.size();
  double pi = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double low = voter_belief(mu, electorate.betas[i], electorate.rho);
    const double high = voter_belief(mu, electorate.betas[n - 1 - i], electorate.rho);
    pi += static_cast<double>(n - 1 - 2 * i) * (high - low);
  }
  return pi;
}

namespace {

double argmax_impl(const Electorate& electorate, bool parallel) {
  electorate.validate();
  auto pi_at = [&electorate](double mu) {
    double pi = 0.0;
    std::vector<double> beliefs(electorate.size());
    for (std::size_t i = 0; i < electorate.size(); ++i) {
      beliefs[i] = voter_belief(mu, electorate.betas[i], electorate.rho);
    }
    for (std::size_t i = 0; i + 1 < beliefs.size(); ++i) {
      for (std::size_t j = i + 1; j < beliefs.size(); ++j) {
        pi += std::abs(beliefs[i] - beliefs[j]);
      }
    }
    return pi;
  };

  // Dense scan; the per-point evaluations are the data-parallel kernel. The
  // argmax is then reduced serially so thread count never affects the result.
  std::vector<double> values(kScanPoints + 1);
  const double h = 1.0 / kScanPoints;
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i <= kScanPoints; ++i) values[i] = pi_at(i * h);
  } else {
    for (std::int64_t i = 0; i <= kScanPoints; ++i) values[i] = pi_at(i * h);
  }
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best_idx]) best_idx = i;
  }

  // Golden-section refinement inside the best bracket.
  double lo = best_idx == 0 ? 0.0 : (best_idx - 1) * h;
  double hi = best_idx == static_cast<std::size_t>(kScanPoints) ? 1.0 : (best_idx + 1) * h;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = pi_at(x1);
  double f2 = pi_at(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = pi_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = pi_at(x1);
    }
  }

  // The index jumps exactly at the voter thresholds, so they are candidate
  // maximizers too. The median threshold is listed first: on plateaus (and
  // for symmetric electorates, where it is the unique maximizer) it wins.
  std::vector<double> candidates;
  candidates.push_back(voter_threshold(electorate.median_beta(), electorate.rho));
  for (double beta : electorate.betas) {
    candidates.push_back(voter_threshold(beta, electorate.rho));
  }
  candidates.push_back(0.5 * (lo + hi));
  candidates.push_back(best_idx * h);

  double best_x = candidates.front();
  double best_pi = pi_at(best_x);
  for (double x : candidates) {
    const double v = pi_at(x);
    if (v > best_pi + kCandidateMargin) {
      best_pi = v;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace

double polarization_argmax(const Electorate& electorate) { return argmax_impl(electorate, true); }

double polarization_argmax_serial(const Electorate& electorate) {
  return argmax_impl(electorate, false);
}

ElectionOutcome election_outcome(double mu, const Electorate& electorate) {
  electorate.validate();
  check_posterior(mu);
  ElectionOutcome outcome;
  outcome.votes.reserve(electorate.size());
  std::size_t approvals = 0;
  for (double beta : electorate.betas) {
    const int vote = mu >= voter_threshold(beta, electorate.rho) ? 1 : 0;
    outcome.votes.push_back(vote);
    approvals += vote;
  }
  outcome.pass = approvals >= (electorate.size() + 1) / 2;
  // Thresholds are decreasing in beta, so the tally and the median ballot
  // always agree.
  const bool median_vote = outcome.votes[electorate.median_index()] == 1;
  if (median_vote != outcome.pass) {
    throw numerical_error("election_outcome: median-voter rule violated");
  }
  return outcome;
}

ThresholdPolicy optimal_public_policy(double mu0, const Electorate& electorate) {
  electorate.validate();
  return optimal_policy(mu0, voter_threshold(electorate.median_beta(), electorate.rho));
}

}  // namespace wishful
