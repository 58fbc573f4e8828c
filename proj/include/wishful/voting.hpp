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

#include "wishful/binary.hpp"

namespace wishful {

// An odd-sized electorate of wishful voters with partisan preferences
// beta in [0, 1] (ascending) and a common self-deception weight rho.
// Voter utility: u(vote, state) = vote*state*beta + (1-vote)*(1-state)*(1-beta).
struct Electorate {
  std::vector<double> betas;  // ascending, size odd >= 3
  double rho = 1.0;

  void validate() const;  // throws std::invalid_argument
  std::size_t size() const { return betas.size(); }
  std::size_t median_index() const { return betas.size() / 2; }
  double median_beta() const { return betas[median_index()]; }
  // beta_i + beta_{n+1-i} = 1 within 1e-12 for every symmetric pair.
  bool symmetric() const;
};

// Posterior above which a voter with preference beta votes for the
// proposal. Equals 1/2 at beta = 1/2 for every rho, and is strictly
// decreasing in beta. beta in {0, 1} makes one utility row constant and has
// no interior threshold; it is rejected with an explanatory message.
double voter_threshold(double beta, double rho);

// The voter's distorted belief at posterior mu: tilted up when voting for
// the proposal (mu >= threshold), down otherwise.
double voter_belief(double mu, double beta, double rho);

// Polarization at a posterior: the beliefs of every voter and the sum of
// absolute pairwise belief differences.
struct PolarizationProfile {
  double mu = 0.0;
  std::vector<double> beliefs;
  double pi = 0.0;
};

PolarizationProfile polarization(double mu, const Electorate& electorate);

// The same index rearranged over symmetric voter pairs,
// sum_i (n+1-2i) (belief_{n+1-i} - belief_i) with 1-based ascending
// indexing; equals the pairwise double sum because beliefs are
// nondecreasing in beta. Kept as an independent route for testing.
double polarization_rearranged(double mu, const Electorate& electorate);

// Global maximizer of the polarization index on [0, 1]: a 10^4-point scan
// refined by golden-section, with every voter threshold (median first) as a
// tie-breaking candidate. For symmetric electorates this is the median
// voter's threshold 1/2. The scan is data-parallel; the _serial variant is
// the reference implementation and returns identical results.
double polarization_argmax(const Electorate& electorate);
double polarization_argmax_serial(const Electorate& electorate);

// Sincere voting: voter i approves iff mu >= voter_threshold(beta_i); the
// proposal passes with a simple majority, which coincides with the median
// voter's ballot.
struct ElectionOutcome {
  std::vector<int> votes;
  bool pass = false;
};

ElectionOutcome election_outcome(double mu, const Electorate& electorate);

// Sender-optimal public policy: a two-point policy at the median voter's
// threshold (no disclosure once mu0 clears it).
ThresholdPolicy optimal_public_policy(double mu0, const Electorate& electorate);

}  // namespace wishful
