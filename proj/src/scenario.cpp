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

#include "wishful/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <vector>

#include "wishful/belief.hpp"
#include "wishful/binary.hpp"
#include "wishful/csv.hpp"
#include "wishful/errors.hpp"
#include "wishful/finite.hpp"
#include "wishful/health.hpp"
#include "wishful/investor.hpp"
#include "wishful/voting.hpp"

namespace wishful::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw config_error(msg); }

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return it.key() == k; }) == allowed.end()) {
      fail("unknown key '" + it.key() + "' in " + where);
    }
  }
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) fail(where + " is missing key '" + key + "'");
  return obj.at(key);
}

double num_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_number()) fail("'" + key + "' in " + where + " must be a number");
  return v.get<double>();
}

double num_or(const json& obj, const std::string& key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  return num_at(obj, key, where);
}

int int_at(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_number_integer()) fail("'" + key + "' in " + where + " must be an integer");
  return v.get<int>();
}

int int_or(const json& obj, const std::string& key, const std::string& where, int fallback) {
  if (!obj.contains(key)) return fallback;
  return int_at(obj, key, where);
}

std::vector<double> num_list_at(const json& obj, const std::string& key,
                                const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_array() || v.empty()) fail("'" + key + "' in " + where + " must be a nonempty array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) fail("'" + key + "' in " + where + " must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

struct SweepSpec {
  std::string parameter;
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
};

std::optional<SweepSpec> parse_sweep(const json& params, const std::string& scenario,
                                     std::initializer_list<const char*> allowed_params) {
  if (!params.contains("sweep")) return std::nullopt;
  const json& sw = params.at("sweep");
  if (!sw.is_object()) fail("'sweep' must be an object");
  check_keys(sw, "sweep", {"parameter", "from", "to", "steps"});
  SweepSpec spec;
  const json& p = member(sw, "parameter", "sweep");
  if (!p.is_string()) fail("'parameter' in sweep must be a string");
  spec.parameter = p.get<std::string>();
  if (std::find_if(allowed_params.begin(), allowed_params.end(), [&](const char* k) {
        return spec.parameter == k;
      }) == allowed_params.end()) {
    fail("sweep parameter '" + spec.parameter + "' does not belong to scenario '" + scenario + "'");
  }
  spec.from = num_at(sw, "from", "sweep");
  spec.to = num_at(sw, "to", "sweep");
  spec.steps = int_at(sw, "steps", "sweep");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to)) {
    fail("sweep range must be finite");
  }
  if (spec.steps < 1) fail("sweep steps must be >= 1");
  if (spec.to < spec.from) fail("sweep range must satisfy from <= to");
  return spec;
}

json sweep_to_json(const SweepSpec& spec) {
  return json{{"parameter", spec.parameter}, {"from", spec.from}, {"to", spec.to},
              {"steps", spec.steps}};
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  std::vector<double> values(spec.steps);
  if (spec.steps == 1) {
    values[0] = spec.from;
    return values;
  }
  const double h = (spec.to - spec.from) / (spec.steps - 1);
  for (int i = 0; i < spec.steps; ++i) values[i] = spec.from + h * i;
  values.back() = spec.to;
  return values;
}

// Runs `body(i)` for every row index, fanning out to the OpenMP pool; rows
// land in caller-provided storage by index so output order never depends on
// scheduling. The first exception (by row index) is rethrown.
template <class F>
void parallel_rows(std::size_t count, F&& body) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
};

void emit(std::ostream& out, const Table& table) {
  csv::write_row(out, table.header);
  for (const Row& row : table.rows) csv::write_row(out, row);
}

std::string fmt(double v) { return csv::number(v); }

std::string favored_name(Favoredness f) {
  switch (f) {
    case Favoredness::Favored: return "favored";
    case Favoredness::NotFavored: return "not_favored";
    case Favoredness::Equal: return "equal";
  }
  return "equal";
}

std::string lemma_name(LemmaCase c) {
  switch (c) {
    case LemmaCase::CaseI: return "I";
    case LemmaCase::CaseII: return "II";
    case LemmaCase::CaseIII: return "III";
    case LemmaCase::None: return "none";
  }
  return "none";
}

// ---------------------------------------------------------------------------
// binary
// ---------------------------------------------------------------------------

BinaryPayoffs payoffs_from(const json& params, const std::string& where) {
  const json& p = member(params, "payoffs", where);
  if (!p.is_object()) fail("'payoffs' must be an object");
  check_keys(p, "payoffs", {"u_low_0", "u_high_0", "u_low_1", "u_high_1"});
  return BinaryPayoffs(num_at(p, "u_low_0", "payoffs"), num_at(p, "u_high_0", "payoffs"),
                       num_at(p, "u_low_1", "payoffs"), num_at(p, "u_high_1", "payoffs"));
}

json normalize_binary(const json& params) {
  check_keys(params, "binary parameters", {"payoffs", "rho", "mu0", "sweep"});
  const BinaryPayoffs p = payoffs_from(params, "binary parameters");
  const double rho = num_at(params, "rho", "binary parameters");
  if (!(rho > 0.0)) fail("rho must be strictly positive");
  json out;
  out["payoffs"] = {{"u_low_0", p.u_low_0},
                    {"u_high_0", p.u_high_0},
                    {"u_low_1", p.u_low_1},
                    {"u_high_1", p.u_high_1}};
  out["rho"] = rho;
  if (params.contains("mu0")) {
    const double mu0 = num_at(params, "mu0", "binary parameters");
    if (!(mu0 > 0.0) || !(mu0 < 1.0)) fail("mu0 must lie strictly between 0 and 1");
    out["mu0"] = mu0;
  }
  if (auto sweep = parse_sweep(params, "binary", {"rho"})) {
    if (!(sweep->from > 0.0)) fail("rho sweep must stay strictly positive");
    out["sweep"] = sweep_to_json(*sweep);
  }
  return out;
}

Table run_binary(const json& params) {
  const BinaryPayoffs p = payoffs_from(params, "binary parameters");
  const double rho = params.at("rho").get<double>();

  if (params.contains("sweep")) {
    SweepSpec spec;
    spec.parameter = params.at("sweep").at("parameter").get<std::string>();
    spec.from = params.at("sweep").at("from").get<double>();
    spec.to = params.at("sweep").at("to").get<double>();
    spec.steps = params.at("sweep").at("steps").get<int>();
    const auto grid = sweep_values(spec);
    Table table;
    table.header = {"rho", "mu_bayes", "mu_wishful", "alpha"};
    table.rows.resize(grid.size());
    const double mb = mu_bayes(p);
    parallel_rows(grid.size(), [&](std::size_t i) {
      table.rows[i] = {fmt(grid[i]), fmt(mb), fmt(mu_wishful(p, grid[i])),
                       fmt(alpha_coeff(p, grid[i]))};
    });
    return table;
  }

  Table table;
  table.header = {"quantity", "value"};
  const FavoredReport report = classify_favored(p, rho);
  table.rows.push_back({"mu_bayes", fmt(report.mu_b)});
  table.rows.push_back({"mu_wishful", fmt(report.mu_w)});
  table.rows.push_back({"alpha", fmt(alpha_coeff(p, rho))});
  table.rows.push_back({"var0", fmt(p.var0())});
  table.rows.push_back({"var1", fmt(p.var1())});
  table.rows.push_back({"u_max", fmt(p.u_max())});
  table.rows.push_back({"favored", favored_name(report.favored)});
  table.rows.push_back({"lemma_case", lemma_name(report.lemma_case)});
  table.rows.push_back({"rho_bar", report.rho_bar ? fmt(*report.rho_bar) : ""});
  if (params.contains("mu0")) {
    const double mu0 = params.at("mu0").get<double>();
    const ThresholdPolicy wishful_policy = optimal_policy(mu0, report.mu_w);
    const ThresholdPolicy bayes_policy = optimal_policy(mu0, report.mu_b);
    table.rows.push_back({"policy_high", fmt(wishful_policy.high)});
    table.rows.push_back({"policy_weight_high", fmt(wishful_policy.weight_high)});
    table.rows.push_back({"policy_value", fmt(wishful_policy.value)});
    table.rows.push_back({"policy_value_bayes", fmt(bayes_policy.value)});
    const BlackwellOrder order = blackwell_compare(wishful_policy, bayes_policy);
    const char* name = order == BlackwellOrder::MoreInformative   ? "more_informative"
                       : order == BlackwellOrder::LessInformative ? "less_informative"
                       : order == BlackwellOrder::Equal           ? "equal"
                                                                  : "incomparable";
    table.rows.push_back({"blackwell_vs_bayes", name});
  }
  return table;
}

// ---------------------------------------------------------------------------
// health
// ---------------------------------------------------------------------------

HealthParams health_from(const json& params) {
  HealthParams hp;
  hp.severity = num_at(params, "severity", "health parameters");
  hp.cost = num_at(params, "cost", "health parameters");
  hp.efficacy = num_at(params, "efficacy", "health parameters");
  hp.risk_low = num_at(params, "risk_low", "health parameters");
  hp.risk_high = num_at(params, "risk_high", "health parameters");
  hp.rho = num_at(params, "rho", "health parameters");
  return hp;
}

json normalize_health(const json& params) {
  check_keys(params, "health parameters",
             {"severity", "cost", "efficacy", "risk_low", "risk_high", "rho", "mu0",
              "curve_points", "sweep"});
  const HealthParams hp = health_from(params);
  const auto sweep = parse_sweep(params, "health", {"severity"});
  if (sweep) {
    // The sweep may touch the boundary severities where one action becomes
    // weakly dominant; everything else must validate at an interior one.
    if (!(hp.efficacy > 0.0) || !(hp.risk_low > 0.0) || !(hp.risk_high > 0.0) ||
        !(hp.cost > 0.0)) {
      fail("severity sweep needs positive cost, efficacy and risk levels");
    }
    const double lo = hp.cost / (hp.efficacy * hp.risk_high);
    const double hi = hp.cost / (hp.efficacy * hp.risk_low);
    if (sweep->from < lo - 1e-9 || sweep->to > hi + 1e-9) {
      fail("severity sweep must stay inside the trade-off range [cost/(efficacy*risk_high), "
           "cost/(efficacy*risk_low)]");
    }
    HealthParams probe = hp;
    probe.severity = 0.5 * (lo + hi);
    probe.validate();
  } else {
    hp.validate();
  }
  json out;
  out["severity"] = hp.severity;
  out["cost"] = hp.cost;
  out["efficacy"] = hp.efficacy;
  out["risk_low"] = hp.risk_low;
  out["risk_high"] = hp.risk_high;
  out["rho"] = hp.rho;
  const int curve_points = int_or(params, "curve_points", "health parameters", 201);
  if (curve_points < 2 || curve_points > 100001) fail("curve_points must lie in [2, 100001]");
  out["curve_points"] = curve_points;
  if (params.contains("mu0")) {
    const double mu0 = num_at(params, "mu0", "health parameters");
    if (!(mu0 > 0.0) || !(mu0 < 1.0)) fail("mu0 must lie strictly between 0 and 1");
    out["mu0"] = mu0;
  } else if (sweep) {
    fail("a severity sweep needs mu0 for the adoption probabilities");
  }
  if (sweep) out["sweep"] = sweep_to_json(*sweep);
  return out;
}

Table run_health(const json& params) {
  if (params.contains("sweep")) {
    const HealthParams hp = health_from(params);
    const double mu0 = params.at("mu0").get<double>();
    SweepSpec spec;
    spec.from = params.at("sweep").at("from").get<double>();
    spec.to = params.at("sweep").at("to").get<double>();
    spec.steps = params.at("sweep").at("steps").get<int>();
    const auto grid = sweep_values(spec);
    Table table;
    table.header = {"severity", "mu_bayes", "mu_wishful", "tau_bayes", "tau_wishful"};
    table.rows.resize(grid.size());
    parallel_rows(grid.size(), [&](std::size_t i) {
      const double s = grid[i];
      const double mb = health_mu_bayes(s, hp.cost, hp.efficacy, hp.risk_low, hp.risk_high);
      const double mw =
          health_mu_wishful(s, hp.cost, hp.efficacy, hp.risk_low, hp.risk_high, hp.rho);
      const double tb = mb <= 0.0 ? 1.0 : std::min(1.0, mu0 / mb);
      const double tw = mw <= 0.0 ? 1.0 : std::min(1.0, mu0 / mw);
      table.rows[i] = {fmt(s), fmt(mb), fmt(mw), fmt(tb), fmt(tw)};
    });
    return table;
  }

  const HealthModel model(health_from(params));
  const int curve_points = params.at("curve_points").get<int>();
  Table table;
  table.header = {"mu", "eta"};
  table.rows.resize(curve_points);
  parallel_rows(table.rows.size(), [&](std::size_t i) {
    const double mu = static_cast<double>(i) / (curve_points - 1);
    table.rows[i] = {fmt(mu), fmt(model.belief(mu))};
  });
  table.rows.push_back({"mu_B", fmt(model.mu_bayes())});
  table.rows.push_back({"mu_W", fmt(model.mu_wishful())});
  const DecisionProblem dp = model.decision_problem();
  const Belief at_threshold({1.0 - model.mu_wishful(), model.mu_wishful()});
  table.rows.push_back({"eta0_at_mu_W", fmt(tilt_belief(dp, 0, at_threshold)[1])});
  table.rows.push_back({"eta1_at_mu_W", fmt(tilt_belief(dp, 1, at_threshold)[1])});
  if (params.contains("mu0")) {
    const auto tau = model.adoption_probability(params.at("mu0").get<double>());
    table.rows.push_back({"tau_wishful", fmt(tau.wishful)});
    table.rows.push_back({"tau_bayes", fmt(tau.bayes)});
  }
  return table;
}

// ---------------------------------------------------------------------------
// voting
// ---------------------------------------------------------------------------

Electorate electorate_from(const json& params) {
  Electorate e;
  e.betas = num_list_at(params, "betas", "voting parameters");
  e.rho = num_at(params, "rho", "voting parameters");
  e.validate();
  return e;
}

json normalize_voting(const json& params) {
  check_keys(params, "voting parameters", {"betas", "rho", "mu", "mu0", "sweep"});
  const Electorate e = electorate_from(params);
  json out;
  out["betas"] = e.betas;
  out["rho"] = e.rho;
  const double mu = num_or(params, "mu", "voting parameters", 0.5);
  if (!(mu >= 0.0) || !(mu <= 1.0)) fail("mu must lie in [0, 1]");
  out["mu"] = mu;
  if (params.contains("mu0")) {
    const double mu0 = num_at(params, "mu0", "voting parameters");
    if (!(mu0 > 0.0) || !(mu0 < 1.0)) fail("mu0 must lie strictly between 0 and 1");
    out["mu0"] = mu0;
  }
  if (auto sweep = parse_sweep(params, "voting", {"mu"})) {
    if (sweep->from < 0.0 || sweep->to > 1.0) fail("mu sweep must stay inside [0, 1]");
    out["sweep"] = sweep_to_json(*sweep);
  }
  return out;
}

Table run_voting(const json& params) {
  const Electorate e = electorate_from(params);

  if (params.contains("sweep")) {
    SweepSpec spec;
    spec.from = params.at("sweep").at("from").get<double>();
    spec.to = params.at("sweep").at("to").get<double>();
    spec.steps = params.at("sweep").at("steps").get<int>();
    const auto grid = sweep_values(spec);
    Table table;
    table.header = {"mu", "pi"};
    for (std::size_t i = 0; i < e.size(); ++i) {
      table.header.push_back("belief_" + std::to_string(i));
    }
    table.rows.resize(grid.size());
    parallel_rows(grid.size(), [&](std::size_t i) {
      const PolarizationProfile prof = polarization(grid[i], e);
      Row row = {fmt(prof.mu), fmt(prof.pi)};
      for (double b : prof.beliefs) row.push_back(fmt(b));
      table.rows[i] = std::move(row);
    });
    return table;
  }

  const double mu = params.at("mu").get<double>();
  const PolarizationProfile prof = polarization(mu, e);
  Table table;
  table.header = {"voter", "beta", "threshold", "belief"};
  for (std::size_t i = 0; i < e.size(); ++i) {
    table.rows.push_back({std::to_string(i), fmt(e.betas[i]),
                          fmt(voter_threshold(e.betas[i], e.rho)), fmt(prof.beliefs[i])});
  }
  table.rows.push_back({"pi", "", "", fmt(prof.pi)});
  table.rows.push_back({"pi_argmax", "", "", fmt(polarization_argmax(e))});
  const ElectionOutcome outcome = election_outcome(mu, e);
  table.rows.push_back({"pass", "", "", outcome.pass ? "1" : "0"});
  if (params.contains("mu0")) {
    const ThresholdPolicy policy = optimal_public_policy(params.at("mu0").get<double>(), e);
    table.rows.push_back({"policy_high", "", "", fmt(policy.high)});
    table.rows.push_back({"policy_weight_high", "", "", fmt(policy.weight_high)});
    table.rows.push_back({"policy_value", "", "", fmt(policy.value)});
  }
  return table;
}

// ---------------------------------------------------------------------------
// finite
// ---------------------------------------------------------------------------

DecisionProblem finite_from(const json& params) {
  DecisionProblem problem;
  const auto u0 = num_list_at(params, "utility_0", "finite parameters");
  const auto u1 = num_list_at(params, "utility_1", "finite parameters");
  if (u0.size() != u1.size()) fail("utility_0 and utility_1 must have the same length");
  if (u0.size() < 2) fail("finite scenario needs at least two states");
  const std::size_t n = u0.size();
  if (params.contains("states")) {
    const json& st = params.at("states");
    if (!st.is_array() || st.size() != n) fail("'states' must list one label per state");
    for (const auto& s : st) {
      if (!s.is_string()) fail("'states' must contain strings");
      problem.states.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t s = 0; s < n; ++s) problem.states.push_back("s" + std::to_string(s));
  }
  problem.actions = {"a0", "a1"};
  problem.utility = {u0, u1};
  problem.sender_utility = {0.0, 1.0};
  problem.rho = num_at(params, "rho", "finite parameters");
  problem.validate();
  return problem;
}

Belief finite_prior(const json& params, std::size_t n) {
  auto mu0 = num_list_at(params, "mu0", "finite parameters");
  if (mu0.size() != n) fail("mu0 must have one entry per state");
  double sum = 0.0;
  for (double v : mu0) {
    if (!(v > 0.0)) fail("mu0 must be strictly positive in every state");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-6) fail("mu0 entries must sum to one");
  for (double& v : mu0) v /= sum;
  return Belief(std::move(mu0));
}

json normalize_finite(const json& params) {
  check_keys(params, "finite parameters",
             {"states", "utility_0", "utility_1", "rho", "mu0", "resolution", "sweep"});
  const DecisionProblem problem = finite_from(params);
  const Belief mu0 = finite_prior(params, problem.n_states());
  json out;
  out["states"] = problem.states;
  out["utility_0"] = problem.utility[0];
  out["utility_1"] = problem.utility[1];
  out["rho"] = problem.rho;
  out["mu0"] = std::vector<double>(mu0.probs().begin(), mu0.probs().end());
  const int resolution = int_or(params, "resolution", "finite parameters", 40);
  if (resolution < 1 || resolution > 400) fail("resolution must lie in [1, 400]");
  out["resolution"] = resolution;
  if (auto sweep = parse_sweep(params, "finite", {"rho"})) {
    if (!(sweep->from > 0.0)) fail("rho sweep must stay strictly positive");
    out["sweep"] = sweep_to_json(*sweep);
  }
  return out;
}

void append_policy_rows(Table& table, const std::string& prefix, const FinitePolicy& policy) {
  for (std::size_t p = 0; p < policy.posteriors.size(); ++p) {
    table.rows.push_back({prefix + "_weight", std::to_string(p), "", fmt(policy.weights[p])});
    for (std::size_t s = 0; s < policy.posteriors[p].size(); ++s) {
      table.rows.push_back({prefix + "_posterior", std::to_string(p), std::to_string(s),
                            fmt(policy.posteriors[p][s])});
    }
  }
}

Table run_finite(const json& params, std::ostream& err) {
  const DecisionProblem problem = finite_from(params);
  const Belief mu0 = finite_prior(params, problem.n_states());
  const int resolution = params.at("resolution").get<int>();

  for (const auto& [a, b] : problem.dominated_action_pairs()) {
    err << "warning: action " << problem.actions[a] << " is weakly dominated by "
        << problem.actions[b] << "\n";
  }

  if (params.contains("sweep")) {
    SweepSpec spec;
    spec.from = params.at("sweep").at("from").get<double>();
    spec.to = params.at("sweep").at("to").get<double>();
    spec.steps = params.at("sweep").at("steps").get<int>();
    const auto grid = sweep_values(spec);
    Table table;
    table.header = {"rho", "value_bayesian", "value_wishful", "favored"};
    table.rows.resize(grid.size());
    parallel_rows(grid.size(), [&](std::size_t i) {
      DecisionProblem scaled = problem;
      scaled.rho = grid[i];
      const double vb = optimal_policy_finite(scaled, mu0, ReceiverMode::Bayesian).value;
      const double vw = optimal_policy_finite(scaled, mu0, ReceiverMode::Wishful).value;
      table.rows[i] = {fmt(grid[i]), fmt(vb), fmt(vw),
                       is_favored(scaled).favored ? "1" : "0"};
    });
    return table;
  }

  Table table;
  table.header = {"quantity", "i", "j", "value"};
  for (std::size_t s = 0; s < mu0.size(); ++s) {
    table.rows.push_back({"prior", "", std::to_string(s), fmt(mu0[s])});
  }

  const auto bayes_polytope = action_polytope(problem, ReceiverMode::Bayesian);
  const auto wish_polytope = action_polytope(problem, ReceiverMode::Wishful);
  for (std::size_t v = 0; v < bayes_polytope.vertices.size(); ++v) {
    for (std::size_t s = 0; s < mu0.size(); ++s) {
      table.rows.push_back({"vertex_bayesian", std::to_string(v), std::to_string(s),
                            fmt(bayes_polytope.vertices[v][s])});
    }
  }
  for (std::size_t v = 0; v < wish_polytope.vertices.size(); ++v) {
    for (std::size_t s = 0; s < mu0.size(); ++s) {
      table.rows.push_back({"vertex_wishful", std::to_string(v), std::to_string(s),
                            fmt(wish_polytope.vertices[v][s])});
    }
  }

  const FavoredSummary summary = is_favored(problem);
  table.rows.push_back({"favored", "", "", summary.favored ? "1" : "0"});
  for (const PairReport& pair : summary.pairs) {
    const std::string i = std::to_string(pair.low_state);
    const std::string j = std::to_string(pair.high_state);
    table.rows.push_back({"pair_mu_bayes", i, j, fmt(pair.report.mu_b)});
    table.rows.push_back({"pair_mu_wishful", i, j, fmt(pair.report.mu_w)});
    table.rows.push_back(
        {"pair_favored", i, j, pair.report.favored == Favoredness::Favored ? "1" : "0"});
  }

  const FinitePolicy bayes_policy = optimal_policy_finite(problem, mu0, ReceiverMode::Bayesian);
  const FinitePolicy wish_policy = optimal_policy_finite(problem, mu0, ReceiverMode::Wishful);
  table.rows.push_back({"value_bayesian", "", "", fmt(bayes_policy.value)});
  table.rows.push_back({"value_wishful", "", "", fmt(wish_policy.value)});
  table.rows.push_back(
      {"oracle_bayesian", std::to_string(resolution), "",
       fmt(grid_oracle_value(problem, mu0, ReceiverMode::Bayesian, resolution))});
  table.rows.push_back(
      {"oracle_wishful", std::to_string(resolution), "",
       fmt(grid_oracle_value(problem, mu0, ReceiverMode::Wishful, resolution))});
  append_policy_rows(table, "policy_bayesian",
                     condense_policy(problem, bayes_policy, ReceiverMode::Bayesian));
  append_policy_rows(table, "policy_wishful",
                     condense_policy(problem, wish_policy, ReceiverMode::Wishful));
  return table;
}

// ---------------------------------------------------------------------------
// investor
// ---------------------------------------------------------------------------

ReturnPrior prior_from(const json& params) {
  const json& p = member(params, "prior", "investor parameters");
  if (!p.is_object()) fail("'prior' must be an object");
  const json& kind = member(p, "kind", "prior");
  if (!kind.is_string()) fail("'kind' in prior must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "uniform") {
    check_keys(p, "prior", {"kind", "low", "high"});
    return ReturnPrior::uniform(num_at(p, "low", "prior"), num_at(p, "high", "prior"));
  }
  if (name == "truncated_normal") {
    check_keys(p, "prior", {"kind", "mean", "stddev", "low", "high"});
    return ReturnPrior::truncated_normal(num_at(p, "mean", "prior"), num_at(p, "stddev", "prior"),
                                         num_at(p, "low", "prior"), num_at(p, "high", "prior"));
  }
  if (name == "piecewise_linear") {
    check_keys(p, "prior", {"kind", "x", "density"});
    return ReturnPrior::piecewise_linear(num_list_at(p, "x", "prior"),
                                         num_list_at(p, "density", "prior"));
  }
  fail("unknown prior kind '" + name + "' (use uniform, truncated_normal or piecewise_linear)");
}

json normalize_investor(const json& params) {
  check_keys(params, "investor parameters", {"prior", "rho", "sweep"});
  prior_from(params);
  const double rho = num_at(params, "rho", "investor parameters");
  if (!(rho > 0.0)) fail("rho must be strictly positive");
  json out;
  out["prior"] = params.at("prior");
  out["rho"] = rho;
  if (auto sweep = parse_sweep(params, "investor", {"rho"})) {
    if (!(sweep->from > 0.0)) fail("rho sweep must stay strictly positive");
    // x_hat < 1 holds on an interval of rho, so checking both endpoints
    // covers the whole sweep.
    const ReturnPrior prior = prior_from(params);
    if (!(exp_moment(prior, sweep->from) < 1.0) || !(exp_moment(prior, sweep->to) < 1.0)) {
      fail("rho sweep leaves the persuadable range: exp_moment must stay below 1");
    }
    out["sweep"] = sweep_to_json(*sweep);
  }
  return out;
}

Table run_investor(const json& params) {
  const ReturnPrior prior = prior_from(params);
  const double rho = params.at("rho").get<double>();

  if (params.contains("sweep")) {
    SweepSpec spec;
    spec.from = params.at("sweep").at("from").get<double>();
    spec.to = params.at("sweep").at("to").get<double>();
    spec.steps = params.at("sweep").at("steps").get<int>();
    const auto grid = sweep_values(spec);
    Table table;
    table.header = {"rho", "theta_wishful", "prob_wishful"};
    table.rows.resize(grid.size());
    parallel_rows(grid.size(), [&](std::size_t i) {
      const double tw = theta_wishful(prior, grid[i]);
      table.rows[i] = {fmt(grid[i]), fmt(tw), fmt(1.0 - prior.cdf(tw))};
    });
    return table;
  }

  const InvestorSolution sol = solve_investor(prior, rho);
  Table table;
  table.header = {"quantity", "value"};
  table.rows.push_back({"theta_bayes", fmt(sol.theta_bayes)});
  table.rows.push_back({"theta_wishful", fmt(sol.theta_wishful)});
  table.rows.push_back({"prob_bayes", fmt(sol.prob_bayes)});
  table.rows.push_back({"prob_wishful", fmt(sol.prob_wishful)});
  table.rows.push_back({"x_hat", fmt(sol.x_hat)});
  table.rows.push_back({"m_hat", fmt(sol.m_hat)});
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"health-fig3", "health-fig4", "health-fig5", "binary-fig6a", "binary-fig6b",
          "binary-fig6c", "voting-fig7", "ternary", "investor-demo"};
}

json preset_config(const std::string& name) {
  if (name == "health-fig3") {
    return json{{"scenario", "health"},
                {"parameters",
                 {{"severity", 2.0},
                  {"cost", 0.5},
                  {"efficacy", 0.8},
                  {"risk_low", 0.1},
                  {"risk_high", 0.9},
                  {"rho", 2.0},
                  {"mu0", 0.3},
                  {"curve_points", 201}}}};
  }
  if (name == "health-fig4" || name == "health-fig5") {
    // Adoption probability against severity; fig4 uses the partially
    // effective treatment, fig5 the fully effective one.
    const double efficacy = name == "health-fig4" ? 0.8 : 1.0;
    const double lo = 0.5 / (efficacy * 0.9);
    const double hi = 0.5 / (efficacy * 0.1);
    return json{{"scenario", "health"},
                {"parameters",
                 {{"severity", 2.0},
                  {"cost", 0.5},
                  {"efficacy", efficacy},
                  {"risk_low", 0.1},
                  {"risk_high", 0.9},
                  {"rho", 2.0},
                  {"mu0", 0.3},
                  {"sweep", {{"parameter", "severity"}, {"from", lo}, {"to", hi}, {"steps", 101}}}}}};
  }
  if (name == "binary-fig6a" || name == "binary-fig6b" || name == "binary-fig6c") {
    json payoffs;
    if (name == "binary-fig6a") {
      payoffs = {{"u_low_0", 3.0}, {"u_high_0", -1.0}, {"u_low_1", 1.0}, {"u_high_1", 4.0}};
    } else if (name == "binary-fig6b") {
      payoffs = {{"u_low_0", 4.0}, {"u_high_0", -1.0}, {"u_low_1", 1.0}, {"u_high_1", 4.0}};
    } else {
      payoffs = {{"u_low_0", 4.0}, {"u_high_0", 1.0}, {"u_low_1", -1.0}, {"u_high_1", 3.0}};
    }
    return json{{"scenario", "binary"},
                {"parameters",
                 {{"payoffs", payoffs},
                  {"rho", 1.0},
                  {"sweep",
                   {{"parameter", "rho"}, {"from", 0.01}, {"to", 2.5}, {"steps", 250}}}}}};
  }
  if (name == "voting-fig7") {
    return json{{"scenario", "voting"},
                {"parameters",
                 {{"betas", {0.25, 0.5, 0.75}}, {"rho", 2.0}, {"mu", 0.5}, {"mu0", 0.3}}}};
  }
  if (name == "ternary") {
    // rho for this example is a documented choice.
    return json{{"scenario", "finite"},
                {"parameters",
                 {{"utility_0", {2.0, 3.0, -1.0}},
                  {"utility_1", {1.0, 0.0, 4.0}},
                  {"rho", 1.0},
                  {"mu0", {0.45, 0.45, 0.10}},
                  {"resolution", 40}}}};
  }
  if (name == "investor-demo") {
    return json{{"scenario", "investor"},
                {"parameters",
                 {{"prior", {{"kind", "uniform"}, {"low", -2.0}, {"high", 1.0}}}, {"rho", 1.0}}}};
  }
  throw config_error("unknown preset '" + name + "'");
}

json normalized(const json& config) {
  if (!config.is_object()) throw config_error("config must be a JSON object");
  check_keys(config, "config", {"scenario", "parameters"});
  const json& sc = member(config, "scenario", "config");
  if (!sc.is_string()) throw config_error("'scenario' must be a string");
  const std::string scenario = sc.get<std::string>();
  json params = config.contains("parameters") ? config.at("parameters") : json::object();
  if (!params.is_object()) throw config_error("'parameters' must be an object");

  json out;
  out["scenario"] = scenario;
  if (scenario == "binary") {
    out["parameters"] = normalize_binary(params);
  } else if (scenario == "health") {
    out["parameters"] = normalize_health(params);
  } else if (scenario == "voting") {
    out["parameters"] = normalize_voting(params);
  } else if (scenario == "finite") {
    out["parameters"] = normalize_finite(params);
  } else if (scenario == "investor") {
    out["parameters"] = normalize_investor(params);
  } else {
    throw config_error("unknown scenario '" + scenario +
                       "' (use binary, health, voting, finite or investor)");
  }
  return out;
}

int run(const json& config, std::ostream& out, std::ostream& err) {
  try {
    const json canonical = normalized(config);
    const std::string scenario = canonical.at("scenario").get<std::string>();
    const json& params = canonical.at("parameters");
    Table table;
    if (scenario == "binary") {
      table = run_binary(params);
    } else if (scenario == "health") {
      table = run_health(params);
    } else if (scenario == "voting") {
      table = run_voting(params);
    } else if (scenario == "finite") {
      table = run_finite(params, err);
    } else {
      table = run_investor(params);
    }
    emit(out, table);
    return kExitOk;
  } catch (const config_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const numerical_error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace wishful::cli
