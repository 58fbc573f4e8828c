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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wishful/scenario.hpp"

namespace {

using nlohmann::json;

// Writes `content` to `path` atomically: temp file in place, then rename.
bool write_atomic(const std::string& path, const std::string& content, std::ostream& err) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      err << "error: cannot open '" << tmp << "' for writing\n";
      return false;
    }
    out << content;
    if (!out.flush()) {
      err << "error: failed writing '" << tmp << "'\n";
      return false;
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    err << "error: cannot move '" << tmp << "' to '" << path << "'\n";
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

void deep_merge(json& base, const json& overlay) {
  if (!base.is_object() || !overlay.is_object()) {
    base = overlay;
    return;
  }
  for (auto it = overlay.begin(); it != overlay.end(); ++it) {
    if (base.contains(it.key())) {
      deep_merge(base[it.key()], it.value());
    } else {
      base[it.key()] = it.value();
    }
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivated-beliefs persuasion scenarios: thresholds, policies and sweeps as CSV"};
  app.footer("Presets: health-fig3 health-fig4 health-fig5 binary-fig6a binary-fig6b "
             "binary-fig6c voting-fig7 ternary investor-demo");

  std::string scenario;
  app.add_option("scenario", scenario, "binary | health | voting | finite | investor")
      ->required();

  std::string config_path, preset, out_path;
  bool dump_config = false;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--preset", preset, "named preset configuration");
  app.add_option("--out", out_path, "write the CSV here (atomically) instead of stdout");
  app.add_flag("--dump-config", dump_config, "print the canonical config instead of running");

  // Parameter flags override config values. Binary and health scenarios are
  // fully drivable from flags alone.
  std::optional<double> rho, mu0, mu;
  std::optional<double> u_low_0, u_high_0, u_low_1, u_high_1;
  std::optional<double> severity, cost, efficacy, risk_low, risk_high;
  std::optional<int> curve_points, resolution;
  std::string betas_text;
  std::optional<std::string> sweep_parameter;
  std::optional<double> sweep_from, sweep_to;
  std::optional<int> sweep_steps;

  app.add_option("--rho", rho, "self-deception weight");
  app.add_option("--mu0", mu0, "prior probability of the high state");
  app.add_option("--mu", mu, "posterior to evaluate (voting)");
  app.add_option("--u-low-0", u_low_0, "binary: action 0 payoff, low state");
  app.add_option("--u-high-0", u_high_0, "binary: action 0 payoff, high state");
  app.add_option("--u-low-1", u_low_1, "binary: action 1 payoff, low state");
  app.add_option("--u-high-1", u_high_1, "binary: action 1 payoff, high state");
  app.add_option("--severity", severity, "health: loss when falling ill");
  app.add_option("--cost", cost, "health: treatment cost");
  app.add_option("--efficacy", efficacy, "health: treatment efficacy in [0,1]");
  app.add_option("--risk-low", risk_low, "health: infection risk, low state");
  app.add_option("--risk-high", risk_high, "health: infection risk, high state");
  app.add_option("--curve-points", curve_points, "health: belief curve sample count");
  app.add_option("--resolution", resolution, "finite: oracle grid resolution");
  app.add_option("--betas", betas_text, "voting: comma-separated partisan preferences");
  app.add_option("--sweep-parameter", sweep_parameter, "sweep: parameter name");
  app.add_option("--sweep-from", sweep_from, "sweep: start value");
  app.add_option("--sweep-to", sweep_to, "sweep: end value");
  app.add_option("--sweep-steps", sweep_steps, "sweep: number of grid points");

  CLI11_PARSE(app, argc, argv);

  json config;
  try {
    if (!preset.empty()) {
      config = wishful::cli::preset_config(preset);
      if (config.at("scenario").get<std::string>() != scenario) {
        std::cerr << "error: preset '" << preset << "' belongs to scenario '"
                  << config.at("scenario").get<std::string>() << "', not '" << scenario << "'\n";
        return wishful::cli::kExitConfig;
      }
    } else {
      config = json{{"scenario", scenario}, {"parameters", json::object()}};
    }
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot read config file '" << config_path << "'\n";
        return wishful::cli::kExitConfig;
      }
      json from_file = json::parse(in);
      if (from_file.is_object() && from_file.contains("scenario") &&
          from_file.at("scenario") != scenario) {
        std::cerr << "error: config file is for scenario '"
                  << from_file.at("scenario").dump() << "', not '" << scenario << "'\n";
        return wishful::cli::kExitConfig;
      }
      deep_merge(config, from_file);
      config["scenario"] = scenario;
    }

    json& params = config["parameters"];
    auto set = [&params](const char* key, const auto& value) { params[key] = value; };
    if (rho) set("rho", *rho);
    if (mu0) set("mu0", *mu0);
    if (mu) set("mu", *mu);
    if (u_low_0) params["payoffs"]["u_low_0"] = *u_low_0;
    if (u_high_0) params["payoffs"]["u_high_0"] = *u_high_0;
    if (u_low_1) params["payoffs"]["u_low_1"] = *u_low_1;
    if (u_high_1) params["payoffs"]["u_high_1"] = *u_high_1;
    if (severity) set("severity", *severity);
    if (cost) set("cost", *cost);
    if (efficacy) set("efficacy", *efficacy);
    if (risk_low) set("risk_low", *risk_low);
    if (risk_high) set("risk_high", *risk_high);
    if (curve_points) set("curve_points", *curve_points);
    if (resolution) set("resolution", *resolution);
    if (!betas_text.empty()) set("betas", parse_list(betas_text));
    if (sweep_parameter) params["sweep"]["parameter"] = *sweep_parameter;
    if (sweep_from) params["sweep"]["from"] = *sweep_from;
    if (sweep_to) params["sweep"]["to"] = *sweep_to;
    if (sweep_steps) params["sweep"]["steps"] = *sweep_steps;
  } catch (const json::parse_error& e) {
    std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
    return wishful::cli::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return wishful::cli::kExitConfig;
  }

  if (dump_config) {
    try {
      std::cout << wishful::cli::normalized(config).dump(2) << "\n";
      return wishful::cli::kExitOk;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return wishful::cli::kExitConfig;
    }
  }

  std::ostringstream buffer;
  const int code = wishful::cli::run(config, buffer, std::cerr);
  if (code != wishful::cli::kExitOk) return code;
  if (out_path.empty()) {
    std::cout << buffer.str();
  } else if (!write_atomic(out_path, buffer.str(), std::cerr)) {
    return 1;  // I/O failure, neither a config nor a numerical error
  }
  return wishful::cli::kExitOk;
}
