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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wishful::cli {

// Invalid scenario configuration (unknown keys, out-of-range parameters,
// malformed JSON structure). Maps to exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Exit codes shared by the library entry point and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Canned configurations reproducing the library's reference scenarios.
std::vector<std::string> preset_names();
nlohmann::json preset_config(const std::string& name);  // throws config_error

// Validates the config, fills defaults and returns the canonical form.
// normalized(normalized(x)) == normalized(x).
nlohmann::json normalized(const nlohmann::json& config);

// Validates and executes a scenario config, writing one CSV table to `out`.
// Output is deterministic byte-for-byte for identical configs. Exceptions
// do not escape: diagnostics go to `err` and the exit code is returned.
int run(const nlohmann::json& config, std::ostream& out, std::ostream& err);

}  // namespace wishful::cli
