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

#include <ostream>
#include <span>
#include <string>

namespace wishful::csv {

// RFC-4180 field quoting: wraps in double quotes (doubling embedded quotes)
// only when the field contains a comma, quote or line break.
std::string field(const std::string& raw);

// 12 significant digits, '.' decimal separator, no locale dependence.
// Negative zero is normalized so identical values print identically.
std::string number(double value);

// One record per call; fields are escaped here, rows end with '\n'.
void write_row(std::ostream& out, std::span<const std::string> cells);

}  // namespace wishful::csv
