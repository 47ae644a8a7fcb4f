/*
   Copyright 2026 The tgrs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file code_io.hpp
 * @brief JSON code-spec files.
 *
 * Format (all integers; field elements by canonical integer):
 *
 *   {
 *     "field": {"p": 3, "m": 2, "modulus": [2, 1, 1]},   // modulus optional
 *     "n": 5, "k": 2, "hook": 0,
 *     "eta": 3,
 *     "alpha": [0, 1, 3, 4, 6]
 *   }
 */

#pragma once

#include <string>

#include "json.hpp"
#include "tgrs/code.hpp"

namespace tgrs {

nlohmann::json code_to_json(const CodeSpec& code);

/// Throws BadFormat on structural problems, plus the usual validation
/// errors from Field::make / CodeSpec::make.
CodeSpec code_from_json(const nlohmann::json& j);

/// Reads and parses a spec file. Throws BadFormat when unreadable.
CodeSpec load_code_spec(const std::string& path);

} // namespace tgrs
