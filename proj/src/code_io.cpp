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

#include "tgrs/code_io.hpp"

#include <fstream>

namespace tgrs {

namespace {

std::uint64_t get_uint(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw Error(Errc::BadFormat, std::string("expected non-negative integer field '") + key + "'");
    return j[key].get<std::uint64_t>();
}

} // namespace

nlohmann::json code_to_json(const CodeSpec& code) {
    nlohmann::json j;
    j["field"]["p"] = code.field().characteristic();
    j["field"]["m"] = code.field().degree();
    j["field"]["modulus"] = code.field().modulus();
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["hook"] = code.hook();
    j["eta"] = code.eta().to_int();
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& a : code.alpha()) alpha.push_back(a.to_int());
    j["alpha"] = std::move(alpha);
    return j;
}

CodeSpec code_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(Errc::BadFormat, "spec must be a JSON object");
    if (!j.contains("field") || !j["field"].is_object())
        throw Error(Errc::BadFormat, "expected object field 'field'");
    const auto& jf = j["field"];
    const auto p = get_uint(jf, "p");
    const auto m = get_uint(jf, "m");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (jf.contains("modulus")) {
        if (!jf["modulus"].is_array()) throw Error(Errc::BadFormat, "'modulus' must be an array of integers");
        modulus.emplace();
        for (const auto& c : jf["modulus"]) {
            if (!c.is_number_unsigned()) throw Error(Errc::BadFormat, "'modulus' must be an array of integers");
            modulus->push_back(c.get<std::uint32_t>());
        }
    }
    auto field = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), std::move(modulus));

    const auto n = get_uint(j, "n");
    const auto k = get_uint(j, "k");
    const auto hook = get_uint(j, "hook");
    const FieldElement eta = field->from_int(get_uint(j, "eta"));
    if (!j.contains("alpha") || !j["alpha"].is_array())
        throw Error(Errc::BadFormat, "expected array field 'alpha'");
    std::vector<FieldElement> alpha;
    for (const auto& a : j["alpha"]) {
        if (!a.is_number_unsigned()) throw Error(Errc::BadFormat, "'alpha' must be an array of integers");
        alpha.push_back(field->from_int(a.get<std::uint64_t>()));
    }
    return CodeSpec::make(std::move(field), static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                          static_cast<std::size_t>(hook), eta, std::move(alpha));
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadFormat, "cannot read spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadFormat, std::string("invalid JSON: ") + e.what());
    }
    return code_from_json(j);
}

} // namespace tgrs
