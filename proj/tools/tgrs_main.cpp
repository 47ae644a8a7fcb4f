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

// Command-line front end: classify, encode, decode, simulate, scaling.
//
// Field elements are passed and printed as canonical integers (base-p
// digits of the z-polynomial representation). All indices in output are
// 0-based. Exit code 0 covers both success and a well-formed decode
// failure; exit code 2 means a usage, parse or validation error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tgrs/channel.hpp"
#include "tgrs/code_io.hpp"

namespace {

using tgrs::CodeSpec;
using tgrs::FieldElement;

std::vector<FieldElement> parse_csv_elements(const tgrs::Field& f, const std::string& csv, const char* what) {
    std::vector<FieldElement> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            throw tgrs::Error(tgrs::Errc::BadFormat, std::string(what) + ": '" + item + "' is not an integer");
        }
        if (pos != item.size())
            throw tgrs::Error(tgrs::Errc::BadFormat, std::string(what) + ": '" + item + "' is not an integer");
        out.push_back(f.from_int(v));
    }
    if (out.empty()) throw tgrs::Error(tgrs::Errc::BadFormat, std::string(what) + ": empty list");
    return out;
}

std::string join_elements(const std::vector<FieldElement>& v, bool pretty) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ",";
        out += pretty ? v[i].pretty() : std::to_string(v[i].to_int());
    }
    return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

nlohmann::json elements_json(const std::vector<FieldElement>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : v) a.push_back(e.to_int());
    return a;
}

void cmd_classify(const CodeSpec& code, bool json) {
    const auto& cls = code.classification();
    if (json) {
        nlohmann::json j;
        j["classification"] = cls.kind == tgrs::CodeKind::Mds ? "MDS" : "NMDS";
        if (cls.witness) j["witness"] = *cls.witness;
        std::cout << j.dump() << "\n";
    } else if (cls.kind == tgrs::CodeKind::Mds) {
        std::cout << "MDS\n";
    } else {
        std::cout << "NMDS witness=" << join_indices(*cls.witness) << "\n";
    }
}

void cmd_encode(const CodeSpec& code, const std::string& message_csv, bool json, bool pretty) {
    const auto message = parse_csv_elements(code.field(), message_csv, "--message");
    if (message.size() != code.dimension())
        throw tgrs::Error(tgrs::Errc::LengthMismatch, "message must have exactly k symbols");
    const auto codeword = tgrs::encode(code, message);
    if (json)
        std::cout << nlohmann::json{{"codeword", elements_json(codeword)}}.dump() << "\n";
    else
        std::cout << join_elements(codeword, pretty) << "\n";
}

void cmd_decode(const CodeSpec& code, const std::string& received_csv, bool json, bool pretty) {
    const auto received = parse_csv_elements(code.field(), received_csv, "--received");
    if (received.size() != code.length())
        throw tgrs::Error(tgrs::Errc::LengthMismatch, "received word must have exactly n symbols");
    const auto outcome = tgrs::decode(code, received);
    if (json) {
        nlohmann::json j;
        if (outcome.ok()) {
            j["status"] = "success";
            j["codeword"] = elements_json(outcome.codeword);
            j["message"] = elements_json(outcome.message);
            j["error_positions"] = outcome.error_positions;
            j["error_values"] = elements_json(outcome.error_values);
        } else {
            j["status"] = "failure";
            j["reason"] = tgrs::status_name(outcome.status);
        }
        std::cout << j.dump() << "\n";
    } else if (outcome.ok()) {
        std::cout << "status=success\n";
        std::cout << "codeword=" << join_elements(outcome.codeword, pretty) << "\n";
        std::cout << "message=" << join_elements(outcome.message, pretty) << "\n";
        std::cout << "errors=" << join_indices(outcome.error_positions) << "\n";
    } else {
        std::cout << "status=failure\n";
        std::cout << "reason=" << tgrs::status_name(outcome.status) << "\n";
    }
}

void cmd_simulate(const CodeSpec& code, std::size_t trials, std::size_t weight, std::uint64_t seed, bool json) {
    const auto report = tgrs::run_trials({code, trials, weight, seed});
    if (!json) {
        std::cout << report.to_text();
        return;
    }
    nlohmann::json j;
    j["code"] = {{"n", report.n},
                 {"k", report.k},
                 {"q", report.q},
                 {"hook", report.hook},
                 {"classification", report.kind == tgrs::CodeKind::Mds ? "MDS" : "NMDS"},
                 {"variant", tgrs::variant_name(report.variant)},
                 {"tau", report.radius}};
    j["trials"] = report.trials;
    j["weight"] = report.error_weight;
    j["seed"] = report.seed;
    j["successes"] = report.successes;
    nlohmann::json fails = nlohmann::json::object();
    for (const auto& [status, count] : report.failures) fails[tgrs::status_name(status)] = count;
    j["failures"] = std::move(fails);
    j["timing"] = {{"decode_seconds_mean", report.decode_seconds_mean},
                   {"decode_seconds_max", report.decode_seconds_max}};
    j["rng"] = report.rng_rule;
    std::cout << j.dump() << "\n";
}

void cmd_scaling(double rate, const std::string& sizes_csv, std::uint64_t seed, std::size_t trials, bool json) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(sizes_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            sizes.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw tgrs::Error(tgrs::Errc::BadFormat, "--sizes: '" + item + "' is not an integer");
        }
    }
    if (sizes.empty()) throw tgrs::Error(tgrs::Errc::BadFormat, "--sizes: empty list");

    // smallest binary field that can host the largest size
    std::size_t max_n = 0;
    for (std::size_t s : sizes) max_n = std::max(max_n, s);
    std::uint32_t m = 1;
    while ((std::uint64_t{1} << m) <= max_n) ++m;
    const auto field = tgrs::Field::make(2, m);

    const auto rows = tgrs::scaling_run(rate, sizes, field, seed, trials);
    if (json) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rows)
            a.push_back({{"n", r.n}, {"mean_seconds", r.mean_seconds}, {"trials", r.trials}});
        std::cout << a.dump() << "\n";
    } else {
        std::cout << tgrs::scaling_csv(rows);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted generalized Reed-Solomon code toolkit.\n"
                 "Field elements are canonical integers; indices are 0-based."};
    app.require_subcommand(1);

    std::string spec_path, message_csv, received_csv, sizes_csv;
    std::size_t trials = 1000, weight = 0, scaling_trials = 20;
    std::uint64_t seed = 0;
    double rate = 0.5;
    bool json = false, pretty = false;

    auto* classify = app.add_subcommand("classify", "Print MDS/NMDS classification of a code spec");
    classify->add_option("--spec", spec_path, "Code spec file (JSON)")->required();
    classify->add_flag("--json", json, "Machine-readable output");

    auto* encode = app.add_subcommand("encode", "Encode a k-symbol message");
    encode->add_option("--spec", spec_path, "Code spec file (JSON)")->required();
    encode->add_option("--message", message_csv, "Comma-separated canonical integers, length k")->required();
    encode->add_flag("--json", json, "Machine-readable output");
    encode->add_flag("--pretty", pretty, "Display elements as polynomials in z");

    auto* decode = app.add_subcommand("decode", "Decode an n-symbol received word");
    decode->add_option("--spec", spec_path, "Code spec file (JSON)")->required();
    decode->add_option("--received", received_csv, "Comma-separated canonical integers, length n")->required();
    decode->add_flag("--json", json, "Machine-readable output");
    decode->add_flag("--pretty", pretty, "Display elements as polynomials in z");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo exact-weight error trials");
    simulate->add_option("--spec", spec_path, "Code spec file (JSON)")->required();
    simulate->add_option("--trials", trials, "Number of trials (default 1000)");
    simulate->add_option("--weight", weight, "Exact error weight per trial")->required();
    simulate->add_option("--seed", seed, "64-bit seed (default 0)");
    simulate->add_flag("--json", json, "Machine-readable output");

    auto* scaling = app.add_subcommand("scaling", "Mean decode time per code length (CSV)");
    scaling->add_option("--rate", rate, "Code rate k/n, in (0,1)")->required();
    scaling->add_option("--sizes", sizes_csv, "Comma-separated code lengths")->required();
    scaling->add_option("--seed", seed, "64-bit seed (default 0)");
    scaling->add_option("--trials", scaling_trials, "Trials per size (default 20)");
    scaling->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed() || encode->parsed() || decode->parsed() || simulate->parsed()) {
            const CodeSpec code = tgrs::load_code_spec(spec_path);
            if (classify->parsed()) cmd_classify(code, json);
            if (encode->parsed()) cmd_encode(code, message_csv, json, pretty);
            if (decode->parsed()) cmd_decode(code, received_csv, json, pretty);
            if (simulate->parsed()) cmd_simulate(code, trials, weight, seed, json);
        } else if (scaling->parsed()) {
            cmd_scaling(rate, sizes_csv, seed, scaling_trials, json);
        }
    } catch (const tgrs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
