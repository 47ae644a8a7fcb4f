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
 * @file channel.hpp
 * @brief Seedable exact-weight error channel and Monte-Carlo trial runner.
 *
 * Errors are injected with exact Hamming weight (positions sampled without
 * replacement, each hit by a uniformly random nonzero delta), which gives
 * sharp certification of a decoder's correction radius. Every trial derives
 * its own generator state from (seed, trial index) by the rule
 *
 *     state_i = mix64(seed ^ mix64(i))
 *
 * with mix64 the SplitMix64 finalizer, so trials are order-independent and
 * a report is a pure function of its TrialConfig (timing fields aside).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tgrs/decoder.hpp"

namespace tgrs {

/// SplitMix64 finalizer; also the per-trial state derivation primitive.
std::uint64_t mix64(std::uint64_t x);

/// Identifier of the derivation rule, echoed into every report.
inline constexpr const char* kRngRule = "splitmix64;state[i]=mix64(seed^mix64(i))";

/// Minimal deterministic generator (SplitMix64 stream).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next();

    /// Uniform draw in [0, bound), bound >= 1, by rejection sampling.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

/// Corrupts exactly `weight` positions, chosen uniformly without
/// replacement, each by a uniformly random nonzero delta. Returns the
/// received word and the ascending corrupted positions.
std::pair<std::vector<FieldElement>, std::vector<std::size_t>> inject(std::span<const FieldElement> codeword,
                                                                      std::size_t weight, SplitMix64& rng);

struct TrialConfig {
    CodeSpec code;
    std::size_t trials;
    std::size_t error_weight;
    std::uint64_t seed;
};

struct TrialReport {
    std::size_t trials;
    std::size_t error_weight;
    std::uint64_t seed;
    std::size_t successes;
    std::map<DecodeOutcome::Status, std::size_t> failures; // non-success outcomes only
    double decode_seconds_mean;
    double decode_seconds_max;
    std::string rng_rule;
    // code echo
    std::size_t n, k, hook;
    std::uint32_t q;
    CodeKind kind;
    DecodeVariant variant;
    std::size_t radius;

    std::string to_text() const;
};

/// Outcome of the single trial `index` of a (code, weight, seed) run:
/// sample a uniform message, encode, inject, decode, compare. Success means
/// the decoder returned exactly the transmitted codeword.
DecodeOutcome::Status trial_outcome(const CodeSpec& code, std::size_t weight, std::uint64_t seed, std::size_t index,
                                    double* decode_seconds = nullptr);

/// Runs cfg.trials independent trials. Throws WeightOutOfRange.
TrialReport run_trials(const TrialConfig& cfg);

struct ScalingRow {
    std::size_t n;
    double mean_seconds;
    std::size_t trials;
};

/// For each size n: build a random code of rate ~`rate` over `field`
/// (random distinct evaluation points, random nonzero eta), then average
/// decode wall time over `trials_per_size` radius-weight trials. Throws
/// InsufficientField when a size exceeds the field order.
std::vector<ScalingRow> scaling_run(double rate, std::span<const std::size_t> sizes,
                                    const std::shared_ptr<const Field>& field, std::uint64_t seed,
                                    std::size_t trials_per_size = 20);

/// "n,mean_seconds,trials" header plus one CSV line per row.
std::string scaling_csv(std::span<const ScalingRow> rows);

} // namespace tgrs
