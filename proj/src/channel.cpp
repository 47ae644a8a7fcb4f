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

#include "tgrs/channel.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace tgrs {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

std::pair<std::vector<FieldElement>, std::vector<std::size_t>> inject(std::span<const FieldElement> codeword,
                                                                      std::size_t weight, SplitMix64& rng) {
    const std::size_t n = codeword.size();
    if (weight > n) throw Error(Errc::WeightOutOfRange, "error weight exceeds code length");
    std::vector<FieldElement> received(codeword.begin(), codeword.end());
    if (weight == 0) return {std::move(received), {}};

    const Field& f = codeword.front().field();
    // partial Fisher-Yates for the positions
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < weight; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> positions(pool.begin(), pool.begin() + weight);
    std::sort(positions.begin(), positions.end());

    for (std::size_t pos : positions) {
        const std::uint32_t delta = static_cast<std::uint32_t>(rng.below(f.order() - 1) + 1);
        received[pos] = received[pos] + FieldElement(f, delta);
    }
    return {std::move(received), std::move(positions)};
}

DecodeOutcome::Status trial_outcome(const CodeSpec& code, std::size_t weight, std::uint64_t seed, std::size_t index,
                                    double* decode_seconds) {
    SplitMix64 rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(index))));
    const Field& f = code.field();

    std::vector<FieldElement> message;
    message.reserve(code.dimension());
    for (std::size_t i = 0; i < code.dimension(); ++i)
        message.emplace_back(f, static_cast<std::uint32_t>(rng.below(f.order())));

    const std::vector<FieldElement> sent = encode(code, message);
    auto [received, positions] = inject(sent, weight, rng);

    const auto t0 = std::chrono::steady_clock::now();
    const DecodeOutcome outcome = decode(code, received);
    const auto t1 = std::chrono::steady_clock::now();
    if (decode_seconds != nullptr) *decode_seconds = std::chrono::duration<double>(t1 - t0).count();

    if (!outcome.ok()) return outcome.status;
    if (outcome.codeword != sent) {
        // a codeword within the radius that is not the transmitted one;
        // count it as a distance failure for reporting purposes
        return DecodeOutcome::Status::DistanceExceedsRadius;
    }
    return DecodeOutcome::Status::Success;
}

TrialReport run_trials(const TrialConfig& cfg) {
    const CodeSpec& code = cfg.code;
    if (cfg.error_weight > code.length()) throw Error(Errc::WeightOutOfRange, "error weight exceeds code length");
    if (cfg.trials < 1) throw Error(Errc::BadDimensions, "need at least one trial");

    const DecodeParams params = params_for(code);
    TrialReport rep{};
    rep.trials = cfg.trials;
    rep.error_weight = cfg.error_weight;
    rep.seed = cfg.seed;
    rep.successes = 0;
    rep.decode_seconds_mean = 0.0;
    rep.decode_seconds_max = 0.0;
    rep.rng_rule = kRngRule;
    rep.n = code.length();
    rep.k = code.dimension();
    rep.hook = code.hook();
    rep.q = code.field().order();
    rep.kind = code.classification().kind;
    rep.variant = params.variant;
    rep.radius = params.radius;

    double total = 0.0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        double secs = 0.0;
        const auto status = trial_outcome(code, cfg.error_weight, cfg.seed, i, &secs);
        total += secs;
        rep.decode_seconds_max = std::max(rep.decode_seconds_max, secs);
        if (status == DecodeOutcome::Status::Success)
            ++rep.successes;
        else
            ++rep.failures[status];
    }
    rep.decode_seconds_mean = total / static_cast<double>(cfg.trials);
    return rep;
}

std::string TrialReport::to_text() const {
    std::ostringstream os;
    os << "code: n=" << n << " k=" << k << " q=" << q << " hook=" << hook
       << " class=" << (kind == CodeKind::Mds ? "MDS" : "NMDS") << " variant=" << variant_name(variant)
       << " tau=" << radius << "\n";
    os << "trials=" << trials << " weight=" << error_weight << " seed=" << seed << "\n";
    os << "rng=" << rng_rule << "\n";
    os << "successes=" << successes << "\n";
    if (failures.empty()) {
        os << "failures: none\n";
    } else {
        os << "failures:\n";
        for (const auto& [status, count] : failures) os << "  " << status_name(status) << ": " << count << "\n";
    }
    os << "decode_seconds_mean=" << decode_seconds_mean << "\n";
    os << "decode_seconds_max=" << decode_seconds_max << "\n";
    return os.str();
}

std::vector<ScalingRow> scaling_run(double rate, std::span<const std::size_t> sizes,
                                    const std::shared_ptr<const Field>& field, std::uint64_t seed,
                                    std::size_t trials_per_size) {
    if (rate <= 0.0 || rate >= 1.0) throw Error(Errc::BadDimensions, "rate must lie strictly between 0 and 1");
    if (trials_per_size < 1) throw Error(Errc::BadDimensions, "need at least one trial per size");
    const Field& f = *field;

    std::vector<ScalingRow> rows;
    for (const std::size_t n : sizes) {
        if (n < 2) throw Error(Errc::BadDimensions, "length must be at least 2");
        if (n > f.order()) throw Error(Errc::InsufficientField, "length exceeds field order");
        std::size_t k = static_cast<std::size_t>(rate * static_cast<double>(n) + 0.5);
        k = std::clamp<std::size_t>(k, 1, n - 1);

        SplitMix64 rng(mix64(seed ^ mix64(n)));
        // distinct evaluation points via partial Fisher-Yates over the field
        std::vector<std::uint32_t> pool(f.order());
        std::iota(pool.begin(), pool.end(), 0u);
        std::vector<FieldElement> alpha;
        alpha.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(f.order() - i));
            std::swap(pool[i], pool[j]);
            alpha.emplace_back(f, pool[i]);
        }
        const FieldElement eta(f, static_cast<std::uint32_t>(rng.below(f.order() - 1) + 1));

        const CodeSpec code = CodeSpec::make(field, n, k, 0, eta, std::move(alpha));
        const std::size_t tau = params_for(code).radius;

        // one untimed decode to warm caches before measuring
        trial_outcome(code, tau, mix64(seed), 0, nullptr);

        double total = 0.0;
        for (std::size_t t = 0; t < trials_per_size; ++t) {
            double secs = 0.0;
            trial_outcome(code, tau, mix64(seed ^ mix64(0x5CA11AB1ULL + n)), t, &secs);
            total += secs;
        }
        rows.push_back({n, total / static_cast<double>(trials_per_size), trials_per_size});
    }
    return rows;
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
    std::ostringstream os;
    os << "n,mean_seconds,trials\n";
    for (const auto& r : rows) os << r.n << "," << r.mean_seconds << "," << r.trials << "\n";
    return os.str();
}

} // namespace tgrs
