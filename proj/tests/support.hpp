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

// Shared test helpers: reference codes, independent oracles and samplers.
// Everything here is test-only and deliberately avoids the library code
// paths it is used to check (e.g. the distance oracle never calls
// classify, the nearest-codeword search never calls decode).

#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "tgrs/channel.hpp"
#include "tgrs/code.hpp"
#include "tgrs/decoder.hpp"

namespace testsupport {

using tgrs::CodeSpec;
using tgrs::Field;
using tgrs::FieldElement;

// F_9 = F_3[z]/(z^2+z+2), n=5, k=2, hook=0, eta=z, alpha=(0,1,z,z+1,2z).
inline CodeSpec code_f9_n5() {
    auto f = Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1});
    std::vector<FieldElement> alpha{f->from_int(0), f->from_int(1), f->from_int(3), f->from_int(4), f->from_int(6)};
    return CodeSpec::make(f, 5, 2, 0, f->from_int(3), std::move(alpha));
}

// F_16 = F_2[z]/(z^4+z+1), n=8, k=2, hook=0, eta=z^2, alpha=(0..7).
inline CodeSpec code_f16_n8() {
    auto f = Field::make(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    std::vector<FieldElement> alpha;
    for (std::uint32_t v = 0; v < 8; ++v) alpha.push_back(f->from_int(v));
    return CodeSpec::make(f, 8, 2, 0, f->from_int(4), std::move(alpha));
}

// F_7, n=7, k=2, hook=0, eta=2, alpha=(0..6).
inline CodeSpec code_f7_n7() {
    auto f = Field::make(7, 1);
    std::vector<FieldElement> alpha;
    for (std::uint32_t v = 0; v < 7; ++v) alpha.push_back(f->from_int(v));
    return CodeSpec::make(f, 7, 2, 0, f->from_int(2), std::move(alpha));
}

inline std::vector<FieldElement> elems(const Field& f, const std::vector<std::uint32_t>& vals) {
    std::vector<FieldElement> out;
    out.reserve(vals.size());
    for (auto v : vals) out.emplace_back(f, v);
    return out;
}

inline std::vector<std::uint32_t> ints(const std::vector<FieldElement>& v) {
    std::vector<std::uint32_t> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.to_int());
    return out;
}

inline std::size_t hamming(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

// Equal up to a nonzero scalar.
inline bool projectively_equal(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    if (a.size() != b.size()) return false;
    std::optional<FieldElement> scale;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        const FieldElement s = b[i] / a[i];
        if (!scale)
            scale = s;
        else if (*scale != s)
            return false;
    }
    return scale.has_value(); // both all-zero counts as not proportional
}

// Every codeword, by enumerating all q^k messages. Oracle-grade: O(q^k n k).
inline std::vector<std::vector<FieldElement>> all_codewords(const CodeSpec& code) {
    const Field& f = code.field();
    const std::size_t k = code.dimension();
    std::vector<std::vector<FieldElement>> words;
    std::vector<std::uint32_t> msg(k, 0);
    while (true) {
        words.push_back(tgrs::encode(code, elems(f, msg)));
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.order()) msg[i++] = 0;
        if (i == k) break;
    }
    return words;
}

// Minimum distance = minimum nonzero codeword weight (the code is linear).
inline std::size_t min_distance(const CodeSpec& code) {
    std::size_t best = code.length() + 1;
    for (const auto& w : all_codewords(code)) {
        std::size_t wt = 0;
        for (const auto& e : w)
            if (!e.is_zero()) ++wt;
        if (wt != 0) best = std::min(best, wt);
    }
    return best;
}

inline std::size_t nearest_codeword_distance(const std::vector<std::vector<FieldElement>>& codewords,
                                             const std::vector<FieldElement>& y) {
    std::size_t best = y.size() + 1;
    for (const auto& c : codewords) best = std::min(best, hamming(c, y));
    return best;
}

// All w-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t w) {
    std::vector<std::vector<std::size_t>> out;
    if (w > n) return out;
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = w;
        while (i-- > 0) {
            if (idx[i] != i + n - w) break;
            if (i == 0) return out;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Random MDS code over GF(2^deg): evaluation points drawn from the proper
// subspace spanned by z^0..z^(sub_dim-1) so every k-subset sum stays inside
// it, and eta chosen with 1/eta outside the subspace. The MDS condition
// then holds for every k, which classify() re-verifies.
inline CodeSpec sample_mds_code(tgrs::SplitMix64& rng, std::size_t n, std::size_t k) {
    std::size_t sub_dim = 1;
    while ((std::size_t{1} << sub_dim) < n) ++sub_dim;
    const std::uint32_t deg = static_cast<std::uint32_t>(sub_dim + 1 + rng.below(2));
    auto f = Field::make(2, deg);
    const std::uint32_t sub_size = 1u << sub_dim;

    std::vector<std::uint32_t> pool(sub_size);
    for (std::uint32_t i = 0; i < sub_size; ++i) pool[i] = i;
    std::vector<FieldElement> alpha;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(sub_size - i));
        std::swap(pool[i], pool[j]);
        alpha.emplace_back(*f, pool[i]);
    }

    std::uint32_t eta_v = 0;
    do {
        eta_v = static_cast<std::uint32_t>(rng.below(f->order() - 1) + 1);
    } while (f->inv_v(eta_v) < sub_size);
    CodeSpec code = CodeSpec::make(f, n, k, rng.below(k), FieldElement(*f, eta_v), std::move(alpha));
    if (code.classification().kind != tgrs::CodeKind::Mds)
        throw std::logic_error("subspace construction should be MDS");
    return code;
}

// Random NMDS code: random distinct points, then eta = -1/s for the sum s
// of a random k-subset, which plants a witness. classify() re-verifies.
inline CodeSpec sample_nmds_code(tgrs::SplitMix64& rng, const std::shared_ptr<const Field>& f, std::size_t n,
                                 std::size_t k) {
    const Field& field = *f;
    while (true) {
        std::vector<std::uint32_t> pool(field.order());
        for (std::uint32_t i = 0; i < field.order(); ++i) pool[i] = i;
        std::vector<FieldElement> alpha;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(field.order() - i));
            std::swap(pool[i], pool[j]);
            alpha.emplace_back(field, pool[i]);
        }
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < k; ++i) s = field.add_v(s, alpha[i].to_int());
        if (s == 0) continue; // that subset cannot define eta; resample
        const FieldElement eta(field, field.neg_v(field.inv_v(s)));
        CodeSpec code = CodeSpec::make(f, n, k, rng.below(k), eta, std::move(alpha));
        if (code.classification().kind != tgrs::CodeKind::Nmds)
            throw std::logic_error("planted witness should classify NMDS");
        return code;
    }
}

struct CmdResult {
    int exit_code;
    std::string out;
};

inline CmdResult run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    const int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {exit_code, out};
}

} // namespace testsupport
