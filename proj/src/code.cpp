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

#include "tgrs/code.hpp"

#include <algorithm>
#include <unordered_set>

namespace tgrs {

namespace {

// Suffix-reachability table for the cardinality-constrained subset sum:
// can[i][c][s] = "choosing exactly c of alpha[i..n) can reach field sum s".
// Greedy front-to-back reconstruction then yields the lexicographically
// smallest witness.
Classification classify_impl(const Field& f, const std::vector<FieldElement>& alpha, const FieldElement& eta,
                             std::size_t k) {
    const std::size_t n = alpha.size();
    const std::size_t q = f.order();
    const std::uint32_t target = f.neg_v(f.inv_v(eta.to_int()));

    const std::size_t stride_c = q;
    const std::size_t stride_i = (k + 1) * q;
    std::vector<std::uint8_t> can((n + 1) * stride_i, 0);
    can[n * stride_i + 0 * stride_c + 0] = 1;

    std::vector<std::uint32_t> shifted(q);
    for (std::size_t i = n; i-- > 0;) {
        const std::uint32_t a = alpha[i].to_int();
        for (std::size_t s = 0; s < q; ++s) shifted[s] = f.sub_v(static_cast<std::uint32_t>(s), a);
        const std::uint8_t* next = &can[(i + 1) * stride_i];
        std::uint8_t* cur = &can[i * stride_i];
        const std::size_t cmax = std::min(k, n - i);
        for (std::size_t c = 0; c <= cmax; ++c) {
            const std::uint8_t* skip = next + c * stride_c;
            const std::uint8_t* take = c > 0 ? next + (c - 1) * stride_c : nullptr;
            std::uint8_t* out = cur + c * stride_c;
            for (std::size_t s = 0; s < q; ++s)
                out[s] = static_cast<std::uint8_t>(skip[s] | (take != nullptr && take[shifted[s]]));
        }
    }

    if (!can[0 * stride_i + k * stride_c + target]) return {CodeKind::Mds, std::nullopt};

    std::vector<std::size_t> witness;
    std::uint32_t s = target;
    std::size_t c = k;
    for (std::size_t i = 0; i < n && c > 0; ++i) {
        const std::uint32_t rest = f.sub_v(s, alpha[i].to_int());
        if (can[(i + 1) * stride_i + (c - 1) * stride_c + rest]) {
            witness.push_back(i);
            s = rest;
            --c;
        }
    }
    return {CodeKind::Nmds, std::move(witness)};
}

} // namespace

CodeSpec CodeSpec::make(std::shared_ptr<const Field> field, std::size_t n, std::size_t k, std::size_t hook,
                        FieldElement eta, std::vector<FieldElement> alpha) {
    if (!field) throw Error(Errc::BadDimensions, "null field");
    const Field& f = *field;
    if (&eta.field() != &f) throw Error(Errc::FieldMismatch, "eta from a different field");
    for (const auto& a : alpha)
        if (&a.field() != &f) throw Error(Errc::FieldMismatch, "evaluation point from a different field");

    if (k < 1 || k >= n) throw Error(Errc::BadDimensions, "need 1 <= k < n");
    if (n > f.order()) throw Error(Errc::BadDimensions, "length exceeds field order");
    if (alpha.size() != n) throw Error(Errc::BadDimensions, "expected n evaluation points");
    if (hook >= k) throw Error(Errc::HookOutOfRange, "hook must be below k");
    if (eta.is_zero()) throw Error(Errc::ZeroEta, "twist coefficient must be nonzero");

    std::unordered_set<std::uint32_t> seen;
    for (const auto& a : alpha)
        if (!seen.insert(a.to_int()).second)
            throw Error(Errc::DuplicateAlpha, "evaluation points must be pairwise distinct");

    Classification cls = classify_impl(f, alpha, eta, k);
    return CodeSpec(std::move(field), n, k, hook, std::move(eta), std::move(alpha), std::move(cls));
}

TwistedPolynomial twisted(const CodeSpec& code, std::vector<FieldElement> message) {
    if (message.size() != code.dimension()) throw Error(Errc::LengthMismatch, "message length must equal k");
    for (const auto& a : message)
        if (&a.field() != &code.field()) throw Error(Errc::FieldMismatch, "message symbol from a different field");
    return {&code, std::move(message)};
}

Polynomial expand(const TwistedPolynomial& tp) {
    const CodeSpec& code = *tp.code;
    const Field& f = code.field();
    std::vector<FieldElement> coeffs(code.dimension() + 1, f.zero());
    for (std::size_t i = 0; i < tp.message.size(); ++i) coeffs[i] = tp.message[i];
    coeffs[code.dimension()] = code.eta() * tp.message[code.hook()];
    return {f, std::move(coeffs)};
}

std::vector<FieldElement> encode(const CodeSpec& code, std::span<const FieldElement> message) {
    const Polynomial fpoly = expand(twisted(code, {message.begin(), message.end()}));
    std::vector<FieldElement> word;
    word.reserve(code.length());
    for (const auto& a : code.alpha()) word.push_back(fpoly.eval(a));
    return word;
}

Matrix generator_matrix(const CodeSpec& code) {
    const Field& f = code.field();
    const std::size_t n = code.length(), k = code.dimension();
    Matrix g(f, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t a = code.alpha()[j].to_int();
        std::uint32_t power = 1;
        std::vector<std::uint32_t> pows(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            pows[i] = power;
            power = f.mul_v(power, a);
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t entry = pows[i];
            if (i == code.hook()) entry = f.add_v(entry, f.mul_v(code.eta().to_int(), pows[k]));
            g.set(i, j, FieldElement(f, entry));
        }
    }
    return g;
}

Classification classify(const CodeSpec& code) { return code.classification(); }

Classification classify_brute_force(const CodeSpec& code) {
    const std::size_t n = code.length(), k = code.dimension();
    if (n > 20) throw Error(Errc::OutOfRange, "brute-force classification is limited to n <= 20");
    const Field& f = code.field();
    const std::uint32_t target = f.neg_v(f.inv_v(code.eta().to_int()));

    // lexicographic k-combinations of {0..n-1}
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t s = 0;
        for (std::size_t i : idx) s = f.add_v(s, code.alpha()[i].to_int());
        if (s == target) return {CodeKind::Nmds, idx};

        std::size_t pos = k;
        while (pos-- > 0) {
            if (idx[pos] != pos + n - k) break;
            if (pos == 0) return {CodeKind::Mds, std::nullopt};
        }
        ++idx[pos];
        for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

} // namespace tgrs
