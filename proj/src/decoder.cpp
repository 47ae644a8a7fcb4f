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

#include "tgrs/decoder.hpp"

#include <stdexcept>

namespace tgrs {

const char* variant_name(DecodeVariant v) {
    switch (v) {
        case DecodeVariant::MdsOdd: return "mds_odd";
        case DecodeVariant::MdsEven: return "mds_even";
        case DecodeVariant::Nmds: return "nmds";
    }
    return "unknown";
}

const char* status_name(DecodeOutcome::Status s) {
    switch (s) {
        case DecodeOutcome::Status::Success: return "success";
        case DecodeOutcome::Status::NonzeroRemainder: return "nonzero_remainder";
        case DecodeOutcome::Status::DegreeTooHigh: return "degree_too_high";
        case DecodeOutcome::Status::NotTwistedForm: return "not_twisted_form";
        case DecodeOutcome::Status::DistanceExceedsRadius: return "distance_exceeds_radius";
    }
    return "unknown";
}

DecodeParams params_for(const CodeSpec& code) {
    const std::size_t n = code.length(), k = code.dimension();
    const std::size_t nk = n - k;
    DecodeParams p{};
    if (code.classification().kind == CodeKind::Mds) {
        if (nk % 2 == 1) {
            p.variant = DecodeVariant::MdsOdd;
            p.max_den_degree = (nk - 1) / 2;
            p.max_num_degree = (n + k - 1) / 2;
            p.radius = (nk - 1) / 2;
        } else {
            p.variant = DecodeVariant::MdsEven;
            p.max_den_degree = nk / 2;
            p.max_num_degree = (n + k) / 2;
            p.radius = nk / 2 - 1;
        }
    } else {
        p.variant = DecodeVariant::Nmds;
        p.max_den_degree = (nk - 1) / 2;
        p.max_num_degree = k + nk / 2; // k + ceil((n-k-1)/2)
        p.radius = (nk - 1) / 2;
    }
    p.unknowns = p.max_num_degree + p.max_den_degree + 2;
    return p;
}

Matrix build_system(const CodeSpec& code, std::span<const FieldElement> received, const DecodeParams& params) {
    const Field& f = code.field();
    const std::size_t n = code.length();
    if (received.size() != n) throw Error(Errc::LengthMismatch, "received word length must equal n");
    for (const auto& y : received)
        if (&y.field() != &f) throw Error(Errc::FieldMismatch, "received symbol from a different field");

    Matrix a(f, n, params.unknowns);
    auto v = a.values();
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t alpha = code.alpha()[j].to_int();
        const std::uint32_t neg_y = f.neg_v(received[j].to_int());
        std::uint32_t power = 1;
        std::uint32_t* row = v.data() + j * params.unknowns;
        for (std::size_t i = 0; i <= std::max(params.max_num_degree, params.max_den_degree); ++i) {
            if (i <= params.max_num_degree) row[i] = power;
            if (i <= params.max_den_degree) row[params.max_num_degree + 1 + i] = f.mul_v(neg_y, power);
            power = f.mul_v(power, alpha);
        }
    }
    return a;
}

DecodeOutcome decode(const CodeSpec& code, std::span<const FieldElement> received) {
    const Field& f = code.field();
    const std::size_t n = code.length(), k = code.dimension();
    const DecodeParams params = params_for(code);

    const Matrix a = build_system(code, received, params);
    const auto basis = null_space(a);
    if (basis.empty()) throw std::logic_error("interpolation system with trivial kernel");

    const auto& z = basis.front();
    const Polynomial numerator(f, {z.begin(), z.begin() + params.max_num_degree + 1});
    const Polynomial denominator(f, {z.begin() + params.max_num_degree + 1, z.end()});
    if (denominator.is_zero()) throw std::logic_error("zero denominator in a nonzero kernel vector");

    auto [quotient, remainder] = divmod(numerator, denominator);
    if (!remainder.is_zero()) return {DecodeOutcome::Status::NonzeroRemainder, {}, {}, {}, {}};
    if (!quotient.is_zero() && quotient.deg() > k) return {DecodeOutcome::Status::DegreeTooHigh, {}, {}, {}, {}};
    if (quotient.coeff(k) != code.eta() * quotient.coeff(code.hook()))
        return {DecodeOutcome::Status::NotTwistedForm, {}, {}, {}, {}};

    std::vector<FieldElement> message;
    message.reserve(k);
    for (std::size_t i = 0; i < k; ++i) message.push_back(quotient.coeff(i));

    std::vector<FieldElement> codeword = encode(code, message);
    std::vector<std::size_t> positions;
    std::vector<FieldElement> values;
    for (std::size_t j = 0; j < n; ++j) {
        if (codeword[j] != received[j]) {
            positions.push_back(j);
            values.push_back(received[j] - codeword[j]);
        }
    }
    if (positions.size() > params.radius) return {DecodeOutcome::Status::DistanceExceedsRadius, {}, {}, {}, {}};

    return {DecodeOutcome::Status::Success, std::move(codeword), std::move(message), std::move(positions),
            std::move(values)};
}

} // namespace tgrs
