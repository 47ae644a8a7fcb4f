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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tgrs/decoder.hpp"

#include "support.hpp"

using testsupport::elems;
using testsupport::hamming;
using testsupport::ints;
using tgrs::CodeSpec;
using tgrs::DecodeOutcome;
using tgrs::DecodeParams;
using tgrs::DecodeVariant;
using tgrs::Error;
using tgrs::Field;
using tgrs::FieldElement;
using tgrs::Polynomial;

namespace {

// Splits a kernel vector into its numerator/denominator pair.
std::pair<Polynomial, Polynomial> split(const Field& f, const std::vector<FieldElement>& z,
                                        const DecodeParams& params) {
    return {Polynomial(f, {z.begin(), z.begin() + static_cast<std::ptrdiff_t>(params.max_num_degree) + 1}),
            Polynomial(f, {z.begin() + static_cast<std::ptrdiff_t>(params.max_num_degree) + 1, z.end()})};
}

} // namespace

TEST_CASE("degree and radius tables") {
    const DecodeParams p31 = params_for(testsupport::code_f9_n5());
    CHECK(p31.variant == DecodeVariant::MdsOdd);
    CHECK(p31.max_den_degree == 1);
    CHECK(p31.max_num_degree == 3);
    CHECK(p31.unknowns == 6);
    CHECK(p31.radius == 1);

    const DecodeParams p32 = params_for(testsupport::code_f16_n8());
    CHECK(p32.variant == DecodeVariant::MdsEven);
    CHECK(p32.max_den_degree == 3);
    CHECK(p32.max_num_degree == 5);
    CHECK(p32.unknowns == 10);
    CHECK(p32.radius == 2);

    const DecodeParams p41 = params_for(testsupport::code_f7_n7());
    CHECK(p41.variant == DecodeVariant::Nmds);
    CHECK(p41.max_den_degree == 2);
    CHECK(p41.max_num_degree == 4);
    CHECK(p41.unknowns == 8);
    CHECK(p41.radius == 2);
}

TEST_CASE("build_system reproduces the worked F_9 matrix") {
    const CodeSpec code = testsupport::code_f9_n5();
    const auto& f = code.field();
    const auto y = elems(f, {1, 6, 7, 7, 8});
    const tgrs::Matrix a = build_system(code, y, params_for(code));

    const std::vector<std::vector<std::uint32_t>> expected = {
        {1, 0, 0, 0, 2, 0}, {1, 1, 1, 1, 3, 3}, {1, 3, 7, 8, 5, 4}, {1, 4, 5, 6, 5, 6}, {1, 6, 7, 4, 4, 2},
    };
    REQUIRE(a.rows() == 5);
    REQUIRE(a.cols() == 6);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 6; ++c) CHECK(a.at(r, c).to_int() == expected[r][c]);
}

TEST_CASE("build_system edge shapes") {
    const CodeSpec code = testsupport::code_f9_n5();
    const auto& f = code.field();
    const DecodeParams params = params_for(code);

    // all-zero received word zeroes the denominator block
    const auto a0 = build_system(code, elems(f, {0, 0, 0, 0, 0}), params);
    for (std::size_t r = 0; r < a0.rows(); ++r)
        for (std::size_t c = params.max_num_degree + 1; c < a0.cols(); ++c) CHECK(a0.at(r, c).is_zero());

    // each row dotted with a true (N, D) solution vanishes: y = codeword,
    // N = f_msg * D for any D; take D = 1
    const auto msg = elems(f, {1, 4});
    const auto word = tgrs::encode(code, msg);
    const auto sys = build_system(code, word, params);
    const tgrs::Polynomial fx = expand(twisted(code, msg));
    std::vector<FieldElement> solution(params.unknowns, f.zero());
    for (std::size_t i = 0; i < params.max_num_degree + 1; ++i) solution[i] = fx.coeff(i);
    solution[params.max_num_degree + 1] = f.one(); // D = 1
    for (const auto& e : mat_vec(sys, solution)) CHECK(e.is_zero());

    CHECK_THROWS_AS(build_system(code, elems(f, {1, 2}), params), Error);
    auto other = Field::make(7, 1);
    std::vector<FieldElement> bad(5, other->zero());
    CHECK_THROWS_AS(build_system(code, bad, params), Error);
}

TEST_CASE("golden decode: F_9, n-k odd") {
    const CodeSpec code = testsupport::code_f9_n5();
    const auto& f = code.field();

    const DecodeOutcome out = decode(code, elems(f, {1, 6, 7, 7, 8}));
    REQUIRE(out.ok());
    CHECK(ints(out.codeword) == std::vector<std::uint32_t>{1, 8, 7, 7, 8});
    CHECK(ints(out.message) == std::vector<std::uint32_t>{1, 4});
    CHECK(out.error_positions == std::vector<std::size_t>{1});
    CHECK(ints(out.error_values) == std::vector<std::uint32_t>{1}); // 2z - (2z+2) = 1

    // a different single corruption of the same codeword
    const DecodeOutcome alt = decode(code, elems(f, {1, 3, 7, 7, 8}));
    REQUIRE(alt.ok());
    CHECK(ints(alt.codeword) == std::vector<std::uint32_t>{1, 8, 7, 7, 8});
    CHECK(alt.error_positions == std::vector<std::size_t>{1});
}

TEST_CASE("golden decode: F_16, n-k even") {
    const CodeSpec code = testsupport::code_f16_n8();
    const auto& f = code.field();
    const DecodeOutcome out = decode(code, elems(f, {1, 6, 6, 1, 5, 3, 2, 4}));
    REQUIRE(out.ok());
    CHECK(ints(out.codeword) == std::vector<std::uint32_t>{1, 7, 6, 0, 5, 3, 2, 4});
    CHECK(ints(out.message) == std::vector<std::uint32_t>{1, 2});
    CHECK(out.error_positions == std::vector<std::size_t>{1, 3});

    // the 8x10 interpolation system has a 2-dimensional kernel
    CHECK(null_space(build_system(code, elems(f, {1, 6, 6, 1, 5, 3, 2, 4}), params_for(code))).size() == 2);
}

TEST_CASE("golden decode: F_7, NMDS") {
    const CodeSpec code = testsupport::code_f7_n7();
    const auto& f = code.field();
    const DecodeOutcome out = decode(code, elems(f, {1, 1, 0, 0, 3, 3, 0}));
    REQUIRE(out.ok());
    CHECK(ints(out.codeword) == std::vector<std::uint32_t>{1, 6, 1, 0, 3, 3, 0});
    CHECK(ints(out.message) == std::vector<std::uint32_t>{1, 3});
    CHECK(out.error_positions == std::vector<std::size_t>{1, 2});
    CHECK(ints(out.error_values) == std::vector<std::uint32_t>{2, 6});
}

TEST_CASE("uncorrupted words decode with zero errors") {
    const CodeSpec code = testsupport::code_f16_n8();
    const auto& f = code.field();
    tgrs::SplitMix64 rng(0xC0DE);
    for (std::size_t t = 0; t < 200; ++t) {
        std::vector<FieldElement> msg;
        for (std::size_t i = 0; i < code.dimension(); ++i)
            msg.emplace_back(f, static_cast<std::uint32_t>(rng.below(f.order())));
        const auto word = tgrs::encode(code, msg);
        const DecodeOutcome out = decode(code, word);
        REQUIRE(out.ok());
        CHECK(out.codeword == word);
        CHECK(out.message == msg);
        CHECK(out.error_positions.empty());
    }
}

TEST_CASE("every kernel vector yields the same quotient inside the radius") {
    std::vector<CodeSpec> codes;
    codes.push_back(testsupport::code_f9_n5());
    codes.push_back(testsupport::code_f16_n8());
    codes.push_back(testsupport::code_f7_n7());
    tgrs::SplitMix64 sampler(0x9A9A);
    codes.push_back(testsupport::sample_mds_code(sampler, 14, 5));
    codes.push_back(testsupport::sample_nmds_code(sampler, Field::make(2, 5), 20, 7));

    for (const auto& code : codes) {
        const auto& f = code.field();
        const DecodeParams params = params_for(code);
        tgrs::SplitMix64 rng(0xFACE + code.length());
        for (std::size_t t = 0; t < 60; ++t) {
            std::vector<FieldElement> msg;
            for (std::size_t i = 0; i < code.dimension(); ++i)
                msg.emplace_back(f, static_cast<std::uint32_t>(rng.below(f.order())));
            const auto word = tgrs::encode(code, msg);
            const std::size_t w = rng.below(params.radius + 1);
            auto [rx, positions] = tgrs::inject(word, w, rng);

            const auto basis = null_space(build_system(code, rx, params));
            REQUIRE(!basis.empty());
            const Polynomial expected = expand(twisted(code, msg));
            for (const auto& z : basis) {
                const auto [num, den] = split(f, z, params);
                REQUIRE(!den.is_zero());
                const auto [quot, rem] = divmod(num, den);
                CHECK(rem.is_zero());
                CHECK(quot == expected);
                // the denominator vanishes on every corrupted position
                for (std::size_t pos : positions) CHECK(den.eval(code.alpha()[pos]).is_zero());
            }
        }
    }
}

TEST_CASE("round-trip at the full radius, all three variants") {
    tgrs::SplitMix64 sampler(0xBEEF);

    std::vector<CodeSpec> odd_codes, even_codes, nmds_codes;
    for (std::size_t i = 0; i < 5; ++i) {
        // n-k odd
        while (true) {
            const std::size_t n = 6 + sampler.below(18);
            const std::size_t k = 1 + sampler.below(n - 2);
            if ((n - k) % 2 == 1) {
                odd_codes.push_back(testsupport::sample_mds_code(sampler, n, k));
                break;
            }
        }
        while (true) {
            const std::size_t n = 6 + sampler.below(18);
            const std::size_t k = 1 + sampler.below(n - 2);
            if ((n - k) % 2 == 0 && n - k >= 4) {
                even_codes.push_back(testsupport::sample_mds_code(sampler, n, k));
                break;
            }
        }
        const std::size_t n = 8 + sampler.below(16);
        const std::size_t k = 1 + sampler.below(n - 3);
        nmds_codes.push_back(testsupport::sample_nmds_code(sampler, Field::make(2, 5), n, k));
    }

    const auto drill = [](const std::vector<CodeSpec>& codes, DecodeVariant expect) {
        std::size_t total = 0;
        for (const auto& code : codes) {
            const DecodeParams params = params_for(code);
            REQUIRE(params.variant == expect);
            const auto& f = code.field();
            tgrs::SplitMix64 rng(0x7007 + code.length() * 31 + code.dimension());
            for (std::size_t t = 0; t < 200; ++t, ++total) {
                std::vector<FieldElement> msg;
                for (std::size_t i = 0; i < code.dimension(); ++i)
                    msg.emplace_back(f, static_cast<std::uint32_t>(rng.below(f.order())));
                const auto word = tgrs::encode(code, msg);
                auto [rx, positions] = tgrs::inject(word, params.radius, rng);
                const DecodeOutcome out = decode(code, rx);
                REQUIRE(out.ok());
                CHECK(out.codeword == word);
                CHECK(out.message == msg);
                CHECK(out.error_positions == positions);
            }
        }
        CHECK(total >= 1000);
    };
    drill(odd_codes, DecodeVariant::MdsOdd);
    drill(even_codes, DecodeVariant::MdsEven);
    drill(nmds_codes, DecodeVariant::Nmds);
}

TEST_CASE("success outcomes are always sound, even on junk input") {
    std::vector<CodeSpec> codes;
    codes.push_back(testsupport::code_f9_n5());
    codes.push_back(testsupport::code_f16_n8());
    codes.push_back(testsupport::code_f7_n7());
    for (const auto& code : codes) {
        const auto& f = code.field();
        const DecodeParams params = params_for(code);
        tgrs::SplitMix64 rng(0xD1CE + code.length());
        for (std::size_t t = 0; t < 400; ++t) {
            std::vector<FieldElement> y;
            for (std::size_t j = 0; j < code.length(); ++j)
                y.emplace_back(f, static_cast<std::uint32_t>(rng.below(f.order())));
            const DecodeOutcome out = decode(code, y); // must not throw
            if (!out.ok()) continue;
            CHECK(hamming(out.codeword, y) <= params.radius);
            CHECK(out.codeword == tgrs::encode(code, out.message));
            CHECK(hamming(out.codeword, y) == out.error_positions.size());
        }
    }
}

TEST_CASE("beyond the radius the decoder never invents a far codeword") {
    // exhaustive: every codeword, every error pattern of weight radius+1
    std::vector<CodeSpec> codes;
    codes.push_back(testsupport::code_f9_n5()); // tau = 1
    {
        // n-k = 2 MDS code over F_9: tau = 0
        auto f9 = testsupport::code_f9_n5().field_ptr();
        codes.push_back(CodeSpec::make(f9, 4, 2, 0, f9->from_int(3), elems(*f9, {0, 1, 3, 4})));
    }

    for (const auto& code : codes) {
        const auto& f = code.field();
        const DecodeParams params = params_for(code);
        const auto codewords = testsupport::all_codewords(code);
        const std::size_t w = params.radius + 1;
        const auto subsets = testsupport::combinations(code.length(), w);

        for (const auto& word : codewords) {
            for (const auto& pos : subsets) {
                std::vector<std::uint32_t> deltas(w, 1);
                while (true) {
                    auto y = word;
                    for (std::size_t i = 0; i < w; ++i) y[pos[i]] = y[pos[i]] + FieldElement(f, deltas[i]);
                    const DecodeOutcome out = decode(code, y);
                    if (out.ok()) {
                        CHECK(hamming(out.codeword, y) <= params.radius);
                        CHECK(testsupport::nearest_codeword_distance(codewords, y) <= params.radius);
                    }
                    std::size_t i = 0;
                    while (i < w && ++deltas[i] == f.order()) deltas[i++] = 1;
                    if (i == w) break;
                }
            }
        }
    }
}

TEST_CASE("extreme dimensions: k=1 and k=n-1") {
    auto f = Field::make(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    tgrs::SplitMix64 rng(0xED6E);

    std::vector<FieldElement> alpha;
    for (std::uint32_t v = 0; v < 9; ++v) alpha.emplace_back(*f, v);

    // k=1: every message symbol is also the hook symbol
    const CodeSpec thin = CodeSpec::make(f, 9, 1, 0, f->from_int(5), alpha);
    const DecodeParams pthin = params_for(thin);
    for (std::size_t t = 0; t < 50; ++t) {
        const std::vector<FieldElement> msg{FieldElement(*f, static_cast<std::uint32_t>(rng.below(16)))};
        const auto word = tgrs::encode(thin, msg);
        auto [rx, positions] = tgrs::inject(word, pthin.radius, rng);
        const DecodeOutcome out = decode(thin, rx);
        REQUIRE(out.ok());
        CHECK(out.codeword == word);
    }

    // k=n-1: radius 0, so only exact codewords come back as Success
    const CodeSpec fat = CodeSpec::make(f, 9, 8, 3, f->from_int(7), alpha);
    const DecodeParams pfat = params_for(fat);
    CHECK(pfat.radius == 0);
    for (std::size_t t = 0; t < 50; ++t) {
        std::vector<FieldElement> msg;
        for (std::size_t i = 0; i < 8; ++i) msg.emplace_back(*f, static_cast<std::uint32_t>(rng.below(16)));
        const auto word = tgrs::encode(fat, msg);
        const DecodeOutcome out = decode(fat, word);
        REQUIRE(out.ok());
        CHECK(out.codeword == word);
        CHECK(out.message == msg);
    }
}

TEST_CASE("decode input validation") {
    const CodeSpec code = testsupport::code_f9_n5();
    CHECK_THROWS_AS(decode(code, elems(code.field(), {1, 2, 3})), Error);
    auto f7 = Field::make(7, 1);
    std::vector<FieldElement> wrong(5, f7->zero());
    CHECK_THROWS_AS(decode(code, wrong), Error);
}
