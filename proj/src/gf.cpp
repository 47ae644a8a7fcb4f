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

#include "tgrs/gf.hpp"

#include <algorithm>

namespace tgrs {

namespace {

constexpr std::uint32_t kTableMaxQ = 1024;
constexpr std::uint64_t kMaxQ = 1u << 30; // desk-scale cap, keeps value math in 64 bits

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mod_inv_int(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers; a != 0 mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// Dense polynomials over F_p with uint32 coefficients, ascending degree.
// These back the element representation; they are internal to this file.
using Dp = std::vector<std::uint32_t>;

void dp_trim(Dp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dp dp_mul(const Dp& a, const Dp& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Dp out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    dp_trim(out);
    return out;
}

// num = q*den + r with deg r < deg den; den nonzero.
std::pair<Dp, Dp> dp_divmod(Dp num, const Dp& den, std::uint32_t p) {
    dp_trim(num);
    if (num.size() < den.size()) return {{}, std::move(num)};
    const std::uint32_t lead_inv = mod_inv_int(den.back(), p);
    Dp quot(num.size() - den.size() + 1, 0);
    for (std::size_t pos = quot.size(); pos-- > 0;) {
        const std::uint32_t lead = num[pos + den.size() - 1];
        const std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(lead) * lead_inv % p);
        if (c == 0) continue;
        quot[pos] = c;
        for (std::size_t j = 0; j < den.size(); ++j) {
            const std::uint64_t sub = static_cast<std::uint64_t>(c) * den[j] % p;
            std::uint32_t& tgt = num[pos + j];
            tgt = static_cast<std::uint32_t>((tgt + p - sub) % p);
        }
    }
    num.resize(den.size() - 1);
    dp_trim(num);
    dp_trim(quot);
    return {std::move(quot), std::move(num)};
}

// Trial division by every monic polynomial of degree 1..m/2.
bool dp_irreducible(const Dp& f, std::uint32_t p, std::uint32_t m) {
    if (m == 1) return true;
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t combos = 1;
        for (std::uint32_t i = 0; i < d; ++i) combos *= p;
        for (std::uint64_t c = 0; c < combos; ++c) {
            Dp g(d + 1, 0);
            std::uint64_t rem = c;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rem % p);
                rem /= p;
            }
            g[d] = 1;
            if (dp_divmod(f, g, p).second.empty()) return false;
        }
    }
    return true;
}

} // namespace

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::Reducible: return "Reducible";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::DuplicateAlpha: return "DuplicateAlpha";
        case Errc::HookOutOfRange: return "HookOutOfRange";
        case Errc::ZeroEta: return "ZeroEta";
        case Errc::BadDimensions: return "BadDimensions";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::WeightOutOfRange: return "WeightOutOfRange";
        case Errc::InsufficientField: return "InsufficientField";
        case Errc::BadFormat: return "BadFormat";
    }
    return "Unknown";
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m,
                                         std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw Error(Errc::OutOfRange, "field order exceeds supported size");
    }

    std::vector<std::uint32_t> mod;
    if (modulus) {
        mod = std::move(*modulus);
        if (mod.size() != static_cast<std::size_t>(m) + 1)
            throw Error(Errc::DegreeMismatch, "modulus must have degree m (m+1 coefficients)");
        if (mod.back() != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic");
        for (std::uint32_t c : mod)
            if (c >= p) throw Error(Errc::OutOfRange, "modulus coefficient not below p");
        if (!dp_irreducible(mod, p, m))
            throw Error(Errc::Reducible, "supplied modulus factors over F_" + std::to_string(p));
    } else if (m == 1) {
        mod = {0, 1}; // z, by convention; arithmetic is mod p
    } else {
        // lexicographically smallest monic irreducible, low coefficients read
        // as a base-p integer
        for (std::uint64_t c = 0;; ++c) {
            Dp cand(m + 1, 0);
            std::uint64_t rem = c;
            for (std::uint32_t i = 0; i < m; ++i) {
                cand[i] = static_cast<std::uint32_t>(rem % p);
                rem /= p;
            }
            cand[m] = 1;
            if (dp_irreducible(cand, p, m)) {
                mod = std::move(cand);
                break;
            }
        }
    }

    return std::shared_ptr<const Field>(new Field(p, m, std::move(mod)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    q_ = static_cast<std::uint32_t>(q);
    if (m_ > 1 && q_ <= kTableMaxQ) build_tables();
}

void Field::build_tables() {
    const std::size_t q = q_;
    neg_tab_.resize(q);
    inv_tab_.resize(q);
    add_tab_.resize(q * q);
    mul_tab_.resize(q * q);

    std::vector<std::vector<std::uint32_t>> digs(q);
    for (std::size_t v = 0; v < q; ++v) digs[v] = digits_of(static_cast<std::uint32_t>(v));

    for (std::size_t a = 0; a < q; ++a) {
        std::vector<std::uint32_t> nd(m_);
        for (std::uint32_t i = 0; i < m_; ++i) nd[i] = (p_ - digs[a][i]) % p_;
        neg_tab_[a] = static_cast<std::uint16_t>(value_of_digits(nd));
        for (std::size_t b = a; b < q; ++b) {
            std::vector<std::uint32_t> sd(m_);
            for (std::uint32_t i = 0; i < m_; ++i) sd[i] = (digs[a][i] + digs[b][i]) % p_;
            const std::uint16_t s = static_cast<std::uint16_t>(value_of_digits(sd));
            add_tab_[a * q + b] = s;
            add_tab_[b * q + a] = s;
            const std::uint16_t prod = static_cast<std::uint16_t>(
                mul_digits(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
            mul_tab_[a * q + b] = prod;
            mul_tab_[b * q + a] = prod;
        }
    }
    inv_tab_[0] = 0; // unused
    for (std::size_t a = 1; a < q; ++a) inv_tab_[a] = static_cast<std::uint16_t>(inv_euclid(static_cast<std::uint32_t>(a)));
    tables_ = true;
}

FieldElement Field::from_int(std::uint64_t v) const {
    if (v >= q_)
        throw Error(Errc::OutOfRange, "canonical value " + std::to_string(v) + " not below " + std::to_string(q_));
    return {*this, static_cast<std::uint32_t>(v)};
}

FieldElement Field::from_digits(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() > m_) throw Error(Errc::OutOfRange, "more digits than extension degree");
    for (std::uint32_t d : digits)
        if (d >= p_) throw Error(Errc::OutOfRange, "digit not below characteristic");
    return {*this, value_of_digits(digits)};
}

std::string Field::label() const { return "GF(" + std::to_string(q_) + ")"; }

std::vector<std::uint32_t> Field::digits_of(std::uint32_t v) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

std::uint32_t Field::value_of_digits(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return static_cast<std::uint32_t>(v);
}

std::uint32_t Field::add_v(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (tables_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

std::uint32_t Field::neg_v(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (tables_) return neg_tab_[a];
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

std::uint32_t Field::sub_v(std::uint32_t a, std::uint32_t b) const { return add_v(a, neg_v(b)); }

std::uint32_t Field::mul_v(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    if (tables_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
    return mul_digits(a, b);
}

std::uint32_t Field::mul_digits(std::uint32_t a, std::uint32_t b) const {
    const Dp pa = digits_of(a);
    const Dp pb = digits_of(b);
    Dp prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (pa[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
    }
    // reduce by the monic modulus
    for (std::size_t i = prod.size(); i-- > m_;) {
        const std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < m_; ++j) {
            const std::uint64_t sub = static_cast<std::uint64_t>(c) * modulus_[j] % p_;
            std::uint32_t& tgt = prod[i - m_ + j];
            tgt = static_cast<std::uint32_t>((tgt + p_ - sub) % p_);
        }
    }
    prod.resize(m_);
    std::uint32_t v = 0;
    for (std::size_t i = prod.size(); i-- > 0;) v = v * p_ + prod[i];
    return v;
}

std::uint32_t Field::inv_v(std::uint32_t a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + label());
    if (m_ == 1) return mod_inv_int(a, p_);
    if (tables_) return inv_tab_[a];
    return inv_euclid(a);
}

std::uint32_t Field::inv_euclid(std::uint32_t a) const {
    // extended Euclid on digit polynomials: find u with u*a == gcd (mod modulus)
    Dp r0 = modulus_;
    Dp r1 = digits_of(a);
    dp_trim(r1);
    Dp t0 = {};
    Dp t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = dp_divmod(r0, r1, p_);
        r0 = std::move(r1);
        r1 = std::move(r);
        // t0 - q*t1
        Dp qt = dp_mul(q, t1, p_);
        Dp nt(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            const std::uint32_t x = i < t0.size() ? t0[i] : 0;
            const std::uint32_t y = i < qt.size() ? qt[i] : 0;
            nt[i] = (x + p_ - y) % p_;
        }
        dp_trim(nt);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 is the gcd; irreducible modulus and a != 0 make it a nonzero constant
    const std::uint32_t scale = mod_inv_int(r0.front(), p_);
    Dp u(m_, 0);
    for (std::size_t i = 0; i < t0.size(); ++i)
        u[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t0[i]) * scale % p_);
    return value_of_digits(u);
}

std::uint32_t Field::pow_v(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t base = a, out = 1;
    while (e != 0) {
        if (e & 1) out = mul_v(out, base);
        base = mul_v(base, base);
        e >>= 1;
    }
    return out;
}

std::string FieldElement::pretty() const {
    const Field& f = *field_;
    if (f.degree() == 1) return std::to_string(v_);
    if (v_ == 0) return "0";
    const auto d = digits();
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]);
            out += i == 1 ? "z" : "z^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace tgrs
