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

#include "tgrs/poly.hpp"

#include <algorithm>

namespace tgrs {

Polynomial::Polynomial(const Field& field, std::vector<FieldElement> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (&c.field() != field_) throw Error(Errc::FieldMismatch, "coefficient from a different field");
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::deg() const {
    if (is_zero()) throw Error(Errc::OutOfRange, "degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

const Field& Polynomial::check(const Polynomial& o) const {
    if (field_ != o.field_) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    return *field_;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    if (&x.field() != field_) throw Error(Errc::FieldMismatch, "evaluation point from a different field");
    FieldElement acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check(o);
    std::vector<FieldElement> out;
    out.reserve(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i)
        out.push_back(coeff(i) + o.coeff(i));
    return {*field_, std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check(o);
    std::vector<FieldElement> out;
    out.reserve(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i)
        out.push_back(coeff(i) - o.coeff(i));
    return {*field_, std::move(out)};
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return Polynomial(*field_);
    std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return {*field_, std::move(out)};
}

bool Polynomial::operator==(const Polynomial& o) const {
    check(o);
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (&num.field() != &den.field()) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const Field& f = num.field();
    if (num.is_zero() || num.deg() < den.deg()) return {Polynomial(f), num};

    std::vector<FieldElement> rem = num.coeffs();
    const std::size_t dd = den.deg();
    const FieldElement lead_inv = den.coeff(dd).inv();
    std::vector<FieldElement> quot(rem.size() - dd, f.zero());
    for (std::size_t pos = quot.size(); pos-- > 0;) {
        const FieldElement c = rem[pos + dd] * lead_inv;
        if (c.is_zero()) continue;
        quot[pos] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[pos + j] = rem[pos + j] - c * den.coeff(j);
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dd), rem.end());
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

} // namespace tgrs
