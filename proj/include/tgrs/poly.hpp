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
 * @file poly.hpp
 * @brief Dense univariate polynomials over one finite field.
 *
 * Coefficients are stored ascending by degree and kept normalized: the zero
 * polynomial has an empty coefficient vector, any other polynomial has a
 * nonzero last coefficient. deg() is only defined for nonzero polynomials;
 * callers branch on is_zero() first. Values are immutable and safe to share
 * across threads.
 */

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs {

class Polynomial {
  public:
    /// The zero polynomial over `field`.
    explicit Polynomial(const Field& field) : field_(&field) {}

    /// From coefficients, ascending degree; trailing zeros are stripped.
    Polynomial(const Field& field, std::vector<FieldElement> coeffs);

    const Field& field() const noexcept { return *field_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial. Throws OutOfRange on the zero
    /// polynomial; there is no sentinel degree.
    std::size_t deg() const;

    /// Coefficient of x^i; zero beyond the stored degree.
    FieldElement coeff(std::size_t i) const;

    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation.
    FieldElement eval(const FieldElement& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    void normalize();
    const Field& check(const Polynomial& o) const;

    const Field* field_;
    std::vector<FieldElement> coeffs_;
};

/// Long division: num = quotient * den + remainder, deg remainder < deg den.
/// Throws DivisionByZero when den is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

} // namespace tgrs
