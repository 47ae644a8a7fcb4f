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
 * @file gf.hpp
 * @brief Exact arithmetic in GF(p^m), constructed as F_p[z]/(modulus).
 *
 * A Field is defined by a prime characteristic p, an extension degree m and a
 * monic irreducible modulus of degree m over F_p. Elements are residue
 * classes of polynomials in z; the canonical representative has m base-p
 * digits, digit i being the coefficient of z^i. The canonical integer
 * encoding of an element is sum(digits[i] * p^i), a bijection with [0, q)
 * where q = p^m. All external text/wire representations use that integer.
 *
 * If no modulus is supplied, the lexicographically smallest monic
 * irreducible of degree m is selected by exhaustive search (coefficient
 * tuples compared low-to-high as base-p integers), so field construction is
 * deterministic and reproducible. Supplied moduli are verified irreducible
 * by trial division. For m = 1 the modulus is z by convention and
 * arithmetic is plain arithmetic mod p.
 *
 * Fields with m > 1 and q <= 1024 precompute add/mul/neg/inv tables at
 * construction; larger fields fall back to digit-polynomial arithmetic per
 * operation. Inverses are computed with the extended Euclidean algorithm on
 * digit polynomials (the tables memoize its results).
 *
 * Field objects are immutable after construction and hold no mutable state;
 * elements are immutable values. Everything here is safe for unrestricted
 * concurrent use. A Field must outlive the elements, polynomials, matrices
 * and codes built on top of it; Field::make returns a shared_ptr so owners
 * can keep it alive.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgrs/errors.hpp"

namespace tgrs {

class FieldElement;

class Field {
  public:
    /// Builds GF(p^m). Throws NotPrime, DegreeMismatch, OutOfRange (q too
    /// large for this library, or a modulus coefficient >= p) or Reducible.
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m,
                                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }

    /// Modulus coefficients, ascending degree, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element from its canonical integer. Throws OutOfRange if v >= q.
    FieldElement from_int(std::uint64_t v) const;

    /// Element from base-p digits (ascending powers of z, at most m of them).
    FieldElement from_digits(const std::vector<std::uint32_t>& digits) const;

    /// "GF(9)" etc., for diagnostics.
    std::string label() const;

    // Arithmetic on canonical integer values. These are the single source of
    // truth for field arithmetic; FieldElement operators forward here.
    std::uint32_t add_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_v(std::uint32_t a) const;
    std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_v(std::uint32_t a) const; // throws DivisionByZero on 0
    std::uint32_t pow_v(std::uint32_t a, std::uint64_t e) const;

    std::vector<std::uint32_t> digits_of(std::uint32_t v) const;
    std::uint32_t value_of_digits(const std::vector<std::uint32_t>& digits) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
    void build_tables();
    std::uint32_t mul_digits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_euclid(std::uint32_t a) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    bool tables_ = false;
    std::vector<std::uint16_t> add_tab_;
    std::vector<std::uint16_t> mul_tab_;
    std::vector<std::uint16_t> neg_tab_;
    std::vector<std::uint16_t> inv_tab_;
};

/// An immutable element of a Field. Mixing elements of distinct Field
/// objects throws FieldMismatch, including in comparisons.
class FieldElement {
  public:
    FieldElement(const Field& field, std::uint32_t value) : field_(&field), v_(value) {
        if (v_ >= field.order())
            throw Error(Errc::OutOfRange, "element value " + std::to_string(value) + " not below field order");
    }

    const Field& field() const noexcept { return *field_; }
    std::uint32_t to_int() const noexcept { return v_; }
    std::vector<std::uint32_t> digits() const { return field_->digits_of(v_); }

    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {check(o), field_->add_v(v_, o.v_)}; }
    FieldElement operator-(const FieldElement& o) const { return {check(o), field_->sub_v(v_, o.v_)}; }
    FieldElement operator*(const FieldElement& o) const { return {check(o), field_->mul_v(v_, o.v_)}; }
    FieldElement operator/(const FieldElement& o) const { return {check(o), field_->mul_v(v_, field_->inv_v(o.v_))}; }
    FieldElement operator-() const { return {*field_, field_->neg_v(v_)}; }

    FieldElement inv() const { return {*field_, field_->inv_v(v_)}; }
    FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow_v(v_, e)}; }

    bool operator==(const FieldElement& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Polynomial-in-z rendering, e.g. "2z+1"; plain integer when m = 1.
    std::string pretty() const;

  private:
    const Field& check(const FieldElement& o) const {
        if (field_ != o.field_)
            throw Error(Errc::FieldMismatch, "operands belong to different fields");
        return *field_;
    }

    const Field* field_;
    std::uint32_t v_;
};

inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

} // namespace tgrs
