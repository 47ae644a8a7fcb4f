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
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over a finite field.
 *
 * rref() is fully deterministic: arithmetic is exact, so no magnitude
 * pivoting is needed; at each column the pivot row is the first remaining
 * row (top-down) with a nonzero entry. null_space() builds the standard
 * free-variable basis (free variable set to one, other free variables zero,
 * pivot variables back-substituted), ordered by ascending free-column
 * index. Two calls on equal inputs produce identical results entry for
 * entry.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs {

/// Dense row-major matrix over one finite field.
class Matrix {
  public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const { return {*field_, v_[index(r, c)]}; }

    void set(std::size_t r, std::size_t c, const FieldElement& e) {
        if (&e.field() != field_) throw Error(Errc::FieldMismatch, "entry from a different field");
        v_[index(r, c)] = e.to_int();
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }

    /// Raw canonical values, row-major. Internal fast path for elimination.
    std::span<const std::uint32_t> values() const noexcept { return v_; }
    std::span<std::uint32_t> values() noexcept { return v_; }

  private:
    std::size_t index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw Error(Errc::DimensionMismatch, "matrix index out of range");
        return r * cols_ + c;
    }

    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> v_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols; // strictly increasing
    std::size_t rank;
};

/// Reduced row echelon form with deterministic first-nonzero pivoting.
RrefResult rref(const Matrix& a);

/// Basis of {z : A z = 0}; empty when the kernel is trivial.
std::vector<std::vector<FieldElement>> null_space(const Matrix& a);

/// Standard matrix-vector product. Throws DimensionMismatch.
std::vector<FieldElement> mat_vec(const Matrix& a, std::span<const FieldElement> z);

} // namespace tgrs
