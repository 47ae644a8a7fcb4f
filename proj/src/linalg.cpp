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

#include "tgrs/linalg.hpp"

#include <algorithm>

namespace tgrs {

RrefResult rref(const Matrix& a) {
    const Field& f = a.field();
    Matrix r = a;
    auto v = r.values();
    const std::size_t rows = r.rows(), cols = r.cols();
    std::vector<std::size_t> pivots;

    std::size_t pr = 0; // next pivot row
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t hit = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (v[i * cols + col] != 0) {
                hit = i;
                break;
            }
        }
        if (hit == rows) continue;
        if (hit != pr)
            std::swap_ranges(v.begin() + hit * cols, v.begin() + (hit + 1) * cols, v.begin() + pr * cols);

        // scale pivot row to a leading one
        const std::uint32_t piv_inv = f.inv_v(v[pr * cols + col]);
        for (std::size_t c = col; c < cols; ++c)
            v[pr * cols + c] = f.mul_v(v[pr * cols + c], piv_inv);

        // clear the column everywhere else; entries left of col are already 0
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const std::uint32_t factor = v[i * cols + col];
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                v[i * cols + c] = f.sub_v(v[i * cols + c], f.mul_v(factor, v[pr * cols + c]));
        }
        pivots.push_back(col);
        ++pr;
    }
    const std::size_t rank = pivots.size();
    return {std::move(r), std::move(pivots), rank};
}

std::vector<std::vector<FieldElement>> null_space(const Matrix& a) {
    const Field& f = a.field();
    const RrefResult res = rref(a);
    const auto v = res.reduced.values();
    const std::size_t cols = a.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : res.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> z(cols, f.zero());
        z[free] = f.one();
        for (std::size_t r = 0; r < res.pivot_cols.size(); ++r) {
            const std::uint32_t entry = v[r * cols + free];
            if (entry != 0) z[res.pivot_cols[r]] = FieldElement(f, f.neg_v(entry));
        }
        basis.push_back(std::move(z));
    }
    return basis;
}

std::vector<FieldElement> mat_vec(const Matrix& a, std::span<const FieldElement> z) {
    if (z.size() != a.cols()) throw Error(Errc::DimensionMismatch, "vector length does not match column count");
    const Field& f = a.field();
    for (const auto& e : z)
        if (&e.field() != &f) throw Error(Errc::FieldMismatch, "vector entry from a different field");
    const auto v = a.values();
    std::vector<FieldElement> out;
    out.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            acc = f.add_v(acc, f.mul_v(v[r * a.cols() + c], z[c].to_int()));
        out.emplace_back(f, acc);
    }
    return out;
}

} // namespace tgrs
