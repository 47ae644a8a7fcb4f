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
 * @file decoder.hpp
 * @brief Gaussian-elimination decoding of single-twist TGRS codes.
 *
 * The decoder searches for a numerator/denominator polynomial pair (N, D)
 * satisfying the interpolation identity N(alpha_j) = D(alpha_j) * y_j at
 * every coordinate of the received word y. Those n homogeneous equations in
 * the coefficients of N and D form the system built by build_system(); the
 * degree budget depends on the code's classification and on the parity of
 * n-k:
 *
 *   variant    max deg D        max deg N            unknowns  radius tau
 *   MDS odd    (n-k-1)/2        (n+k-1)/2             n+1      (n-k-1)/2
 *   MDS even   (n-k)/2          (n+k)/2               n+2      (n-k)/2 - 1
 *   NMDS       (n-k-1)/2 (fl)   k + ceil((n-k-1)/2)   n+1      (n-k-1)/2 (fl)
 *
 * (The numerator always carries the larger degree bound; the denominator
 * gets the smaller one.) The system has more unknowns than equations, so
 * its kernel is nontrivial; any nonzero kernel vector has D != 0, and when
 * the received word is within tau errors of a codeword, N is exactly the
 * message polynomial times D. decode() takes the first basis vector of the
 * deterministic null-space basis, divides, and then validates the result:
 * exact division, degree at most k, twisted-coefficient shape, and
 * re-encoded distance at most tau. A received word that fails validation
 * yields a typed Failure - decode never fabricates a codeword outside the
 * radius and never aborts on in-contract input.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs {

enum class DecodeVariant { MdsOdd, MdsEven, Nmds };

const char* variant_name(DecodeVariant v);

struct DecodeParams {
    DecodeVariant variant;
    std::size_t max_den_degree; // D(x) degree bound
    std::size_t max_num_degree; // N(x) degree bound
    std::size_t unknowns;       // max_num_degree + max_den_degree + 2
    std::size_t radius;         // guaranteed correction capability tau
};

/// Degree/radius table for the code's classification and parity of n-k.
DecodeParams params_for(const CodeSpec& code);

/// The n x unknowns system: row j is (alpha_j^0 .. alpha_j^Nmax,
/// -y_j alpha_j^0 .. -y_j alpha_j^Dmax); unknown order is all numerator
/// coefficients, then all denominator coefficients, each ascending.
Matrix build_system(const CodeSpec& code, std::span<const FieldElement> received, const DecodeParams& params);

struct DecodeOutcome {
    enum class Status {
        Success,
        NonzeroRemainder,      // denominator does not divide numerator
        DegreeTooHigh,         // quotient degree exceeds k
        NotTwistedForm,        // x^k coefficient != eta * (hook coefficient)
        DistanceExceedsRadius, // re-encoded word too far from the input
    };

    Status status;
    // populated on Success only
    std::vector<FieldElement> codeword;
    std::vector<FieldElement> message;
    std::vector<std::size_t> error_positions; // ascending
    std::vector<FieldElement> error_values;   // received - codeword, per position

    bool ok() const noexcept { return status == Status::Success; }
};

const char* status_name(DecodeOutcome::Status s);

/// Decodes one received word of length n. Whenever the word is within the
/// variant's radius of a codeword, the outcome is Success with exactly that
/// codeword; otherwise a typed Failure (or, rarely, a Success naming some
/// codeword within the radius).
DecodeOutcome decode(const CodeSpec& code, std::span<const FieldElement> received);

} // namespace tgrs
