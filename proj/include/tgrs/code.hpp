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
 * @file code.hpp
 * @brief Single-twist twisted generalized Reed-Solomon codes.
 *
 * A CodeSpec fixes a field, a length n, a dimension k, a hook index h, a
 * nonzero twist coefficient eta and n pairwise distinct evaluation points.
 * A message (a_0, ..., a_{k-1}) is encoded by evaluating the twisted
 * polynomial
 *
 *     f(x) = sum_{i<k} a_i x^i + eta * a_h * x^k
 *
 * at every evaluation point. Such a code always has minimum distance n-k or
 * n-k+1 (a nonzero twisted polynomial has degree at most k, so a codeword
 * has weight at least n-k). classify() labels the code by the subset-sum
 * criterion: Nmds iff some k-subset of the evaluation points sums to
 * -1/eta, Mds otherwise. For hook k-1 the label provably equals the
 * Singleton classification; the decoder's correction guarantees (see
 * decoder.hpp) hold under either label for every hook. The criterion is
 * evaluated by a cardinality-constrained subset-sum dynamic program over
 * (points processed, points chosen, field sum) in O(n k q); the witness
 * subset, when present, is the lexicographically smallest one.
 * classify_brute_force() enumerates all k-subsets instead and exists as an
 * independent cross-check for small n.
 *
 * Construction validates all invariants eagerly and classifies the code
 * once; CodeSpec is immutable afterwards.
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tgrs/linalg.hpp"
#include "tgrs/poly.hpp"

namespace tgrs {

enum class CodeKind { Mds, Nmds };

struct Classification {
    CodeKind kind;
    /// Ascending evaluation-point indices I with eta * sum(alpha[I]) = -1;
    /// present exactly when kind == Nmds.
    std::optional<std::vector<std::size_t>> witness;
};

class CodeSpec {
  public:
    /// Validates and classifies. Throws ZeroEta, HookOutOfRange,
    /// DuplicateAlpha, BadDimensions or FieldMismatch.
    static CodeSpec make(std::shared_ptr<const Field> field, std::size_t n, std::size_t k, std::size_t hook,
                         FieldElement eta, std::vector<FieldElement> alpha);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return k_; }
    std::size_t hook() const noexcept { return hook_; }
    const FieldElement& eta() const noexcept { return eta_; }
    const std::vector<FieldElement>& alpha() const noexcept { return alpha_; }
    const Classification& classification() const noexcept { return cls_; }

  private:
    CodeSpec(std::shared_ptr<const Field> field, std::size_t n, std::size_t k, std::size_t hook, FieldElement eta,
             std::vector<FieldElement> alpha, Classification cls)
        : field_(std::move(field)), n_(n), k_(k), hook_(hook), eta_(std::move(eta)), alpha_(std::move(alpha)),
          cls_(std::move(cls)) {}

    std::shared_ptr<const Field> field_;
    std::size_t n_;
    std::size_t k_;
    std::size_t hook_;
    FieldElement eta_;
    std::vector<FieldElement> alpha_;
    Classification cls_;
};

/// A message together with the code that interprets it.
struct TwistedPolynomial {
    const CodeSpec* code;
    std::vector<FieldElement> message; // length k
};

/// Checks the message length and wraps it. Throws LengthMismatch.
TwistedPolynomial twisted(const CodeSpec& code, std::vector<FieldElement> message);

/// f(x) = sum a_i x^i + eta a_hook x^k, normalized.
Polynomial expand(const TwistedPolynomial& tp);

/// (f(alpha_1), ..., f(alpha_n)).
std::vector<FieldElement> encode(const CodeSpec& code, std::span<const FieldElement> message);

/// k x n matrix whose row r is the codeword of the r-th unit message: plain
/// power rows alpha_j^i, except row `hook` which is alpha_j^hook + eta
/// alpha_j^k.
Matrix generator_matrix(const CodeSpec& code);

/// The cached classification (computed by the subset-sum dynamic program).
Classification classify(const CodeSpec& code);

/// Exhaustive k-subset enumeration; cross-check oracle, n <= 20 only.
Classification classify_brute_force(const CodeSpec& code);

} // namespace tgrs
