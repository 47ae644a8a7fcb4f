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

#pragma once

#include <stdexcept>
#include <string>

namespace tgrs {

/// Typed error categories raised by precondition and validation failures.
/// Decoding failures are *not* errors; they are reported through
/// DecodeOutcome (see decoder.hpp).
enum class Errc {
    NotPrime,
    Reducible,
    DegreeMismatch,
    FieldMismatch,
    DivisionByZero,
    OutOfRange,
    DuplicateAlpha,
    HookOutOfRange,
    ZeroEta,
    BadDimensions,
    LengthMismatch,
    DimensionMismatch,
    WeightOutOfRange,
    InsufficientField,
    BadFormat,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace tgrs
