// Copyright 2026 The qfilt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfilt {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument: bad qubit index, shape mismatch, non-unit norm, ...
struct ValidationError : Error {
    using Error::Error;
};

/// Register size outside the supported range.
struct CapacityError : Error {
    using Error::Error;
};

/// Input that cannot be normalized (e.g. an all-zero signal).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Post-selection on a branch with zero probability.
struct AnnihilationError : Error {
    using Error::Error;
};

/// Repeat-until-success sampling exhausted its trial budget.
struct RetryBudgetError : Error {
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line and byte offset of the
/// first offending token when known (0 = unknown).
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t offset = 0;

    ParseError(const std::string& msg, std::size_t line_, std::size_t offset_ = 0)
        : Error(msg + " (line " + std::to_string(line_) +
                (offset_ ? ", offset " + std::to_string(offset_) : "") + ")"),
          line(line_),
          offset(offset_) {}
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Filesystem-level failure (missing file, short write, ...).
struct IoError : Error {
    using Error::Error;
};

}  // namespace qfilt
