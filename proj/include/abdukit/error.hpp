/*
 *  Copyright (C) 2026  The abdukit authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef ABDUKIT_ERROR_HPP
#define ABDUKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abdukit {

enum class ErrorCode {
    NoConstants,
    GroundingBudgetExceeded,
    CandidateBudgetExceeded,
    OracleBudgetExceeded,
    NonGroundRule,
    NotNLP,
    SyntaxError,
    ReservedName,
    AbducibleObservation,
    SkepticalBotUnsupported,
    ConstraintInVariablePart,
    RuleAlreadyPresent,
    RuleNotPresent,
    ScopeNotSubset,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base class of every error thrown by the library. Budget errors are
/// distinguishable through code() so callers can fail loudly instead of
/// reporting a truncated result.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
        : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace abdukit

#endif
