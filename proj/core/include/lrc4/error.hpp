/**************************************************************************
 * error.hpp
 *
 * Copyright 2026 The lrc4 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrc4 {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (bad shape, empty support, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration refused because it exceeds a configured cap or budget.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t limit)
        : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}

    [[nodiscard]] std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

/// Parameters outside the domain of a construction or bound.
class DomainError : public Error {
public:
    DomainError(const std::string& constraint, std::string anchor = {})
        : Error(anchor.empty() ? constraint : constraint + " [" + anchor + "]"),
          constraint_(constraint),
          anchor_(std::move(anchor)) {}

    [[nodiscard]] const std::string& constraint() const noexcept { return constraint_; }
    [[nodiscard]] const std::string& anchor() const noexcept { return anchor_; }

private:
    std::string constraint_;
    std::string anchor_;
};

/// Malformed matrix / word / groups text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace lrc4
