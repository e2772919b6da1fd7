/*
 * Copyright 2026 The sepgame Authors
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
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepgame {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/** Caller broke a precondition: alphabet mismatch, bad parameter, unknown vertex. */
class UsageError : public Error
{
  public:
    using Error::Error;
};

/** A structural invariant does not hold (duplicate edge, invalid strategy, ...). */
class InvariantViolation : public Error
{
  public:
    using Error::Error;
};

/** An exponential procedure refused an instance above its size guard. */
class GuardExceeded : public Error
{
  public:
    using Error::Error;
};

/** Malformed game file; line and column are 1-based. */
class ParseError : public Error
{
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace sepgame
