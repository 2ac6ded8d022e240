// Copyright 2026 The qfasim Authors
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

#include <stdexcept>
#include <string>

namespace qfasim {

enum class ErrorCode {
    invalid_argument,      // bad parameter value
    invalid_input,         // malformed input string (unknown symbol, over length cap)
    invalid_superoperator, // operation elements fail the completeness equation
    validation,            // a machine or matrix violates its defining invariant
    parse,                 // file or catalog-name syntax error
    not_found,             // search exhausted without a witness
    budget_exceeded,       // simulation pass budget hit
    io,                    // file could not be read or written
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qfasim
