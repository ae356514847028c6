// SPDX-License-Identifier: Apache-2.0
//
// csac - cyclic shift spectral-amplitude-coding OCDMA toolkit
// Copyright (C) 2026 The csac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CSAC_ERROR_HPP
#define CSAC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csac {

/// Raised when an argument lies outside an operation's domain
/// (zero users, mismatched lengths, missing family parameter, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers. `line()` is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace csac

#endif  // CSAC_ERROR_HPP
