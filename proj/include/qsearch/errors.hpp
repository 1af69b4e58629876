// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

/// Raised when an otherwise well-formed input violates a domain rule.
/// Messages are prefixed with the operation that rejected the input,
/// e.g. "build_machine: exponent chi must be > 1".
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised for malformed input text (network files, push specifiers).
class ParseError : public DomainError {
  public:
    using DomainError::DomainError;
};

} // namespace qsearch
