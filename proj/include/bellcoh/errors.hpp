// Copyright 2026 The bellcoh Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace bellcoh {

/// Raised when an argument lies outside the domain of an operation
/// (parameter out of range, non-Hermitian matrix, unphysical state, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when an iterative numerical routine fails to converge.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace bellcoh
