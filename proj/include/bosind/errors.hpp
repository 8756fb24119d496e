// Copyright 2026 The bosind Authors
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
#include <string_view>

namespace bosind {

enum class ErrorKind {
  Size,           // enumeration or dimension guard exceeded
  Shape,          // mismatched dimensions / particle numbers
  Domain,         // argument outside the mathematical domain
  Validation,     // malformed input object (tableau, POVM, unitary, ...)
  Invariance,     // operator not permutation invariant
  NoSymmetricSupport,
  Infeasible,
  NotDistinguishable,
  NotRegular,
  NumericalDegeneracy,
  Conditioning,
  Underdetermined,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; the kind is what callers (and the
// CLI error JSON) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bosind
