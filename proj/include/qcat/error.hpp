// Copyright 2026 The qcat Authors
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

namespace qcat {

enum class ErrorKind {
  BackendMismatch,
  ObjectMismatch,
  UnknownLabel,
  InvalidObject,
  ZeroNotInvertible,
  CapabilityMissing,
  NotNormalizableInBackend,
  IncompleteTable,
  PreconditionViolated,
  NotUnitObject,
  ParseError,
  SyntaxError,
  TypeMismatch,
  UnknownName,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the law runner) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcat
