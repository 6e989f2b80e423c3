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

#include "qcat/error.hpp"

namespace qcat {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::ObjectMismatch: return "ObjectMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::InvalidObject: return "InvalidObject";
    case ErrorKind::ZeroNotInvertible: return "ZeroNotInvertible";
    case ErrorKind::CapabilityMissing: return "CapabilityMissing";
    case ErrorKind::NotNormalizableInBackend: return "NotNormalizableInBackend";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotUnitObject: return "NotUnitObject";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Error";
}

}  // namespace qcat
