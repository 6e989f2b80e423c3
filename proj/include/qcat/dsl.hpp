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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/arrow.hpp"

namespace qcat {

/// Object argument of a term: a workspace name, inline labels, or a
/// tensor/direct sum of two object expressions.
struct ObjExpr {
  enum class Kind { Name, Labels, Tensor, Sum };
  Kind kind = Kind::Name;
  std::string text;
  std::vector<ObjExpr> parts;

  friend bool operator==(const ObjExpr&, const ObjExpr&) = default;
};

enum class TermOp {
  Name,     // workspace arrow
  Scalar,   // [literal], a 1x1 arrow on the unit
  Id,
  Zero,
  Delta,
  Nabla,
  Swap,
  Distx,
  Lift,     // lift(literal, A)
  Then,     // f ; g  (f first)
  After,    // g o f  (f first)
  Adjoint,  // f*
  Tensor,   // f (*) g
  Sum,      // f (+) g
  Add,      // f + g
};

struct Term {
  TermOp op = TermOp::Name;
  std::string text;  // arrow name or scalar literal
  std::vector<ObjExpr> objects;
  std::vector<Term> args;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Structural equality; source positions are ignored.
bool operator==(const Term& a, const Term& b);

Term parse_term(std::string_view text);
std::string pretty(const Term& t);
std::string pretty(const ObjExpr& o);

class Workspace {
 public:
  explicit Workspace(BackendId backend);

  BackendId backend() const { return backend_; }
  void add_object(const std::string& name, FinObject object);
  void add_arrow(const std::string& name, Arrow arrow);
  const FinObject* object(std::string_view name) const;
  const Arrow* arrow(std::string_view name) const;
  const std::map<std::string, FinObject, std::less<>>& objects() const { return objects_; }
  const std::map<std::string, Arrow, std::less<>>& arrows() const { return arrows_; }

  /// Arrow blocks plus `object <name> : <labels>` lines.
  void load_text(std::string_view text);
  void load_file(const std::string& path);
  /// Every *.arrow and *.arrows file in dir, in name order.
  void load_dir(const std::string& dir);

 private:
  void require_fresh(const std::string& name) const;

  BackendId backend_;
  std::map<std::string, FinObject, std::less<>> objects_;
  std::map<std::string, Arrow, std::less<>> arrows_;
};

struct Signature {
  FinObject dom;
  FinObject cod;
};

FinObject resolve_object(const ObjExpr& o, const Workspace& ws);
/// Throws TypeMismatch or UnknownName.
Signature typecheck(const Term& t, const Workspace& ws);
Arrow eval(const Term& t, const Workspace& ws);

}  // namespace qcat
