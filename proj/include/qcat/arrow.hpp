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

#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/object.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

/// A matrix arrow dom → cod, indexed (domain label, codomain label).
///
/// Entries are stored densely, row = domain label, column = codomain label,
/// all from one backend. Equality is structural: matching objects and
/// entrywise scalar equality.
class Arrow {
 public:
  /// Throws ObjectMismatch if the entry count is wrong and BackendMismatch if
  /// an entry comes from another backend.
  Arrow(FinObject dom, FinObject cod, BackendId backend,
        std::vector<Scalar> entries);

  static Arrow from_function(
      FinObject dom, FinObject cod, BackendId backend,
      const std::function<Scalar(std::size_t, std::size_t)>& entry);

  const FinObject& dom() const { return dom_; }
  const FinObject& cod() const { return cod_; }
  BackendId backend() const { return backend_; }
  std::size_t rows() const { return dom_.size(); }
  std::size_t cols() const { return cod_.size(); }

  const Scalar& at(std::size_t i, std::size_t j) const {
    return entries_[i * cod_.size() + j];
  }
  const Scalar& at(std::string_view dom_label, std::string_view cod_label) const;
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const Arrow& a, const Arrow& b);

 private:
  FinObject dom_;
  FinObject cod_;
  BackendId backend_;
  std::vector<Scalar> entries_;
};

struct UnitarityFlags {
  bool self_adjoint = false;
  bool left_unitary = false;
  bool right_unitary = false;
  bool unitary = false;
};

/// g ∘ f; throws ObjectMismatch unless cod(f) = dom(g).
Arrow compose(const Arrow& g, const Arrow& f);
Arrow identity(const FinObject& a, BackendId backend);
Arrow adjoint(const Arrow& f);
Arrow zero_arrow(const FinObject& a, const FinObject& b, BackendId backend);
/// Entrywise sum of parallel arrows.
Arrow add_arrows(const Arrow& f, const Arrow& g);
/// Entrywise product with a scalar, i.e. f ∘ s_dom.
Arrow scale(const Arrow& f, const Scalar& s);
/// Entrywise involution without transposing.
Arrow conjugate(const Arrow& f);

/// Exact comparisons of f⋆∘f and f∘f⋆ with identities. Right-unitary means
/// f⋆∘f = id, left-unitary f∘f⋆ = id; self-adjoint is false off inner arrows.
UnitarityFlags unitarity_flags(const Arrow& f);
bool is_self_adjoint(const Arrow& f);
bool is_right_unitary(const Arrow& f);
bool is_unitary(const Arrow& f);

/// χ_x for a total map of labels; throws UnknownLabel.
Arrow functional_arrow(const FinObject& a, const FinObject& b,
                       const std::map<std::string, std::string>& map,
                       BackendId backend);
/// Same, with the map given by codomain indices in domain order.
Arrow functional_arrow(const FinObject& a, const FinObject& b,
                       std::span<const std::size_t> image, BackendId backend);

/// x is right-unitary and f ∘ x = x ∘ s, for f: A→A, x: B→A, s: B→B.
bool is_eigenvector(const Arrow& f, const Arrow& x, const Arrow& s);

Arrow operator+(const Arrow& f, const Arrow& g);
std::ostream& operator<<(std::ostream& os, const Arrow& f);

// Arrow text format:
//
//   arrow <name> : <dom labels> -> <cod labels> @ <backend>
//   <|cod| literals>      (one line per domain label)
//
// Blank lines and lines starting with '#' are ignored between blocks.

struct NamedArrow {
  std::string name;
  Arrow arrow;
};

std::string format_arrow(std::string_view name, const Arrow& f);
/// Throws ParseError with a line number.
std::vector<NamedArrow> parse_arrows(std::string_view text);
Arrow parse_arrow(std::string_view text);
std::vector<NamedArrow> read_arrow_file(const std::string& path);
void write_arrow_file(const std::string& path,
                      std::span<const NamedArrow> arrows);

}  // namespace qcat
