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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcat {

/// A finite nonempty set of labels; an object of the matrix category.
///
/// Labels are distinct, contain no whitespace and no top-level comma, and
/// keep their creation order (used only for deterministic iteration). Copies
/// share the label storage.
class FinObject {
 public:
  /// Throws InvalidObject on empty, duplicate or malformed labels.
  explicit FinObject(std::vector<std::string> labels);
  FinObject(std::initializer_list<std::string> labels)
      : FinObject(std::vector<std::string>(labels)) {}

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws UnknownLabel.
  std::size_t require_index(std::string_view label) const;

  /// Comma-joined labels, the form used by the arrow text format.
  std::string str() const;
  /// Inverse of str(); throws InvalidObject.
  static FinObject parse(std::string_view text);

  friend bool operator==(const FinObject& a, const FinObject& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Splits at `sep` characters that are not nested inside `<..>`, `{..}` or
/// `(..)`. A `<` only opens a group at the start of a field or right after
/// another opener, a comma or a `:` tag, so the `(a<b)` label form stays
/// intact.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// `<a,b>`, the label of a pair in a tensor object.
std::string pair_label(std::string_view a, std::string_view b);
std::optional<std::pair<std::string, std::string>> parse_pair_label(
    std::string_view label);

}  // namespace qcat
