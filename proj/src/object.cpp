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

#include "qcat/object.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "qcat/error.hpp"

namespace qcat {

namespace {

bool is_opener(char c) { return c == '(' || c == '{' || c == '<'; }

char closer_for(char c) {
  switch (c) {
    case '(': return ')';
    case '{': return '}';
    default: return '>';
  }
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::vector<char> stack;
  std::string field;
  for (char c : text) {
    if (c == sep && stack.empty()) {
      out.push_back(std::move(field));
      field.clear();
      continue;
    }
    if (c == '<') {
      bool starts_group = field.empty() || is_opener(field.back()) ||
                          field.back() == ',' || field.back() == ':';
      if (starts_group) stack.push_back(c);
    } else if (c == '(' || c == '{') {
      stack.push_back(c);
    } else if (!stack.empty() && c == closer_for(stack.back())) {
      stack.pop_back();
    }
    field.push_back(c);
  }
  out.push_back(std::move(field));
  return out;
}

std::string pair_label(std::string_view a, std::string_view b) {
  std::string out = "<";
  out += a;
  out += ',';
  out += b;
  out += '>';
  return out;
}

std::optional<std::pair<std::string, std::string>> parse_pair_label(
    std::string_view label) {
  if (label.size() < 5 || label.front() != '<' || label.back() != '>') {
    return std::nullopt;
  }
  auto parts = split_top_level(label.substr(1, label.size() - 2), ',');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
    return std::nullopt;
  }
  return std::make_pair(parts[0], parts[1]);
}

FinObject::FinObject(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidObject, "objects are nonempty");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorKind::InvalidObject, "empty label");
    if (std::any_of(l.begin(), l.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; })) {
      throw Error(ErrorKind::InvalidObject, "whitespace in label '" + l + "'");
    }
    if (split_top_level(l, ',').size() != 1) {
      throw Error(ErrorKind::InvalidObject, "top-level comma in label '" + l + "'");
    }
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::InvalidObject, "duplicate label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> FinObject::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FinObject::require_index(std::string_view label) const {
  auto i = index_of(label);
  if (!i) {
    throw Error(ErrorKind::UnknownLabel,
                "'" + std::string(label) + "' not in {" + str() + "}");
  }
  return *i;
}

std::string FinObject::str() const {
  std::string out;
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if (i) out += ',';
    out += (*labels_)[i];
  }
  return out;
}

FinObject FinObject::parse(std::string_view text) {
  return FinObject(split_top_level(text, ','));
}

}  // namespace qcat
