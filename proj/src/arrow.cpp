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

#include "qcat/arrow.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "qcat/error.hpp"

namespace qcat {

namespace {

void require_backend(BackendId a, BackendId b) {
  if (a != b) {
    throw Error(ErrorKind::BackendMismatch, std::string(backend_name(a)) +
                                                " vs " +
                                                std::string(backend_name(b)));
  }
}

void require_object(const FinObject& a, const FinObject& b,
                    std::string_view what) {
  if (!(a == b)) {
    throw Error(ErrorKind::ObjectMismatch, std::string(what) + ": {" + a.str() +
                                               "} vs {" + b.str() + "}");
  }
}

std::vector<std::string> whitespace_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Arrow::Arrow(FinObject dom, FinObject cod, BackendId backend,
             std::vector<Scalar> entries)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      backend_(backend),
      entries_(std::move(entries)) {
  if (entries_.size() != dom_.size() * cod_.size()) {
    throw Error(ErrorKind::ObjectMismatch, "entry count does not match objects");
  }
  for (const auto& e : entries_) require_backend(e.backend(), backend_);
}

Arrow Arrow::from_function(
    FinObject dom, FinObject cod, BackendId backend,
    const std::function<Scalar(std::size_t, std::size_t)>& entry) {
  std::vector<Scalar> entries;
  entries.reserve(dom.size() * cod.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < cod.size(); ++j) entries.push_back(entry(i, j));
  }
  return Arrow(std::move(dom), std::move(cod), backend, std::move(entries));
}

const Scalar& Arrow::at(std::string_view dom_label,
                        std::string_view cod_label) const {
  return at(dom_.require_index(dom_label), cod_.require_index(cod_label));
}

bool Arrow::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool operator==(const Arrow& a, const Arrow& b) {
  if (a.backend_ != b.backend_ || !(a.dom_ == b.dom_) || !(a.cod_ == b.cod_)) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i] == b.entries_[i])) return false;
  }
  return true;
}

Arrow compose(const Arrow& g, const Arrow& f) {
  require_backend(g.backend(), f.backend());
  require_object(f.cod(), g.dom(), "compose");
  const std::size_t n = f.rows(), m = f.cols(), p = g.cols();
  // Skipping zero terms is only sound when zero tests are exact.
  const bool exact = backend(f.backend()).caps.is_exact;
  std::vector<Scalar> out(n * p, Scalar::zero(f.backend()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Scalar& fab = f.at(a, b);
      if (exact && fab.is_zero()) continue;
      for (std::size_t c = 0; c < p; ++c) {
        const Scalar& gbc = g.at(b, c);
        if (exact && gbc.is_zero()) continue;
        out[a * p + c] = out[a * p + c] + gbc * fab;
      }
    }
  }
  return Arrow(f.dom(), g.cod(), f.backend(), std::move(out));
}

Arrow identity(const FinObject& a, BackendId backend) {
  return Arrow::from_function(a, a, backend, [&](std::size_t i, std::size_t j) {
    return i == j ? Scalar::one(backend) : Scalar::zero(backend);
  });
}

Arrow adjoint(const Arrow& f) {
  return Arrow::from_function(
      f.cod(), f.dom(), f.backend(),
      [&](std::size_t i, std::size_t j) { return s_star(f.at(j, i)); });
}

Arrow zero_arrow(const FinObject& a, const FinObject& b, BackendId backend) {
  return Arrow(a, b, backend,
               std::vector<Scalar>(a.size() * b.size(), Scalar::zero(backend)));
}

Arrow add_arrows(const Arrow& f, const Arrow& g) {
  require_backend(f.backend(), g.backend());
  require_object(f.dom(), g.dom(), "add (domain)");
  require_object(f.cod(), g.cod(), "add (codomain)");
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (std::size_t i = 0; i < f.entries().size(); ++i) {
    out.push_back(f.entries()[i] + g.entries()[i]);
  }
  return Arrow(f.dom(), f.cod(), f.backend(), std::move(out));
}

Arrow scale(const Arrow& f, const Scalar& s) {
  require_backend(f.backend(), s.backend());
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (const auto& e : f.entries()) out.push_back(e * s);
  return Arrow(f.dom(), f.cod(), f.backend(), std::move(out));
}

Arrow conjugate(const Arrow& f) {
  std::vector<Scalar> out;
  out.reserve(f.entries().size());
  for (const auto& e : f.entries()) out.push_back(s_star(e));
  return Arrow(f.dom(), f.cod(), f.backend(), std::move(out));
}

bool is_self_adjoint(const Arrow& f) {
  return f.dom() == f.cod() && adjoint(f) == f;
}

bool is_right_unitary(const Arrow& f) {
  return compose(adjoint(f), f) == identity(f.dom(), f.backend());
}

bool is_unitary(const Arrow& f) {
  auto flags = unitarity_flags(f);
  return flags.unitary;
}

UnitarityFlags unitarity_flags(const Arrow& f) {
  UnitarityFlags flags;
  Arrow fs = adjoint(f);
  flags.right_unitary = compose(fs, f) == identity(f.dom(), f.backend());
  flags.left_unitary = compose(f, fs) == identity(f.cod(), f.backend());
  flags.unitary = flags.left_unitary && flags.right_unitary;
  flags.self_adjoint = f.dom() == f.cod() && fs == f;
  return flags;
}

Arrow functional_arrow(const FinObject& a, const FinObject& b,
                       const std::map<std::string, std::string>& map,
                       BackendId backend) {
  std::vector<std::size_t> image;
  image.reserve(a.size());
  for (const auto& label : a.labels()) {
    auto it = map.find(label);
    if (it == map.end()) {
      throw Error(ErrorKind::UnknownLabel, "map undefined on '" + label + "'");
    }
    image.push_back(b.require_index(it->second));
  }
  return functional_arrow(a, b, image, backend);
}

Arrow functional_arrow(const FinObject& a, const FinObject& b,
                       std::span<const std::size_t> image, BackendId backend) {
  if (image.size() != a.size()) {
    throw Error(ErrorKind::UnknownLabel, "map is not total on the domain");
  }
  for (auto j : image) {
    if (j >= b.size()) throw Error(ErrorKind::UnknownLabel, "image out of range");
  }
  return Arrow::from_function(a, b, backend, [&](std::size_t i, std::size_t j) {
    return image[i] == j ? Scalar::one(backend) : Scalar::zero(backend);
  });
}

bool is_eigenvector(const Arrow& f, const Arrow& x, const Arrow& s) {
  require_object(f.dom(), f.cod(), "eigenvector operator");
  require_object(x.cod(), f.dom(), "eigenvector candidate");
  require_object(s.dom(), x.dom(), "eigenvalue domain");
  require_object(s.cod(), x.dom(), "eigenvalue codomain");
  if (!is_right_unitary(x)) return false;
  return compose(f, x) == compose(x, s);
}

Arrow operator+(const Arrow& f, const Arrow& g) { return add_arrows(f, g); }

std::ostream& operator<<(std::ostream& os, const Arrow& f) {
  return os << format_arrow("_", f);
}

std::string format_arrow(std::string_view name, const Arrow& f) {
  std::string out = "arrow ";
  out += name;
  out += " : ";
  out += f.dom().str();
  out += " -> ";
  out += f.cod().str();
  out += " @ ";
  out += backend_name(f.backend());
  out += '\n';
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (j) out += ' ';
      out += f.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::vector<NamedArrow> parse_arrows(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  std::vector<NamedArrow> out;
  std::size_t i = 0;
  auto skippable = [](const std::string& l) {
    auto toks = whitespace_tokens(l);
    return toks.empty() || toks[0][0] == '#';
  };
  while (i < lines.size()) {
    if (skippable(lines[i])) {
      ++i;
      continue;
    }
    auto head = whitespace_tokens(lines[i]);
    if (head.size() != 8 || head[0] != "arrow" || head[2] != ":" ||
        head[4] != "->" || head[6] != "@") {
      parse_fail(i + 1, "expected 'arrow <name> : <dom> -> <cod> @ <backend>'");
    }
    std::size_t header_line = i + 1;
    BackendId b;
    FinObject dom{"_"}, cod{"_"};
    try {
      b = parse_backend(head[7]);
      dom = FinObject::parse(head[3]);
      cod = FinObject::parse(head[5]);
    } catch (const Error& e) {
      parse_fail(header_line, e.what());
    }
    std::vector<Scalar> entries;
    entries.reserve(dom.size() * cod.size());
    ++i;
    for (std::size_t r = 0; r < dom.size(); ++r, ++i) {
      if (i >= lines.size()) parse_fail(i, "missing matrix rows");
      auto row = whitespace_tokens(lines[i]);
      if (row.size() != cod.size()) {
        parse_fail(i + 1, "expected " + std::to_string(cod.size()) + " entries");
      }
      for (const auto& tok : row) {
        try {
          entries.push_back(parse_scalar(b, tok));
        } catch (const Error& e) {
          parse_fail(i + 1, e.what());
        }
      }
    }
    out.push_back({head[1], Arrow(dom, cod, b, std::move(entries))});
  }
  return out;
}

Arrow parse_arrow(std::string_view text) {
  auto all = parse_arrows(text);
  if (all.size() != 1) {
    throw Error(ErrorKind::ParseError,
                "expected exactly one arrow, found " + std::to_string(all.size()));
  }
  return all.front().arrow;
}

std::vector<NamedArrow> read_arrow_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrows(buf.str());
}

void write_arrow_file(const std::string& path,
                      std::span<const NamedArrow> arrows) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  for (const auto& a : arrows) out << format_arrow(a.name, a.arrow);
}

}  // namespace qcat
