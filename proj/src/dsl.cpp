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

#include "qcat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcat/biproduct.hpp"
#include "qcat/error.hpp"
#include "qcat/object.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

namespace qcat {

namespace {

enum class Tok { Name, Scalar, Labels, LParen, RParen, Comma, Semi, Circ, Star, TensorOp, SumOp, Plus, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Scalar: return "scalar literal";
    case Tok::Labels: return "label list";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Circ: return "'o'";
    case Tok::Star: return "'*'";
    case Tok::TensorOp: return "'(*)'";
    case Tok::SumOp: return "'(+)'";
    case Tok::Plus: return "'+'";
    case Tok::End: return "end of input";
  }
  return "?";
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError,
              std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    const char c = text_[pos_];
    if (c == '(' && pos_ + 2 < text_.size() && text_[pos_ + 2] == ')' &&
        (text_[pos_ + 1] == '*' || text_[pos_ + 1] == '+')) {
      const Tok k = text_[pos_ + 1] == '*' ? Tok::TensorOp : Tok::SumOp;
      advance(3);
      return {k, "", line, col};
    }
    if (name_start(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && name_char(text_[end])) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      advance(end - pos_);
      return {word == "o" ? Tok::Circ : Tok::Name, word, line, col};
    }
    if (c == '[') return delimited('[', ']', Tok::Scalar, line, col);
    if (c == '{') return delimited('{', '}', Tok::Labels, line, col);
    advance(1);
    switch (c) {
      case '(': return {Tok::LParen, "", line, col};
      case ')': return {Tok::RParen, "", line, col};
      case ',': return {Tok::Comma, "", line, col};
      case ';': return {Tok::Semi, "", line, col};
      case '*': return {Tok::Star, "", line, col};
      case '+': return {Tok::Plus, "", line, col};
      default: break;
    }
    syntax_error(line, col, std::string("unexpected character '") + c + "'");
  }

  /// Raw text up to the next top-level comma, for scalar literals.
  Token raw_until_comma() {
    skip_space();
    const std::size_t line = line_, col = col_;
    std::size_t end = pos_;
    int depth = 0;
    while (end < text_.size() && (depth > 0 || (text_[end] != ',' && text_[end] != ')'))) {
      if (text_[end] == '(') ++depth;
      if (text_[end] == ')') --depth;
      if (text_[end] == '\n') break;
      ++end;
    }
    std::string raw(text_.substr(pos_, end - pos_));
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    if (raw.empty()) syntax_error(line, col, "expected a scalar literal");
    advance(end - pos_);
    return {Tok::Scalar, raw, line, col};
  }

 private:
  Token delimited(char open, char close, Tok kind, std::size_t line, std::size_t col) {
    int depth = 0;
    std::size_t end = pos_;
    for (; end < text_.size(); ++end) {
      if (text_[end] == open) ++depth;
      if (text_[end] == close && --depth == 0) break;
    }
    if (end >= text_.size()) syntax_error(line, col, std::string("unterminated '") + open + "'");
    std::string inner(text_.substr(pos_ + 1, end - pos_ - 1));
    advance(end + 1 - pos_);
    return {kind, inner, line, col};
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct Builtin {
  std::string_view name;
  TermOp op;
  std::size_t objects;
};

constexpr Builtin kBuiltins[] = {
    {"id", TermOp::Id, 1},       {"zero", TermOp::Zero, 2}, {"delta", TermOp::Delta, 1},
    {"nabla", TermOp::Nabla, 1}, {"swap", TermOp::Swap, 2}, {"distx", TermOp::Distx, 3},
    {"lift", TermOp::Lift, 1},
};

const Builtin* builtin(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (b.name == name) return &b;
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  Term parse() {
    Term t = sum();
    if (tok_.kind != Tok::End) fail("expected end of input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    syntax_error(tok_.line, tok_.column, what + ", found " + std::string(tok_name(tok_.kind)));
  }

  Token take() {
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }

  Token expect(Tok k) {
    if (tok_.kind != k) fail("expected " + std::string(tok_name(k)));
    return take();
  }

  static Term binary(TermOp op, Term a, Term b, const Token& at) {
    Term t;
    t.op = op;
    t.line = at.line;
    t.column = at.column;
    t.args.push_back(std::move(a));
    t.args.push_back(std::move(b));
    return t;
  }

  Term sum() {
    Term t = comp();
    while (tok_.kind == Tok::Plus) {
      Token at = take();
      t = binary(TermOp::Add, std::move(t), comp(), at);
    }
    return t;
  }

  Term comp() {
    Term lhs = fact();
    if (tok_.kind != Tok::Semi && tok_.kind != Tok::Circ) return lhs;
    Token at = take();
    return binary(at.kind == Tok::Semi ? TermOp::Then : TermOp::After, std::move(lhs), comp(), at);
  }

  Term fact() {
    Term t = post();
    while (tok_.kind == Tok::TensorOp || tok_.kind == Tok::SumOp) {
      Token at = take();
      t = binary(at.kind == Tok::TensorOp ? TermOp::Tensor : TermOp::Sum, std::move(t), post(), at);
    }
    return t;
  }

  Term post() {
    Term t = atom();
    while (tok_.kind == Tok::Star) {
      Token at = take();
      Term a;
      a.op = TermOp::Adjoint;
      a.line = at.line;
      a.column = at.column;
      a.args.push_back(std::move(t));
      t = std::move(a);
    }
    return t;
  }

  Term atom() {
    Term t;
    t.line = tok_.line;
    t.column = tok_.column;
    if (tok_.kind == Tok::LParen) {
      take();
      Term inner = sum();
      expect(Tok::RParen);
      return inner;
    }
    if (tok_.kind == Tok::Scalar) {
      t.op = TermOp::Scalar;
      t.text = trimmed(take().text);
      if (t.text.empty()) syntax_error(t.line, t.column, "empty scalar literal");
      return t;
    }
    if (tok_.kind != Tok::Name) fail("expected a term");
    Token name = take();
    const Builtin* b = builtin(name.text);
    if (!b) {
      t.op = TermOp::Name;
      t.text = name.text;
      return t;
    }
    t.op = b->op;
    if (tok_.kind != Tok::LParen) fail("expected '(' after " + name.text);
    if (b->op == TermOp::Lift) {
      // The lookahead is already past '('; the literal is read raw.
      t.text = lex_.raw_until_comma().text;
      tok_ = lex_.next();
      expect(Tok::Comma);
    } else {
      take();
    }
    for (std::size_t k = 0; k < b->objects; ++k) {
      if (k > 0) expect(Tok::Comma);
      t.objects.push_back(object());
    }
    expect(Tok::RParen);
    return t;
  }

  ObjExpr object() {
    ObjExpr o = object_atom();
    while (tok_.kind == Tok::TensorOp || tok_.kind == Tok::SumOp) {
      const bool tensor = take().kind == Tok::TensorOp;
      ObjExpr joined;
      joined.kind = tensor ? ObjExpr::Kind::Tensor : ObjExpr::Kind::Sum;
      joined.parts.push_back(std::move(o));
      joined.parts.push_back(object_atom());
      o = std::move(joined);
    }
    return o;
  }

  ObjExpr object_atom() {
    ObjExpr o;
    if (tok_.kind == Tok::Name) {
      o.kind = ObjExpr::Kind::Name;
      o.text = take().text;
      return o;
    }
    if (tok_.kind == Tok::Labels) {
      Token at = take();
      o.kind = ObjExpr::Kind::Labels;
      std::vector<std::string> labels;
      for (auto& l : split_top_level(at.text, ',')) {
        std::string s = trimmed(l);
        if (s.empty()) syntax_error(at.line, at.column, "empty label");
        labels.push_back(s);
      }
      std::string joined;
      for (const auto& l : labels) joined += (joined.empty() ? "" : ",") + l;
      o.text = joined;
      return o;
    }
    if (tok_.kind == Tok::LParen) {
      take();
      ObjExpr inner = object();
      expect(Tok::RParen);
      return inner;
    }
    fail("expected an object");
  }

  static std::string trimmed(std::string s) {
    auto sp = [](unsigned char c) { return std::isspace(c); };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
    return s;
  }

  Lexer lex_;
  Token tok_{Tok::End, "", 1, 1};
};

// Precedence levels: + is 1, composition 2, (*) and (+) 3, postfix 4, atoms 5.
int level(const Term& t) {
  switch (t.op) {
    case TermOp::Add: return 1;
    case TermOp::Then:
    case TermOp::After: return 2;
    case TermOp::Tensor:
    case TermOp::Sum: return 3;
    case TermOp::Adjoint: return 4;
    default: return 5;
  }
}

std::string at_least(const Term& t, int min_level) {
  std::string s = pretty(t);
  return level(t) < min_level ? "(" + s + ")" : s;
}

std::string object_part(const ObjExpr& o, bool right) {
  const bool compound = o.kind == ObjExpr::Kind::Tensor || o.kind == ObjExpr::Kind::Sum;
  return compound && right ? "(" + pretty(o) + ")" : pretty(o);
}

[[noreturn]] void mismatch(const std::string& what, const FinObject& a, const FinObject& b) {
  throw Error(ErrorKind::TypeMismatch, what + ": {" + a.str() + "} vs {" + b.str() + "}");
}

FinObject sum_object(const FinObject& a, const FinObject& b, BackendId backend) {
  return direct_sum(a, b, backend).object;
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  return a.op == b.op && a.text == b.text && a.objects == b.objects && a.args == b.args;
}

Term parse_term(std::string_view text) { return Parser(text).parse(); }

std::string pretty(const ObjExpr& o) {
  switch (o.kind) {
    case ObjExpr::Kind::Name: return o.text;
    case ObjExpr::Kind::Labels: return "{" + o.text + "}";
    case ObjExpr::Kind::Tensor:
      return object_part(o.parts[0], false) + " (*) " + object_part(o.parts[1], true);
    case ObjExpr::Kind::Sum:
      return object_part(o.parts[0], false) + " (+) " + object_part(o.parts[1], true);
  }
  return "?";
}

std::string pretty(const Term& t) {
  auto objects = [&] {
    std::string s;
    for (const auto& o : t.objects) s += (s.empty() ? "" : ", ") + pretty(o);
    return s;
  };
  switch (t.op) {
    case TermOp::Name: return t.text;
    case TermOp::Scalar: return "[" + t.text + "]";
    case TermOp::Id: return "id(" + objects() + ")";
    case TermOp::Zero: return "zero(" + objects() + ")";
    case TermOp::Delta: return "delta(" + objects() + ")";
    case TermOp::Nabla: return "nabla(" + objects() + ")";
    case TermOp::Swap: return "swap(" + objects() + ")";
    case TermOp::Distx: return "distx(" + objects() + ")";
    case TermOp::Lift: return "lift(" + t.text + ", " + objects() + ")";
    case TermOp::Adjoint: return at_least(t.args[0], 4) + "*";
    case TermOp::Tensor: return at_least(t.args[0], 3) + " (*) " + at_least(t.args[1], 4);
    case TermOp::Sum: return at_least(t.args[0], 3) + " (+) " + at_least(t.args[1], 4);
    case TermOp::Then: return at_least(t.args[0], 3) + " ; " + at_least(t.args[1], 2);
    case TermOp::After: return at_least(t.args[0], 3) + " o " + at_least(t.args[1], 2);
    case TermOp::Add: return at_least(t.args[0], 1) + " + " + at_least(t.args[1], 2);
  }
  return "?";
}

Workspace::Workspace(BackendId backend) : backend_(backend) {
  objects_.emplace("I", unit_object());
}

void Workspace::require_fresh(const std::string& name) const {
  if (objects_.count(name) || arrows_.count(name))
    throw Error(ErrorKind::PreconditionViolated, "name '" + name + "' is already defined");
  if (builtin(name) || name == "o")
    throw Error(ErrorKind::PreconditionViolated, "'" + name + "' is reserved");
}

void Workspace::add_object(const std::string& name, FinObject object) {
  require_fresh(name);
  objects_.emplace(name, std::move(object));
}

void Workspace::add_arrow(const std::string& name, Arrow arrow) {
  if (arrow.backend() != backend_) {
    throw Error(ErrorKind::BackendMismatch, "arrow '" + name + "' is over " +
                                                std::string(backend_name(arrow.backend())) +
                                                ", workspace is " + std::string(backend_name(backend_)));
  }
  require_fresh(name);
  arrows_.emplace(name, std::move(arrow));
}

const FinObject* Workspace::object(std::string_view name) const {
  auto it = objects_.find(name);
  return it == objects_.end() ? nullptr : &it->second;
}

const Arrow* Workspace::arrow(std::string_view name) const {
  auto it = arrows_.find(name);
  return it == arrows_.end() ? nullptr : &it->second;
}

void Workspace::load_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, rest;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string head, name, colon, labels;
    words >> head;
    if (head == "object") {
      std::getline(words >> name >> colon, labels);
      if (colon != ":" || labels.find_first_not_of(" \t") == std::string::npos) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(number) + ": expected 'object <name> : <labels>'");
      }
      std::erase_if(labels, [](unsigned char c) { return std::isspace(c); });
      add_object(name, FinObject::parse(labels));
      line.clear();
    }
    // Blank lines keep arrow-block line numbers intact.
    rest += line + "\n";
  }
  for (auto& named : parse_arrows(rest)) add_arrow(named.name, std::move(named.arrow));
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    load_text(buf.str());
  } catch (const Error& e) {
    std::string_view msg = e.what();
    msg.remove_prefix(error_kind_name(e.kind()).size() + 2);
    throw Error(e.kind(), path + ": " + std::string(msg));
  }
}

void Workspace::load_dir(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".arrow" || ext == ".arrows")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) load_file(f.string());
}

FinObject resolve_object(const ObjExpr& o, const Workspace& ws) {
  switch (o.kind) {
    case ObjExpr::Kind::Name: {
      const FinObject* found = ws.object(o.text);
      if (!found) throw Error(ErrorKind::UnknownName, "no object named '" + o.text + "'");
      return *found;
    }
    case ObjExpr::Kind::Labels: return FinObject::parse(o.text);
    case ObjExpr::Kind::Tensor:
      return tensor_object(resolve_object(o.parts[0], ws), resolve_object(o.parts[1], ws));
    case ObjExpr::Kind::Sum:
      return sum_object(resolve_object(o.parts[0], ws), resolve_object(o.parts[1], ws), ws.backend());
  }
  throw Error(ErrorKind::InvalidObject, "malformed object expression");
}

Signature typecheck(const Term& t, const Workspace& ws) {
  const BackendId b = ws.backend();
  auto obj = [&](std::size_t k) { return resolve_object(t.objects[k], ws); };
  switch (t.op) {
    case TermOp::Name: {
      const Arrow* f = ws.arrow(t.text);
      if (!f) throw Error(ErrorKind::UnknownName, "no arrow named '" + t.text + "'");
      return {f->dom(), f->cod()};
    }
    case TermOp::Scalar:
      parse_scalar(b, t.text);
      return {unit_object(), unit_object()};
    case TermOp::Id: return {obj(0), obj(0)};
    case TermOp::Zero: return {obj(0), obj(1)};
    case TermOp::Delta: return {obj(0), sum_object(obj(0), obj(0), b)};
    case TermOp::Nabla: return {sum_object(obj(0), obj(0), b), obj(0)};
    case TermOp::Swap: return {tensor_object(obj(0), obj(1)), tensor_object(obj(1), obj(0))};
    case TermOp::Distx: {
      FinObject a = obj(0), x = obj(1), y = obj(2);
      return {sum_object(tensor_object(a, x), tensor_object(a, y), b),
              tensor_object(a, sum_object(x, y, b))};
    }
    case TermOp::Lift:
      parse_scalar(b, t.text);
      return {obj(0), obj(0)};
    case TermOp::Adjoint: {
      Signature s = typecheck(t.args[0], ws);
      return {s.cod, s.dom};
    }
    case TermOp::Tensor: {
      Signature l = typecheck(t.args[0], ws), r = typecheck(t.args[1], ws);
      return {tensor_object(l.dom, r.dom), tensor_object(l.cod, r.cod)};
    }
    case TermOp::Sum: {
      Signature l = typecheck(t.args[0], ws), r = typecheck(t.args[1], ws);
      return {sum_object(l.dom, r.dom, b), sum_object(l.cod, r.cod, b)};
    }
    case TermOp::Then:
    case TermOp::After: {
      const Term& first = t.op == TermOp::Then ? t.args[0] : t.args[1];
      const Term& second = t.op == TermOp::Then ? t.args[1] : t.args[0];
      Signature f = typecheck(first, ws), g = typecheck(second, ws);
      if (!(f.cod == g.dom)) mismatch("composition at " + std::to_string(t.line) + ":" +
                                          std::to_string(t.column), f.cod, g.dom);
      return {f.dom, g.cod};
    }
    case TermOp::Add: {
      Signature l = typecheck(t.args[0], ws), r = typecheck(t.args[1], ws);
      if (!(l.dom == r.dom)) mismatch("sum domains", l.dom, r.dom);
      if (!(l.cod == r.cod)) mismatch("sum codomains", l.cod, r.cod);
      return l;
    }
  }
  throw Error(ErrorKind::TypeMismatch, "malformed term");
}

namespace {

Arrow eval_checked(const Term& t, const Workspace& ws) {
  const BackendId b = ws.backend();
  auto obj = [&](std::size_t k) { return resolve_object(t.objects[k], ws); };
  auto arg = [&](std::size_t k) { return eval_checked(t.args[k], ws); };
  switch (t.op) {
    case TermOp::Name: return *ws.arrow(t.text);
    case TermOp::Scalar: return scalar_arrow(parse_scalar(b, t.text));
    case TermOp::Id: return identity(obj(0), b);
    case TermOp::Zero: return zero_arrow(obj(0), obj(1), b);
    case TermOp::Delta: return diagonal(obj(0), b);
    case TermOp::Nabla: return codiagonal(obj(0), b);
    case TermOp::Swap: return swap_unitary(obj(0), obj(1), b);
    case TermOp::Distx: return distributor_x(obj(0), obj(1), obj(2), b);
    case TermOp::Lift: return lift_scalar(parse_scalar(b, t.text), obj(0));
    case TermOp::Adjoint: return adjoint(arg(0));
    case TermOp::Tensor: return tensor_arrows(arg(0), arg(1));
    case TermOp::Sum: return direct_sum_arrows(arg(0), arg(1));
    case TermOp::Then: return compose(arg(1), arg(0));
    case TermOp::After: return compose(arg(0), arg(1));
    case TermOp::Add: return add_arrows(arg(0), arg(1));
  }
  throw Error(ErrorKind::TypeMismatch, "malformed term");
}

}  // namespace

Arrow eval(const Term& t, const Workspace& ws) {
  typecheck(t, ws);
  return eval_checked(t, ws);
}

}  // namespace qcat
