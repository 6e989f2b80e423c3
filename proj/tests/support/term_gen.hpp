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
#include <string>
#include <utility>
#include <vector>

#include "qcat/dsl.hpp"
#include "qcat/random.hpp"

namespace qcat::testing {

// A: 2 labels, B: 2 labels, C: 3 labels.
inline Workspace sample_workspace(BackendId b, std::uint64_t seed) {
  Workspace ws(b);
  Rng rng(seed);
  FinObject a = make_object("a", 2), bb = make_object("b", 2), c = make_object("c", 3);
  ws.add_object("A", a);
  ws.add_object("B", bb);
  ws.add_object("C", c);
  ws.add_arrow("f", random_arrow(b, a, bb, rng));
  ws.add_arrow("f2", random_arrow(b, a, bb, rng));
  ws.add_arrow("g", random_arrow(b, bb, a, rng));
  ws.add_arrow("g2", random_arrow(b, bb, a, rng));
  ws.add_arrow("h", random_arrow(b, bb, c, rng));
  ws.add_arrow("k", random_arrow(b, a, a, rng));
  ws.add_arrow("p", random_prep(b, a, rng));
  return ws;
}

// Typed random terms. Types are drawn from a small closed set so that
// composition and the structural arrows always have a well-typed choice.
enum Ty { TI, TA, TB, TAB, TBA, TApB, TAA, TApA, kTypes };

inline ObjExpr name(const char* n) { return {ObjExpr::Kind::Name, n, {}}; }

inline ObjExpr obj(Ty t) {
  auto pair = [](ObjExpr::Kind k, const char* l, const char* r) {
    return ObjExpr{k, "", {name(l), name(r)}};
  };
  switch (t) {
    case TI: return name("I");
    case TA: return name("A");
    case TB: return name("B");
    case TAB: return pair(ObjExpr::Kind::Tensor, "A", "B");
    case TBA: return pair(ObjExpr::Kind::Tensor, "B", "A");
    case TApB: return pair(ObjExpr::Kind::Sum, "A", "B");
    case TAA: return pair(ObjExpr::Kind::Tensor, "A", "A");
    case TApA: return pair(ObjExpr::Kind::Sum, "A", "A");
    default: break;
  }
  return name("I");
}

inline Term leaf(TermOp op, std::vector<ObjExpr> objects = {}, std::string text = "") {
  Term t;
  t.op = op;
  t.text = std::move(text);
  t.objects = std::move(objects);
  return t;
}

inline Term node(TermOp op, std::vector<Term> args) {
  Term t;
  t.op = op;
  t.args = std::move(args);
  return t;
}

struct TermGen {
  Rng rng;

  Term base(Ty d, Ty c) {
    std::vector<Term> options{leaf(TermOp::Zero, {obj(d), obj(c)})};
    auto named = [&](const char* n) { options.push_back(leaf(TermOp::Name, {}, n)); };
    if (d == TA && c == TB) named("f"), named("f2");
    if (d == TB && c == TA) named("g"), named("g2");
    if (d == TA && c == TA) named("k");
    if (d == TI && c == TA) named("p");
    if (d == c) {
      options.push_back(leaf(TermOp::Id, {obj(d)}));
      options.push_back(leaf(TermOp::Lift, {obj(d)}, std::to_string(rng.range(-3, 3))));
    }
    if (d == TI && c == TI) options.push_back(leaf(TermOp::Scalar, {}, "-2/3"));
    if (d == TA && c == TApA) options.push_back(leaf(TermOp::Delta, {name("A")}));
    if (d == TApA && c == TA) options.push_back(leaf(TermOp::Nabla, {name("A")}));
    if (d == TAB && c == TBA) options.push_back(leaf(TermOp::Swap, {name("A"), name("B")}));
    if (d == TBA && c == TAB) options.push_back(leaf(TermOp::Swap, {name("B"), name("A")}));
    if (d == TAA && c == TAA) options.push_back(leaf(TermOp::Swap, {name("A"), name("A")}));
    return options[rng.below(options.size())];
  }

  Term gen(Ty d, Ty c, int depth) {
    if (depth == 0) return base(d, c);
    std::vector<std::function<Term()>> options{
        [&] { return base(d, c); },
        [&] {
          Ty m = static_cast<Ty>(rng.below(kTypes));
          Term first = gen(d, m, depth - 1);
          Term second = gen(m, c, depth - 1);
          return rng.coin() ? node(TermOp::Then, {first, second})
                            : node(TermOp::After, {second, first});
        },
        [&] { return node(TermOp::Add, {gen(d, c, depth - 1), gen(d, c, depth - 1)}); },
        [&] { return node(TermOp::Adjoint, {gen(c, d, depth - 1)}); },
    };
    auto split = [](Ty t) -> std::pair<Ty, Ty> {
      switch (t) {
        case TAB: case TApB: return {TA, TB};
        case TBA: return {TB, TA};
        case TAA: case TApA: return {TA, TA};
        default: return {kTypes, kTypes};
      }
    };
    const bool tensors = (d == TAB || d == TBA || d == TAA) && (c == TAB || c == TBA || c == TAA);
    const bool sums = (d == TApB || d == TApA) && (c == TApB || c == TApA);
    if (tensors || sums) {
      options.push_back([&, tensors] {
        auto [d1, d2] = split(d);
        auto [c1, c2] = split(c);
        return node(tensors ? TermOp::Tensor : TermOp::Sum,
                    {gen(d1, c1, depth - 1), gen(d2, c2, depth - 1)});
      });
    }
    return options[rng.below(options.size())]();
  }
};

// Equal arrows on both sides for every arrow of sample_workspace.
inline const std::vector<std::pair<std::string, std::string>>& golden_identities() {
  static const std::vector<std::pair<std::string, std::string>> ids = {
      {"id(A) ; f", "f"},
      {"(f (*) g)*", "f* (*) g*"},
      {"delta(A) ; nabla(A)", "id(A) + id(A)"},
      {"(f ; h)*", "h* ; f*"},
      {"f + zero(A, B)", "f"},
      {"delta(A) ; (f (+) f2) ; nabla(B)", "f + f2"},
      {"(f + f2) ; h", "f ; h + f2 ; h"},
      {"swap(A, C) ; swap(C, A)", "id(A (*) C)"},
      {"(f (*) g) ; (h (*) k)", "(f ; h) (*) (g ; k)"},
      {"f (*) (g + g2)", "f (*) g + f (*) g2"},
      {"distx(A, B, C) ; distx(A, B, C)*", "id(A (*) B (+) (A (*) C))"},
      {"distx(A, B, C)* ; distx(A, B, C)", "id(A (*) (B (+) C))"},
      {"h o f", "f ; h"},
      {"lift(2, A)", "id(A) + id(A)"},
      {"[2] ; [2]", "[4]"},
      {"f**", "f"},
  };
  return ids;
}

}  // namespace qcat::testing
