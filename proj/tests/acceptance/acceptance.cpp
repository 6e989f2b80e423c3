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

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qcat/biproduct.hpp"
#include "qcat/dsl.hpp"
#include "qcat/error.hpp"
#include "qcat/laws.hpp"
#include "qcat/linalg.hpp"
#include "qcat/mixed.hpp"
#include "qcat/monoid.hpp"
#include "qcat/random.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"
#include "support/term_gen.hpp"

using namespace qcat;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<BackendId> exact_backends() {
  std::vector<BackendId> out;
  for (BackendId b : all_backends())
    if (backend(b).caps.is_exact) out.push_back(b);
  return out;
}

std::string names(std::span<const BackendId> bs) {
  std::string s;
  for (BackendId b : bs) s += (s.empty() ? "" : ",") + std::string(backend_name(b));
  return s;
}

// 1/√2 and its negative in Q(√2).
Outcome golden_rotation() {
  Outcome o;
  const auto t0 = Clock::now();
  Scalar h = Scalar::quadratic(Rational(0), Rational(1, 2));
  Scalar z = Scalar::zero(BackendId::QSqrt2);
  FinObject ab({"a", "b"});
  Arrow u = Arrow::from_function(ab, ab, BackendId::QSqrt2, [&](std::size_t i, std::size_t j) {
    return i == 1 && j == 0 ? z - h : h;
  });
  Arrow id = identity(ab, BackendId::QSqrt2);
  const bool unitary = compose(u, adjoint(u)) == id && compose(adjoint(u), u) == id;
  const double us = seconds_since(t0) * 1e6;
  o.require(u.at("b", "a") == s_neg(h) && u.at("a", "b") == h, "matrix entries");
  o.require(unitary, "u is not unitary");
  o.require(us < 1000, "took " + std::to_string(us) + " us");
  std::ostringstream n;
  n << "u.u* = u*.u = id exactly in " << static_cast<long>(us) << " us";
  if (o.pass) o.note = n.str();
  return o;
}

Outcome full_suite() {
  Outcome o;
  const std::vector<BackendId> bs{BackendId::Bool, BackendId::Rat, BackendId::Gauss,
                                  BackendId::F5, BackendId::QSqrt2};
  o.require(law_registry().size() >= 40, "fewer than 40 laws");
  const auto t0 = Clock::now();
  std::ostringstream n;
  n << law_registry().size() << " laws;";
  for (BackendId b : bs) {
    SuiteConfig cfg;
    cfg.backend = b;
    cfg.max_size = 4;
    cfg.trials = 200;
    cfg.seed = 20240601;
    LawReport r = run_suite(cfg);
    n << ' ' << backend_name(b) << " pass=" << r.count(LawStatus::Pass)
      << " na=" << r.count(LawStatus::NotApplicable);
    for (const auto& res : r.results)
      o.require(res.status != LawStatus::Fail,
                std::string(backend_name(b)) + " " + res.law_id + ": " + res.detail);
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60, "took " + std::to_string(secs) + " s");
  n << "; " << static_cast<int>(secs * 1000) << " ms total";
  if (o.pass) o.note = n.str();
  return o;
}

Outcome hom_addition(const std::vector<BackendId>& bs) {
  Outcome o;
  Rng rng(301);
  for (BackendId b : bs) {
    for (int i = 0; i < 500; ++i) {
      FinObject a = random_object(rng, "a", 4), c = random_object(rng, "c", 4);
      Arrow f = random_arrow(b, a, c, rng), g = random_arrow(b, a, c, rng);
      Arrow entrywise = Arrow::from_function(a, c, b, [&](std::size_t x, std::size_t y) {
        return f.at(x, y) + g.at(x, y);
      });
      o.require(hom_add_via_biproduct(f, g) == entrywise,
                std::string(backend_name(b)) + " pair " + std::to_string(i));
    }
  }
  if (o.pass) o.note = "500 pairs on each of " + names(bs);
  return o;
}

Outcome born_rule(const std::vector<BackendId>& bs) {
  Outcome o;
  Rng rng(401);
  for (BackendId b : bs) {
    for (int i = 0; i < 200; ++i) {
      FinObject a = random_object(rng, "a", 3), c = random_object(rng, "c", 3);
      DirectSum ds = direct_sum(a, c, b);
      Arrow x = random_prep(b, ds.object, rng);
      BornDecomposition d = born_decompose(x, ds);
      const std::string where = std::string(backend_name(b)) + " x" + std::to_string(i);
      o.require(sqnorm(d.y) + sqnorm(d.z) == sqnorm(x), where + " norms");
      o.require(add_arrows(d.y, d.z) == x, where + " y+z");
      Arrow left = compose(ds.inj_left, random_prep(b, a, rng));
      BornDecomposition dl = born_decompose(left, ds);
      o.require(dl.z == zero_arrow(unit_object(), ds.object, b), where + " left image");
      o.require(sqnorm(dl.y) == sqnorm(left), where + " left norm");
    }
  }
  if (o.pass) o.note = "200 preparations on each of " + names(bs);
  return o;
}

bool unitary_both_ways(const Arrow& f) {
  return compose(adjoint(f), f) == identity(f.dom(), f.backend()) &&
         compose(f, adjoint(f)) == identity(f.cod(), f.backend());
}

Outcome distributors() {
  Outcome o;
  int triples = 0;
  for (BackendId b : {BackendId::Rat, BackendId::F5}) {
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 1; j <= 3; ++j)
        for (std::size_t k = 1; k <= 3; ++k) {
          FinObject a = make_object("a", i), x = make_object("b", j), y = make_object("c", k);
          const std::string where = std::string(backend_name(b)) + " " + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k);
          o.require(unitary_both_ways(distributor_x(a, x, y, b)), "x " + where);
          o.require(unitary_both_ways(distributor_y(a, x, y, b)), "y " + where);
          ++triples;
        }
  }
  if (o.pass) o.note = std::to_string(triples) + " size triples over rat,f5";
  return o;
}

Outcome symmetric_split() {
  Outcome o;
  const BackendId b = BackendId::QSqrt2;
  for (std::size_t n = 1; n <= 3; ++n) {
    FinObject a = make_object("a", n);
    SymTensorResult s = s_tensor(a, b);
    o.require(s.object.size() == n * (n + 1) / 2, "symmetric dim at " + std::to_string(n));
    BiArrow sum = post_compose(adjoint(s.p), s.sigma);
    if (n > 1) {
      SymTensorResult t = a_tensor(a, b);
      o.require(t.object.size() == n * (n - 1) / 2, "antisymmetric dim at " + std::to_string(n));
      sum = add_biarrows(sum, post_compose(adjoint(t.p), t.sigma));
    }
    o.require(sum == kappa_biarrow(a, a, b), "decomposition at " + std::to_string(n));
  }
  if (o.pass) o.note = "|A| = 1..3 exact, dims n(n+1)/2 and n(n-1)/2";
  return o;
}

// d^A and d^B have the same nonzero spectrum: char-polys agree after padding
// with powers of λ up to the other side's size.
bool padded_polys_agree(const Arrow& c) {
  Arrow da = partial_trace_A(c).matrix, db = partial_trace_B(c).matrix;
  Poly pa = poly_shift(characteristic_polynomial(da), db.rows());
  Poly pb = poly_shift(characteristic_polynomial(db), da.rows());
  return poly_equal(pa, pb);
}

Outcome equal_spectrum(BackendId b, std::size_t count) {
  Outcome o;
  Rng rng(701);
  for (std::size_t i = 0; i < count; ++i) {
    FinObject a = random_object(rng, "a", 3), c = random_object(rng, "b", 3);
    Arrow state = random_prep(b, tensor_object(a, c), rng);
    o.require(compare_spectra(state).match, "state " + std::to_string(i));
    if (backend(b).caps.is_exact) o.require(padded_polys_agree(state), "poly " + std::to_string(i));
  }
  // The normalized Bell state needs 1/√2, so the exact case runs in Q(√2).
  const BackendId bell_backend = b == BackendId::Cplx64 ? b : BackendId::QSqrt2;
  Scalar h = b == BackendId::Cplx64 ? Scalar::complex({1 / std::sqrt(2.0), 0})
                                    : Scalar::quadratic(Rational(0), Rational(1, 2));
  Scalar z = Scalar::zero(bell_backend);
  FinObject q = make_object("a", 2);
  Arrow bell = prep_from(tensor_object(q, q), {h, z, z, h});
  Arrow half = lift_scalar(h * h, q);
  o.require(partial_trace_A(bell).matrix == half && partial_trace_B(bell).matrix == half,
            "Bell reduced states");
  o.require(compare_spectra(bell).match, "Bell spectra");
  if (o.pass) {
    o.note = std::to_string(count) + " random states over " + std::string(backend_name(b)) +
             "; Bell d^A = d^B = id/2 over " + std::string(backend_name(bell_backend));
  }
  return o;
}

Outcome no_cloning() {
  Outcome o;
  std::vector<BackendId> fields;
  for (BackendId b : all_backends()) {
    if (!backend(b).caps.is_field()) continue;
    fields.push_back(b);
    Cloner cl = build_cloner(unit_object(), b);
    o.require(verify_cloner(unit_object(), cl.c, cl.w).ok(),
              "unit cloner over " + std::string(backend_name(b)));
  }
  const BackendId b = BackendId::Gauss;
  const FinObject a = make_object("a", 2);
  Rng rng(801);
  auto refuted = [&](const Arrow& c, const Arrow& w, const std::string& what) {
    CloneWitness r = verify_cloner(a, c, w);
    o.require(!r.ok(), what + " was not refuted");
    if (r.ok()) return;
    Arrow lhs = compose(c, kappa(*r.a, *r.b));
    o.require(lhs == *r.lhs, what + ": lhs does not recompute");
    o.require(!(lhs == *r.rhs), what + ": lhs equals rhs");
    // Independently: no nonzero w' gives lhs = (a⊗a)⊗w'.
    Arrow xx = kappa(*r.a, *r.a);
    const std::size_t nw = r.b->cols();
    std::size_t k = 0;
    while (xx.at(0, k).is_zero()) ++k;
    Arrow wp = Arrow::from_function(unit_object(), r.b->cod(), b, [&](std::size_t, std::size_t j) {
      return s_div(lhs.at(0, k * nw + j), xx.at(0, k));
    });
    o.require(wp.is_zero() || !(kappa(xx, wp) == lhs), what + ": lhs has the cloned shape");
  };
  int candidates = 0;
  for (int i = 0; i < 50; ++i, ++candidates) {
    FinObject w = random_object(rng, "w", 2);
    Arrow c = random_arrow(b, tensor_object(a, w), tensor_object(tensor_object(a, a), w), rng);
    refuted(c, random_nonzero_prep(b, w, rng), "random candidate " + std::to_string(i));
  }
  refuted(copy_candidate(a, unit_object(), b), point_prep(unit_object(), 0, b), "copy candidate");
  ++candidates;
  if (o.pass) {
    o.note = "unit cloner ok over " + names(fields) + "; " + std::to_string(candidates) +
             " candidates refuted over gauss";
  }
  return o;
}

Outcome product_states() {
  Outcome o;
  std::size_t states = 0, products = 0;
  for (BackendId b : {BackendId::F2, BackendId::F3}) {
    const std::size_t p = backend(b).caps.characteristic;
    FinObject a = make_object("a", 2), c = make_object("b", 2);
    std::vector<Scalar> field;
    for (std::size_t k = 0; k < p; ++k) field.push_back(parse_scalar(b, std::to_string(k)));
    std::vector<Arrow> left, right;
    for (const auto& x : field)
      for (const auto& y : field) {
        left.push_back(prep_from(a, {x, y}));
        right.push_back(prep_from(c, {x, y}));
      }
    std::vector<Arrow> kron;
    for (const auto& x : left)
      for (const auto& y : right) kron.push_back(kappa(x, y));
    const std::size_t n = p * p * p * p;
    for (std::size_t code = 0; code < n; ++code) {
      std::vector<Scalar> coords;
      for (std::size_t k = 0, r = code; k < 4; ++k, r /= p) coords.push_back(field[r % p]);
      Arrow state = prep_from(tensor_object(a, c), coords);
      const bool brute = std::any_of(kron.begin(), kron.end(),
                                     [&](const Arrow& t) { return t == state; });
      o.require(brute == is_product_state(state),
                std::string(backend_name(b)) + " state " + std::to_string(code));
      ++states;
      products += brute;
    }
  }
  if (o.pass) {
    o.note = std::to_string(states) + " states over f2,f3 agree with brute force (" +
             std::to_string(products) + " products)";
  }
  return o;
}

Outcome negative_capabilities() {
  Outcome o;
  std::size_t checked = 0;
  for (BackendId b : {BackendId::Bool, BackendId::F2}) {
    const CapabilitySet& caps = backend(b).caps;
    SuiteConfig cfg;
    cfg.backend = b;
    cfg.trials = 50;
    for (const auto& law : law_registry())
      if (law.topic == "quantic") cfg.only.push_back(law.id);
    LawReport r = run_suite(cfg);
    for (const auto& res : r.results) {
      const std::string missing = find_law(res.law_id)->missing(caps);
      LawStatus predicted = LawStatus::Pass;
      if (!missing.empty()) {
        predicted = LawStatus::NotApplicable;
      } else if (res.law_id == "qcat-minus-one" && caps.characteristic == 2) {
        predicted = LawStatus::Fail;
      }
      o.require(res.status == predicted, std::string(backend_name(b)) + " " + res.law_id +
                                             " is " + std::string(status_name(res.status)));
      ++checked;
    }
  }
  std::size_t others = 0;
  for (const auto& m : standard_fixtures()) {
    FixtureFindings f = analyze_fixture(m);
    if (m.size() == 1) {
      o.require(f.trivial, m.name + " is not trivial");
    } else {
      o.require(!f.has_u_coproduct, m.name + " has a u-coproduct");
      ++others;
    }
  }
  if (o.pass) {
    o.note = std::to_string(checked) + " gated law results on bool,f2 as predicted; singleton trivial; " +
             std::to_string(others) + " other fixtures without u-coproduct";
  }
  return o;
}

Outcome dsl() {
  Outcome o;
  using namespace qcat::testing;
  Workspace ws = sample_workspace(BackendId::Rat, 11);
  TermGen gen{Rng(1101)};
  for (int i = 0; i < 1000; ++i) {
    const Ty d = static_cast<Ty>(gen.rng.below(kTypes));
    const Ty c = static_cast<Ty>(gen.rng.below(kTypes));
    Term t = gen.gen(d, c, static_cast<int>(gen.rng.below(5)));
    const std::string text = pretty(t);
    o.require(parse_term(text) == t && pretty(parse_term(text)) == text, "round trip: " + text);
  }
  std::size_t identities = 0;
  for (BackendId b : {BackendId::Rat, BackendId::Gauss, BackendId::F5, BackendId::QSqrt2}) {
    Workspace w = sample_workspace(b, 7);
    for (const auto& [lhs, rhs] : golden_identities()) {
      o.require(eval(parse_term(lhs), w) == eval(parse_term(rhs), w),
                std::string(backend_name(b)) + ": " + lhs + " = " + rhs);
      ++identities;
    }
  }
  o.require(golden_identities().size() >= 10, "fewer than 10 identities");
  for (BackendId b : all_backends()) {
    Rng rng(1111);
    std::string text;
    for (int i = 0; i < 5; ++i) {
      FinObject d = random_object(rng, "d", 4), c = random_object(rng, "c", 4);
      text += format_arrow("m" + std::to_string(i), random_arrow(b, d, c, rng));
    }
    std::string again;
    for (const auto& named : parse_arrows(text)) again += format_arrow(named.name, named.arrow);
    o.require(again == text, std::string(backend_name(b)) + " arrow file round trip");
  }
  if (o.pass) {
    o.note = "1000 terms round-trip; " + std::to_string(golden_identities().size()) +
             " identities x 4 backends; arrow files bit-exact on " + names(all_backends());
  }
  return o;
}

Outcome complex_repeat() {
  Outcome o;
  const std::vector<BackendId> cplx{BackendId::Cplx64};
  for (const auto& [label, sub] :
       std::vector<std::pair<std::string, Outcome>>{{"hom addition", hom_addition(cplx)},
                                                    {"Born", born_rule(cplx)},
                                                    {"spectra", equal_spectrum(BackendId::Cplx64, 100)}}) {
    o.require(sub.pass, label + ": " + sub.note);
  }
  if (o.pass) o.note = "criteria 3, 4, 7 on cplx64 within 1e-9";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, golden_rotation},
      {2, full_suite},
      {3, [] { return hom_addition(exact_backends()); }},
      {4, [] { return born_rule(exact_backends()); }},
      {5, distributors},
      {6, symmetric_split},
      {7, [] { return equal_spectrum(BackendId::Gauss, 100); }},
      {8, no_cloning},
      {9, product_states},
      {10, negative_capabilities},
      {11, dsl},
      {12, complex_repeat},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("raised ") + e.what();
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s\n", n, o.pass ? "PASS" : "FAIL", o.note.c_str());
    std::fflush(stdout);
  }
  return failed;
}
