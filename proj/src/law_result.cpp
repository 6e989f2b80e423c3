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

#include "qcat/law_result.hpp"

#include <algorithm>

#include "qcat/error.hpp"

namespace qcat {

namespace {

bool still_fails(const Instance& candidate, const Property& holds) {
  try {
    return !holds(candidate);
  } catch (const Error&) {
    return false;
  }
}

FinObject without_label(const FinObject& o, std::size_t drop) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i != drop) labels.push_back(o.label(i));
  }
  return FinObject(std::move(labels));
}

Arrow drop_from(const Arrow& f, const FinObject& target, std::size_t drop) {
  bool in_dom = f.dom() == target, in_cod = f.cod() == target;
  if (!in_dom && !in_cod) return f;
  FinObject dom = in_dom ? without_label(f.dom(), drop) : f.dom();
  FinObject cod = in_cod ? without_label(f.cod(), drop) : f.cod();
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (in_dom && i == drop) continue;
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (in_cod && j == drop) continue;
      entries.push_back(f.at(i, j));
    }
  }
  return Arrow(dom, cod, f.backend(), std::move(entries));
}

bool zero_pass(Instance& inst, const Property& holds) {
  bool progress = false;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    for (std::size_t e = 0; e < inst[k].arrow.entries().size(); ++e) {
      const Arrow& f = inst[k].arrow;
      if (f.entries()[e].is_zero()) continue;
      std::vector<Scalar> entries(f.entries().begin(), f.entries().end());
      entries[e] = Scalar::zero(f.backend());
      Instance candidate = inst;
      candidate[k].arrow = Arrow(f.dom(), f.cod(), f.backend(), std::move(entries));
      if (still_fails(candidate, holds)) {
        inst = std::move(candidate);
        progress = true;
      }
    }
  }
  return progress;
}

bool object_pass(Instance& inst, const Property& holds) {
  std::vector<FinObject> objects;
  for (const auto& named : inst) {
    for (const FinObject* o : {&named.arrow.dom(), &named.arrow.cod()}) {
      if (std::find(objects.begin(), objects.end(), *o) == objects.end()) {
        objects.push_back(*o);
      }
    }
  }
  for (const auto& o : objects) {
    if (o.size() < 2) continue;
    for (std::size_t drop = 0; drop < o.size(); ++drop) {
      Instance candidate;
      for (const auto& named : inst) {
        candidate.push_back({named.name, drop_from(named.arrow, o, drop)});
      }
      if (still_fails(candidate, holds)) {
        inst = std::move(candidate);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view status_name(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "PASS";
    case LawStatus::Fail: return "FAIL";
    case LawStatus::NotApplicable: return "N/A";
  }
  return "?";
}

Instance shrink_counterexample(Instance failing, const Property& holds) {
  for (int round = 0; round < 64; ++round) {
    bool progress = zero_pass(failing, holds);
    progress = object_pass(failing, holds) || progress;
    if (!progress) break;
  }
  return failing;
}

LawResult check_property(std::string law_id, std::size_t trials, Rng& rng,
                         const std::function<Instance(Rng&)>& generate,
                         const Property& holds) {
  LawRecorder rec(std::move(law_id));
  for (std::size_t t = 0; t < trials && !rec.failed(); ++t) {
    Instance inst = generate(rng);
    if (inst.empty()) continue;
    bool ok = holds(inst);
    if (!ok) inst = shrink_counterexample(std::move(inst), holds);
    rec.record(ok, inst, ok ? "" : "property violated");
  }
  return rec.finish();
}

void LawRecorder::record(bool holds, const Instance& witness,
                         std::string_view detail) {
  ++result_.instances;
  if (!holds && result_.status != LawStatus::Fail) {
    result_.status = LawStatus::Fail;
    result_.witness = witness;
    result_.detail = std::string(detail);
  }
}

void LawRecorder::merge(const LawResult& sub) {
  result_.instances += sub.instances;
  if (sub.status == LawStatus::Fail && result_.status != LawStatus::Fail) {
    result_.status = LawStatus::Fail;
    result_.witness = sub.witness;
    result_.detail = sub.detail;
  }
}

LawResult LawRecorder::finish() const {
  LawResult out = result_;
  if (out.status == LawStatus::Pass && out.instances == 0) {
    out.status = LawStatus::Fail;
    out.detail = "vacuous: no instance exercised";
  }
  return out;
}

LawResult not_applicable(std::string law_id, std::string missing) {
  LawResult r;
  r.law_id = std::move(law_id);
  r.status = LawStatus::NotApplicable;
  r.detail = std::move(missing);
  return r;
}

}  // namespace qcat
