// Copyright 2026 The walshgl Authors.
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

#include "walshgl/export.h"

#include <sstream>

#include "json.hpp"
#include "walshgl/rng.h"

namespace walshgl {
namespace {

using nlohmann::ordered_json;

ordered_json key_json(const HeavyKey& k, int n, int m) {
  ordered_json j;
  j["a"] = to_bit_string(k.a, n);
  if (k.b) j["b"] = to_bit_string(*k.b, m);
  return j;
}

ordered_json params_json(const GLParams& p) {
  ordered_json j;
  j["epsilon"] = p.epsilon;
  j["delta"] = p.delta;
  j["l"] = p.l;
  j["s"] = p.s;
  j["count_threshold"] = p.count_threshold();
  return j;
}

ordered_json interval_json(const ProportionInterval& i) {
  return ordered_json::array({i.lower, i.upper});
}

}  // namespace

std::string heavy_list_to_json(const HeavyList& list, const GLRunInfo& info) {
  ordered_json j;
  j["params"] = params_json(info.params);
  j["params"]["delta_requested"] = info.delta_requested;
  j["params"]["strict_confidence"] = info.strict_confidence;
  j["n"] = list.n;
  if (list.m > 0) j["m"] = list.m;
  ordered_json entries = ordered_json::array();
  for (const HeavyEntry& e : list.entries) {
    ordered_json row = key_json(e.key(), list.n, list.m);
    row["count"] = e.count;
    if (e.exact_s) row["exact_S"] = *e.exact_s;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["queries"] = list.queries;
  j["seed"] = info.seed;
  j["mode"] = to_string(info.mode);
  j["rng"] = "splitmix64/v" + std::to_string(kRngVersion);
  if (info.verification) {
    const VerificationReport& v = *info.verification;
    ordered_json vj;
    vj["complete"] = v.complete;
    vj["sound"] = v.sound;
    vj["missing"] = ordered_json::array();
    for (const HeavyKey& k : v.missing) vj["missing"].push_back(key_json(k, list.n, list.m));
    vj["unsound"] = ordered_json::array();
    for (const HeavyKey& k : v.unsound) vj["unsound"].push_back(key_json(k, list.n, list.m));
    j["verification"] = std::move(vj);
  }
  return j.dump(2) + "\n";
}

std::string heavy_list_to_csv(const HeavyList& list) {
  std::ostringstream out;
  out << "a,b,count,exact_S\n";
  for (const HeavyEntry& e : list.entries) {
    out << to_bit_string(e.a, list.n) << ',';
    if (e.b) out << to_bit_string(*e.b, list.m);
    out << ',' << e.count << ',';
    if (e.exact_s) out << ordered_json(*e.exact_s).dump();
    out << '\n';
  }
  return out.str();
}

std::string trial_report_to_json(const TrialReport& r, int n, int m) {
  ordered_json j;
  j["fixture"] = r.fixture;
  j["params"] = params_json(r.params);
  j["params"]["epsilon"] = r.epsilon.value();
  j["params"]["delta_requested"] = r.delta;
  j["params"]["strict_confidence"] = r.strict_confidence;
  j["mode"] = to_string(r.mode);
  j["runs"] = r.runs;
  j["base_seed"] = r.base_seed;
  j["rng"] = "splitmix64/v" + std::to_string(kRngVersion);
  if (r.designated) {
    j["designated"] = key_json(*r.designated, n, m);
  } else {
    j["designated"] = nullptr;
  }
  j["completeness_vacuous"] = r.completeness_vacuous();

  ordered_json rates;
  rates["completeness_failures"] = r.completeness_failures;
  rates["completeness_failure_rate"] = r.completeness_failure_rate;
  rates["completeness_interval"] = interval_json(r.completeness_interval);
  rates["soundness_failures"] = r.soundness_failures;
  rates["soundness_failure_rate"] = r.soundness_failure_rate;
  rates["soundness_interval"] = interval_json(r.soundness_interval);
  rates["simultaneous_failures"] = r.simultaneous_failures;
  rates["simultaneous_failure_rate"] = r.simultaneous_failure_rate;
  j["results"] = std::move(rates);

  ordered_json gate;
  gate["bound"] = r.gate_bound;
  gate["completeness_ok"] = r.completeness_gate;
  gate["soundness_ok"] = r.soundness_gate;
  gate["passed"] = r.passed();
  j["gate"] = std::move(gate);

  ordered_json runs = ordered_json::array();
  for (const RunOutcome& o : r.outcomes) {
    ordered_json row;
    row["seed"] = o.seed;
    row["completeness_ok"] = o.completeness_ok;
    row["soundness_ok"] = o.soundness_ok;
    row["all_heavy_found"] = o.all_heavy_found;
    row["list_size"] = o.list_size;
    runs.push_back(std::move(row));
  }
  j["outcomes"] = std::move(runs);
  return j.dump(2) + "\n";
}

std::string trial_report_csv_header() {
  return "fixture,epsilon,delta,l,s,runs,completeness_failure_rate,"
         "soundness_failure_rate,simultaneous_failure_rate,gate_bound,passed\n";
}

std::string trial_report_csv_row(const TrialReport& r) {
  auto num = [](double v) { return ordered_json(v).dump(); };
  std::ostringstream out;
  out << r.fixture << ',' << num(r.epsilon.value()) << ',' << num(r.delta) << ','
      << r.params.l << ',' << num(r.params.s) << ',' << r.runs << ','
      << num(r.completeness_failure_rate) << ',' << num(r.soundness_failure_rate)
      << ',' << num(r.simultaneous_failure_rate) << ',' << num(r.gate_bound)
      << ',' << (r.passed() ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace walshgl
