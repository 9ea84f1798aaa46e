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

#ifndef WALSHGL_EXPORT_H_
#define WALSHGL_EXPORT_H_

#include <cstdint>
#include <optional>
#include <string>

#include "walshgl/gl.h"
#include "walshgl/sampler.h"
#include "walshgl/stats.h"

namespace walshgl {

// Context echoed alongside a heavy list.
struct GLRunInfo {
  GLParams params;
  double delta_requested = 0.0;
  bool strict_confidence = false;
  uint64_t seed = 0;
  SamplerMode mode = SamplerMode::kSpectral;
  std::optional<VerificationReport> verification;
};

// {"params": {"epsilon", "delta", "l", "s", ...}, "entries": [{"a", "b"?,
//  "count", "exact_S"?}], "queries", "seed", ...}. Bit vectors are binary
// strings, x_1 first. Output is deterministic for equal inputs.
std::string heavy_list_to_json(const HeavyList& list, const GLRunInfo& info);

// "a,b,count,exact_S" rows; b and exact_S are empty when absent.
std::string heavy_list_to_csv(const HeavyList& list);

std::string trial_report_to_json(const TrialReport& report, int n, int m);

// One summary row per fixture for batch sweeps.
std::string trial_report_csv_header();
std::string trial_report_csv_row(const TrialReport& report);

}  // namespace walshgl

#endif  // WALSHGL_EXPORT_H_
