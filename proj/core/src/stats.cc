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

#include "walshgl/stats.h"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace walshgl {

double hoeffding_failure_bound(uint64_t l, double eps) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("epsilon must satisfy 0 < eps <= 1");
  }
  const double dev = eps * eps / 4.0;
  return std::exp(-2.0 * static_cast<double>(l) * dev * dev);
}

double binomial_acceptance_bound(double delta, uint64_t runs) {
  if (runs == 0) throw std::invalid_argument("runs must be positive");
  return delta + 3.0 * std::sqrt(delta * (1.0 - delta) / static_cast<double>(runs));
}

ProportionInterval wilson_interval(uint64_t successes, uint64_t trials,
                                   double z) {
  if (trials == 0) return {};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half =
      z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  // The closed form leaves rounding residue at the endpoints.
  const double lower = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double upper = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lower, upper};
}

double distribution_distance(const std::map<uint64_t, uint64_t>& counts,
                             const WalshSpectrum& exact) {
  uint64_t total = 0;
  for (const auto& [w, c] : counts) {
    if (w >= exact.size()) throw std::invalid_argument("outcome out of range");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("empirical counts are empty");
  double sum = 0.0;
  for (uint64_t w = 0; w < exact.size(); ++w) {
    auto it = counts.find(w);
    const double q =
        it == counts.end() ? 0.0
                           : static_cast<double>(it->second) / static_cast<double>(total);
    sum += std::abs(q - exact.probability(w));
  }
  return sum / 2.0;
}

ChiSquareResult chi_square_goodness_of_fit(std::span<const uint64_t> counts,
                                           std::span<const double> probabilities) {
  if (counts.size() != probabilities.size()) {
    throw std::invalid_argument("counts and probabilities differ in length");
  }
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("empirical counts are empty");
  ChiSquareResult out;
  uint64_t cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probabilities[i] * static_cast<double>(total);
    if (probabilities[i] <= 0.0) {
      if (counts[i] != 0) {
        out.statistic = INFINITY;
        out.p_value = 0.0;
        return out;
      }
      continue;
    }
    ++cells;
    const double diff = static_cast<double>(counts[i]) - expected;
    out.statistic += diff * diff / expected;
  }
  out.degrees_of_freedom = cells > 0 ? cells - 1 : 0;
  if (out.degrees_of_freedom == 0) {
    out.p_value = 1.0;
    return out;
  }
  // Upper tail of chi^2_k is Q(k/2, x/2).
  out.p_value = boost::math::gamma_q(
      static_cast<double>(out.degrees_of_freedom) / 2.0, out.statistic / 2.0);
  return out;
}

namespace {

// Non-owning adapter so per-component samplers built once can be handed out
// by a factory on every run.
class BorrowedSampler final : public OutcomeSampler {
 public:
  explicit BorrowedSampler(OutcomeSampler& inner) : inner_(inner) {}
  uint64_t draw(SplitMix64& rng) override { return inner_.draw(rng); }
  int width() const override { return inner_.width(); }

 private:
  OutcomeSampler& inner_;
};

GLParams harness_params(const Threshold& eps, double delta,
                        const MonteCarloOptions& options) {
  GLParams params = options.strict_confidence
                        ? derive_params_strict(eps.value(), delta)
                        : derive_params(eps.value(), delta);
  if (!(options.threshold_scale > 0.0)) {
    throw std::invalid_argument("threshold scale must be positive");
  }
  params.s *= options.threshold_scale;
  if (params.s > static_cast<double>(params.l)) {
    params.s = static_cast<double>(params.l);
  }
  return params;
}

void check_runs(uint64_t runs) {
  if (runs < kMinMonteCarloRuns) {
    throw std::invalid_argument("Monte Carlo validation needs at least " +
                                std::to_string(kMinMonteCarloRuns) +
                                " runs, got " + std::to_string(runs));
  }
}

void finalize(TrialReport& report) {
  const double runs = static_cast<double>(report.runs);
  for (const RunOutcome& o : report.outcomes) {
    report.completeness_failures += o.completeness_ok ? 0 : 1;
    report.soundness_failures += o.soundness_ok ? 0 : 1;
    report.simultaneous_failures += o.all_heavy_found ? 0 : 1;
  }
  report.completeness_failure_rate =
      static_cast<double>(report.completeness_failures) / runs;
  report.soundness_failure_rate =
      static_cast<double>(report.soundness_failures) / runs;
  report.simultaneous_failure_rate =
      static_cast<double>(report.simultaneous_failures) / runs;
  report.completeness_interval =
      wilson_interval(report.completeness_failures, report.runs);
  report.soundness_interval = wilson_interval(report.soundness_failures, report.runs);
  report.gate_bound = binomial_acceptance_bound(report.delta, report.runs);
  report.completeness_gate = report.completeness_failure_rate <= report.gate_bound;
  report.soundness_gate = report.soundness_failure_rate <= report.gate_bound;
}

TrialReport start_report(const Threshold& eps, double delta, uint64_t runs,
                         uint64_t base_seed, const MonteCarloOptions& options) {
  check_runs(runs);
  TrialReport report;
  report.fixture = options.fixture;
  report.epsilon = eps;
  report.delta = delta;
  report.params = harness_params(eps, delta, options);
  report.strict_confidence = options.strict_confidence;
  report.mode = options.mode;
  report.runs = runs;
  report.base_seed = base_seed;
  return report;
}

}  // namespace

TrialReport monte_carlo_theorem1(const BooleanFunction& f, const Threshold& eps,
                                 double delta, uint64_t runs,
                                 uint64_t base_seed,
                                 const MonteCarloOptions& options) {
  TrialReport report = start_report(eps, delta, runs, base_seed, options);
  const WalshSpectrum spectrum = fwht(f);
  const std::vector<uint64_t> heavy = heavy_set_exact(spectrum, eps);

  if (options.designated) {
    if (options.designated->b || options.designated->a >= spectrum.size() ||
        !eps.admits(spectrum[options.designated->a], spectrum.num_vars())) {
      throw std::invalid_argument(
          "designated coefficient is not heavy at the requested epsilon");
    }
    report.designated = options.designated;
  } else if (!heavy.empty()) {
    uint64_t best = heavy.front();
    for (uint64_t a : heavy) {
      if (std::llabs(spectrum[a]) > std::llabs(spectrum[best])) best = a;
    }
    report.designated = HeavyKey{best, std::nullopt};
  }

  std::unique_ptr<OutcomeSampler> sampler =
      options.mode == SamplerMode::kSpectral
          ? std::make_unique<SpectralSampler>(spectrum)
          : make_dj_sampler(f, options.mode);

  report.outcomes.reserve(runs);
  for (uint64_t r = 0; r < runs; ++r) {
    RunOutcome o;
    o.seed = derive_seed(base_seed, r);
    HeavyList list = run_algorithm1(*sampler, report.params, o.seed);
    VerificationReport v = verify_against_oracle(spectrum, list, eps);
    o.list_size = list.entries.size();
    o.completeness_ok =
        !report.designated || list.contains(report.designated->a);
    o.soundness_ok = v.sound;
    o.all_heavy_found = v.complete;
    report.outcomes.push_back(o);
  }
  finalize(report);
  return report;
}

TrialReport monte_carlo_theorem2(const VectorialFunction& F,
                                 const Threshold& eps, double delta,
                                 uint64_t runs, uint64_t base_seed,
                                 const MonteCarloOptions& options) {
  TrialReport report = start_report(eps, delta, runs, base_seed, options);
  const std::vector<WalshSpectrum> lat = linear_approximation_table(F);
  const int n = F.num_inputs();

  if (options.designated) {
    const HeavyKey& d = *options.designated;
    if (!d.b || *d.b == 0 || *d.b >= lat.size() || d.a >= lat[*d.b].size() ||
        !eps.admits(lat[*d.b][d.a], n)) {
      throw std::invalid_argument(
          "designated (a, b) pair is not heavy at the requested epsilon");
    }
    report.designated = d;
  } else {
    for (uint32_t b = 1; b < lat.size(); ++b) {
      for (uint64_t a : heavy_set_exact(lat[b], eps)) {
        if (!report.designated ||
            std::llabs(lat[b][a]) >
                std::llabs(lat[*report.designated->b][report.designated->a])) {
          report.designated = HeavyKey{a, b};
        }
      }
    }
  }

  std::vector<std::unique_ptr<OutcomeSampler>> samplers(lat.size());
  for (uint32_t b = 1; b < lat.size(); ++b) {
    samplers[b] = options.mode == SamplerMode::kSpectral
                      ? std::make_unique<SpectralSampler>(lat[b])
                      : make_qwt_sampler(F, b, options.mode);
  }
  auto factory = [&samplers](uint32_t b) -> std::unique_ptr<OutcomeSampler> {
    return std::make_unique<BorrowedSampler>(*samplers[b]);
  };

  report.outcomes.reserve(runs);
  for (uint64_t r = 0; r < runs; ++r) {
    RunOutcome o;
    o.seed = derive_seed(base_seed, r);
    HeavyList list =
        run_algorithm2(n, F.num_outputs(), factory, report.params, o.seed);
    VerificationReport v = verify_against_oracle(lat, list, eps);
    o.list_size = list.entries.size();
    o.completeness_ok =
        !report.designated ||
        list.contains(report.designated->a, *report.designated->b);
    o.soundness_ok = v.sound;
    o.all_heavy_found = v.complete;
    report.outcomes.push_back(o);
  }
  finalize(report);
  return report;
}

}  // namespace walshgl
