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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "walshgl/anf.h"
#include "walshgl/errors.h"
#include "walshgl/export.h"
#include "walshgl/formats.h"
#include "walshgl/gl.h"
#include "walshgl/qsim.h"
#include "walshgl/sampler.h"
#include "walshgl/stats.h"
#include "walshgl/walsh.h"

namespace walshgl::cli {
namespace {

// Default total oracle work, in spectrum cells (components x 2^n).
constexpr uint64_t kDefaultOracleBudget = uint64_t{1} << 32;

// Raised for failures that carry their own exit code.
struct CliFailure {
  int code;
  std::string message;
};

struct RunConfig {
  std::string command;
  std::string anf;
  std::string tt_path;
  std::string sbox_path;
  std::optional<int> anf_vars;
  std::optional<uint32_t> component;
  std::string eps_literal = "0.4";
  double delta = 0.05;
  uint64_t seed = 1;
  std::string mode = "spectral";
  bool strict_confidence = false;
  bool verify = false;
  uint64_t runs = 200;
  uint64_t draws = 1;
  std::size_t top = 8;
  std::string out_path;
  std::string format;
  std::string amplitudes_path;
  std::string w0;
  std::optional<uint32_t> b0;
  double threshold_scale = 1.0;
};

using Input = std::variant<BooleanFunction, VectorialFunction>;

std::optional<long> env_long(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0') {
    throw CliFailure{kUsage, std::string(name) + " must be an integer"};
  }
  return v;
}

int max_variables() {
  int cap = kMaxVariables;
  if (auto v = env_long("WALSHGL_MAX_N")) {
    if (*v < 1) throw CliFailure{kUsage, "WALSHGL_MAX_N must be >= 1"};
    cap = static_cast<int>(std::min<long>(cap, *v));
  }
  return cap;
}

uint64_t oracle_budget() {
  uint64_t budget = kDefaultOracleBudget;
  if (auto v = env_long("WALSHGL_ORACLE_BUDGET")) {
    if (*v < 1) throw CliFailure{kUsage, "WALSHGL_ORACLE_BUDGET must be >= 1"};
    budget = std::min<uint64_t>(budget, static_cast<uint64_t>(*v));
  }
  return budget;
}

Input load_input(const RunConfig& cfg) {
  int sources = !cfg.anf.empty() + !cfg.tt_path.empty() + !cfg.sbox_path.empty();
  if (sources != 1) {
    throw CliFailure{kUsage,
                     "exactly one of --anf, --tt, --sbox must be given"};
  }
  Input input = [&]() -> Input {
    if (!cfg.anf.empty()) return parse_anf(cfg.anf, cfg.anf_vars);
    if (!cfg.tt_path.empty()) return read_tt_file(cfg.tt_path);
    return read_sbox_file(cfg.sbox_path);
  }();
  const int n = std::visit(
      [](const auto& f) {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, BooleanFunction>) {
          return f.num_vars();
        } else {
          return f.num_inputs();
        }
      },
      input);
  const int cap = max_variables();
  if (n > cap) {
    throw CapacityError("input has n=" + std::to_string(n) +
                        " variables; the capacity cap is " + std::to_string(cap));
  }
  return input;
}

// The single-output function a command operates on: the input itself, or
// the --component of an S-box.
BooleanFunction single_output(const Input& input, const RunConfig& cfg,
                              const char* command) {
  if (const auto* f = std::get_if<BooleanFunction>(&input)) {
    if (cfg.component) {
      throw CliFailure{kUsage, "--component only applies to --sbox inputs"};
    }
    return *f;
  }
  if (!cfg.component) {
    throw CliFailure{kUsage, std::string(command) +
                                 " on an --sbox input needs --component <b>"};
  }
  return std::get<VectorialFunction>(input).component(*cfg.component);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw CliFailure{kUsage, "cannot write '" + cfg.out_path + "'"};
  file << payload;
}

Threshold parse_eps(const RunConfig& cfg) {
  try {
    return Threshold::from_decimal(cfg.eps_literal);
  } catch (const std::exception&) {
    throw CliFailure{kUsage, "--eps '" + cfg.eps_literal +
                                 "' is invalid: epsilon must satisfy 0 < eps <= 1"};
  }
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw CliFailure{kUsage, "--delta must satisfy 0 < delta < 1"};
  }
}

std::string fmt_double(double v) { return nlohmann::json(v).dump(); }

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input input = load_input(cfg);
  const BooleanFunction f = single_output(input, cfg, "spectrum");
  const WalshSpectrum spectrum = fwht(f);
  const int n = spectrum.num_vars();

  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  std::ostringstream payload;
  if (format == "csv") {
    write_spectrum_csv(payload, spectrum);
  } else if (format == "bin") {
    write_spectrum_binary(payload, spectrum);
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["W"] = std::vector<int64_t>(spectrum.coeffs().begin(), spectrum.coeffs().end());
    payload << j.dump() << "\n";
  } else {
    throw CliFailure{kUsage, "spectrum --format must be csv, bin or json"};
  }
  emit(cfg, out, payload.str());

  const uint64_t parseval = spectrum.parseval_sum();
  const uint64_t expected = uint64_t{1} << (2 * n);
  err << "parseval: sum W^2 = " << parseval << " (expected 4^" << n << " = "
      << expected << ") " << (parseval == expected ? "ok" : "MISMATCH") << "\n";
  std::vector<uint64_t> order(spectrum.size());
  for (uint64_t a = 0; a < order.size(); ++a) order[a] = a;
  const std::size_t k = std::min<std::size_t>(cfg.top, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(k), order.end(),
                    [&](uint64_t x, uint64_t y) {
                      auto ax = std::llabs(spectrum[x]);
                      auto ay = std::llabs(spectrum[y]);
                      return ax != ay ? ax > ay : x < y;
                    });
  err << "top " << k << " |S|:\n";
  for (std::size_t i = 0; i < k; ++i) {
    err << "  " << to_bit_string(order[i], n) << "  W=" << spectrum[order[i]]
        << "  S=" << fmt_double(spectrum.correlation(order[i])) << "\n";
  }
  return kOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input input = load_input(cfg);
  const SamplerMode mode = parse_sampler_mode(cfg.mode);
  std::unique_ptr<OutcomeSampler> sampler;
  std::optional<QuantumState> state;
  int n = 0;
  int m = 0;
  if (const auto* f = std::get_if<BooleanFunction>(&input)) {
    if (cfg.component) {
      throw CliFailure{kUsage, "--component only applies to --sbox inputs"};
    }
    n = f->num_vars();
    if (mode == SamplerMode::kStateVector) {
      state = dj_state(*f);
      sampler = std::make_unique<StateVectorSampler>(*state, 0);
    } else {
      sampler = make_dj_sampler(*f, mode);
    }
  } else {
    const auto& F = std::get<VectorialFunction>(input);
    if (!cfg.component) {
      throw CliFailure{kUsage, "sample on an --sbox input needs --component <b>"};
    }
    n = F.num_inputs();
    m = F.num_outputs();
    if ((uint64_t{*cfg.component} >> m) != 0) {
      throw CliFailure{kUsage, "--component does not fit in m bits"};
    }
    if (mode == SamplerMode::kStateVector) {
      state = qwt_bf_state(F, *cfg.component);
      sampler = std::make_unique<StateVectorSampler>(*state, 0);
    } else {
      sampler = make_qwt_sampler(F, *cfg.component, mode);
    }
  }
  if (!cfg.amplitudes_path.empty()) {
    if (!state) {
      throw CliFailure{kUsage, "--amplitudes requires --mode statevector"};
    }
    std::ofstream file(cfg.amplitudes_path);
    if (!file) {
      throw CliFailure{kUsage, "cannot write '" + cfg.amplitudes_path + "'"};
    }
    write_amplitudes_csv(file, *state);
  }

  const std::vector<uint64_t> draws = sample_stream(*sampler, cfg.seed, cfg.draws);
  std::map<uint64_t, uint64_t> counts;
  for (uint64_t w : draws) ++counts[w];

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  std::ostringstream payload;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    if (m > 0) {
      j["m"] = m;
      j["b"] = to_bit_string(*cfg.component, m);
    }
    j["mode"] = to_string(mode);
    j["seed"] = cfg.seed;
    j["rng"] = "splitmix64/v" + std::to_string(kRngVersion);
    j["draws"] = nlohmann::ordered_json::array();
    for (uint64_t w : draws) j["draws"].push_back(to_bit_string(w, n));
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [w, c] : counts) j["counts"][to_bit_string(w, n)] = c;
    payload << j.dump(2) << "\n";
  } else if (format == "csv") {
    payload << "draw,bitstring\n";
    for (std::size_t i = 0; i < draws.size(); ++i) {
      payload << i << ',' << to_bit_string(draws[i], n) << '\n';
    }
  } else {
    throw CliFailure{kUsage, "sample --format must be json or csv"};
  }
  emit(cfg, out, payload.str());
  err << "drew " << draws.size() << " samples (" << to_string(mode)
      << " mode), " << counts.size() << " distinct outcomes\n";
  return kOk;
}

GLParams params_for(const Threshold& eps, const RunConfig& cfg) {
  check_delta(cfg.delta);
  return cfg.strict_confidence ? derive_params_strict(eps.value(), cfg.delta)
                               : derive_params(eps.value(), cfg.delta);
}

int cmd_gl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Threshold eps = parse_eps(cfg);
  const GLParams params = params_for(eps, cfg);
  const Input input = load_input(cfg);
  const SamplerMode mode = parse_sampler_mode(cfg.mode);
  if (cfg.component) {
    throw CliFailure{kUsage, "gl searches every component; drop --component"};
  }

  GLRunInfo info;
  info.params = params;
  info.delta_requested = cfg.delta;
  info.strict_confidence = cfg.strict_confidence;
  info.seed = cfg.seed;
  info.mode = mode;

  HeavyList list;
  if (const auto* f = std::get_if<BooleanFunction>(&input)) {
    list = run_algorithm1(*f, params, cfg.seed, mode);
    const bool feasible = f->size() <= oracle_budget();
    if (feasible) {
      const WalshSpectrum spectrum = fwht(*f);
      annotate_exact(list, spectrum);
      info.verification = verify_against_oracle(spectrum, list, eps);
    } else if (cfg.verify) {
      throw CliFailure{kVerificationInfeasible,
                       "verification requested but the exact spectrum exceeds "
                       "the oracle budget"};
    }
  } else {
    const auto& F = std::get<VectorialFunction>(input);
    const uint64_t cells = F.size() << F.num_outputs();
    if (cfg.verify && cells > oracle_budget()) {
      throw CliFailure{kVerificationInfeasible,
                       "verification requested but the exact LAT exceeds the "
                       "oracle budget"};
    }
    list = run_algorithm2(F, params, cfg.seed, mode);
    if (cells <= oracle_budget()) {
      const auto lat = linear_approximation_table(F);
      annotate_exact(list, lat);
      info.verification = verify_against_oracle(lat, list, eps);
    }
  }

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    emit(cfg, out, heavy_list_to_json(list, info));
  } else if (format == "csv") {
    emit(cfg, out, heavy_list_to_csv(list));
  } else {
    throw CliFailure{kUsage, "gl --format must be json or csv"};
  }

  err << "l=" << params.l << " s=" << fmt_double(params.s)
      << " threshold=" << params.count_threshold() << " queries=" << list.queries
      << " entries=" << list.entries.size() << "\n";
  if (info.verification) {
    err << "oracle check: complete=" << (info.verification->complete ? "yes" : "no")
        << " sound=" << (info.verification->sound ? "yes" : "no") << "\n";
  } else {
    err << "oracle check skipped: exact spectrum exceeds the oracle budget\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Threshold eps = parse_eps(cfg);
  check_delta(cfg.delta);
  if (cfg.runs < kMinMonteCarloRuns) {
    throw CliFailure{kUsage, "--runs must be at least " +
                                 std::to_string(kMinMonteCarloRuns)};
  }
  const Input input = load_input(cfg);
  if (cfg.component) {
    throw CliFailure{kUsage, "verify checks every component; drop --component"};
  }

  MonteCarloOptions options;
  options.mode = parse_sampler_mode(cfg.mode);
  options.strict_confidence = cfg.strict_confidence;
  options.threshold_scale = cfg.threshold_scale;

  TrialReport report;
  int n = 0;
  int m = 0;
  if (const auto* f = std::get_if<BooleanFunction>(&input)) {
    n = f->num_vars();
    if (f->size() > oracle_budget()) {
      throw CliFailure{kVerificationInfeasible,
                       "exact spectrum exceeds the oracle budget"};
    }
    if (cfg.b0) throw CliFailure{kUsage, "--b0 only applies to --sbox inputs"};
    if (!cfg.w0.empty()) {
      BitVector w0 = BitVector::parse(cfg.w0);
      if (w0.width != n) throw CliFailure{kUsage, "--w0 must have n bits"};
      options.designated = HeavyKey{w0.value, std::nullopt};
    }
    options.fixture = !cfg.anf.empty() ? "anf:" + cfg.anf : "tt:" + cfg.tt_path;
    report = monte_carlo_theorem1(*f, eps, cfg.delta, cfg.runs, cfg.seed, options);
  } else {
    const auto& F = std::get<VectorialFunction>(input);
    n = F.num_inputs();
    m = F.num_outputs();
    if ((F.size() << m) > oracle_budget()) {
      throw CliFailure{kVerificationInfeasible,
                       "exact LAT exceeds the oracle budget"};
    }
    if (!cfg.w0.empty() || cfg.b0) {
      if (cfg.w0.empty() || !cfg.b0) {
        throw CliFailure{kUsage, "--w0 and --b0 must be given together"};
      }
      BitVector w0 = BitVector::parse(cfg.w0);
      if (w0.width != n) throw CliFailure{kUsage, "--w0 must have n bits"};
      options.designated = HeavyKey{w0.value, *cfg.b0};
    }
    options.fixture = "sbox:" + cfg.sbox_path;
    report = monte_carlo_theorem2(F, eps, cfg.delta, cfg.runs, cfg.seed, options);
  }

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    emit(cfg, out, trial_report_to_json(report, n, m));
  } else if (format == "csv") {
    emit(cfg, out, trial_report_csv_header() + trial_report_csv_row(report));
  } else {
    throw CliFailure{kUsage, "verify --format must be json or csv"};
  }

  err << "runs=" << report.runs << " l=" << report.params.l
      << " threshold=" << report.params.count_threshold() << "\n";
  if (report.completeness_vacuous()) {
    err << "completeness: vacuous (no coefficient with |S| >= eps)\n";
  } else {
    err << "completeness failure rate " << fmt_double(report.completeness_failure_rate)
        << " (bound " << fmt_double(report.gate_bound) << ") "
        << (report.completeness_gate ? "PASS" : "FAIL") << "\n";
  }
  err << "soundness failure rate " << fmt_double(report.soundness_failure_rate)
      << " (bound " << fmt_double(report.gate_bound) << ") "
      << (report.soundness_gate ? "PASS" : "FAIL") << "\n";
  err << "all-heavy (simultaneous) failure rate "
      << fmt_double(report.simultaneous_failure_rate) << " (not gated)\n";
  return report.passed() ? kOk : kStatisticalFailure;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--anf", cfg.anf, "Inline ANF, e.g. \"x1+x2*x3\"");
  sub->add_option("--tt", cfg.tt_path, "Truth-table file (.tt)");
  sub->add_option("--sbox", cfg.sbox_path, "S-box file (.sbox)");
  sub->add_option("--n", cfg.anf_vars, "Variable count for --anf (default: largest index)");
  sub->add_option("--out", cfg.out_path, "Output file (default: stdout)");
}

void add_gl_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--eps", cfg.eps_literal, "Accuracy, 0 < eps <= 1")
      ->capture_default_str();
  sub->add_option("--delta", cfg.delta, "Failure probability, 0 < delta < 1")
      ->capture_default_str();
  sub->add_flag("--strict-confidence", cfg.strict_confidence,
                "Divide delta by floor(4/eps^2) for a simultaneous guarantee");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Heavy Walsh coefficients by simulated quantum sampling", "walshgl"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Exact Walsh spectrum");
  add_input_options(spectrum, cfg);
  spectrum->add_option("--component", cfg.component, "Output mask b for --sbox");
  spectrum->add_option("--format", cfg.format, "csv | bin | json");
  spectrum->add_option("--top", cfg.top, "Number of largest |S| to print")
      ->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Measure the sampling circuit");
  add_input_options(sample, cfg);
  sample->add_option("--component", cfg.component, "Output mask b for --sbox");
  sample->add_option("--draws", cfg.draws, "Number of measurements")
      ->capture_default_str();
  sample->add_option("--seed", cfg.seed)->capture_default_str();
  sample->add_option("--mode", cfg.mode, "spectral | statevector")
      ->capture_default_str();
  sample->add_option("--format", cfg.format, "json | csv");
  sample->add_option("--amplitudes", cfg.amplitudes_path,
                     "Dump the final state as CSV index,re,im (statevector)");

  auto* gl = app.add_subcommand("gl", "Heavy-coefficient search");
  add_input_options(gl, cfg);
  add_gl_options(gl, cfg);
  gl->add_option("--component", cfg.component)->group("");
  gl->add_option("--seed", cfg.seed)->capture_default_str();
  gl->add_option("--mode", cfg.mode, "spectral | statevector")
      ->capture_default_str();
  gl->add_option("--format", cfg.format, "json | csv");
  gl->add_flag("--verify", cfg.verify,
               "Fail with exit 4 if the exact check is infeasible");

  auto* verify = app.add_subcommand("verify", "Monte Carlo check of the guarantees");
  add_input_options(verify, cfg);
  add_gl_options(verify, cfg);
  verify->add_option("--component", cfg.component)->group("");
  verify->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  verify->add_option("--mode", cfg.mode, "spectral | statevector")
      ->capture_default_str();
  verify->add_option("--runs", cfg.runs, "Independent runs (>= 100)")
      ->capture_default_str();
  verify->add_option("--w0", cfg.w0, "Designated heavy vector (bit string)");
  verify->add_option("--b0", cfg.b0, "Designated component for --sbox");
  verify->add_option("--format", cfg.format, "json | csv");
  verify->add_option("--threshold-scale", cfg.threshold_scale)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
    if (sample->parsed()) return cmd_sample(cfg, out, err);
    if (gl->parsed()) return cmd_gl(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const CliFailure& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace walshgl::cli
