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

#include "walshgl/qsim.h"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "walshgl/errors.h"

namespace walshgl {

QuantumState::QuantumState(std::vector<int> register_widths,
                           std::span<const uint64_t> values)
    : widths_(std::move(register_widths)) {
  if (widths_.empty()) throw std::invalid_argument("state needs a register");
  if (values.size() != widths_.size()) {
    throw std::invalid_argument("one initial value per register required");
  }
  for (int w : widths_) {
    if (w < 1) throw std::invalid_argument("register width must be positive");
    total_qubits_ += w;
  }
  if (total_qubits_ > kMaxStateQubits) {
    throw CapacityError("state of " + std::to_string(total_qubits_) +
                        " qubits exceeds the simulator cap of " +
                        std::to_string(kMaxStateQubits));
  }
  shifts_.resize(widths_.size());
  int shift = total_qubits_;
  uint64_t index = 0;
  for (std::size_t r = 0; r < widths_.size(); ++r) {
    shift -= widths_[r];
    shifts_[r] = shift;
    if ((values[r] >> widths_[r]) != 0) {
      throw std::invalid_argument("initial value does not fit its register");
    }
    index |= values[r] << shift;
  }
  amps_.assign(uint64_t{1} << total_qubits_, Amplitude{0.0, 0.0});
  amps_[index] = 1.0;
}

void QuantumState::check_register(int reg) const {
  if (reg < 0 || reg >= num_registers()) {
    throw std::out_of_range("no register " + std::to_string(reg));
  }
}

Amplitude QuantumState::amplitude(std::span<const uint64_t> values) const {
  if (values.size() != widths_.size()) {
    throw std::invalid_argument("one value per register required");
  }
  uint64_t index = 0;
  for (std::size_t r = 0; r < widths_.size(); ++r) {
    index |= values[r] << shifts_[r];
  }
  return amps_.at(index);
}

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

void QuantumState::apply_hadamard(int reg) {
  check_register(reg);
  const double h = std::numbers::sqrt2 / 2.0;
  for (int q = 0; q < widths_[reg]; ++q) {
    const uint64_t bit = uint64_t{1} << (shifts_[reg] + q);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) continue;
      Amplitude a0 = amps_[i];
      Amplitude a1 = amps_[i | bit];
      amps_[i] = h * (a0 + a1);
      amps_[i | bit] = h * (a0 - a1);
    }
  }
}

void QuantumState::apply_controlled_xor(
    int control, int target, const std::function<uint64_t(uint64_t)>& fn) {
  check_register(control);
  check_register(target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  const uint64_t target_mask = (uint64_t{1} << widths_[target]) - 1;
  // Basis permutation, applied out of place.
  std::vector<Amplitude> out(amps_.size());
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    uint64_t delta = fn(field(i, control));
    if ((delta & ~target_mask) != 0) {
      throw std::invalid_argument("oracle output wider than target register");
    }
    out[i ^ (delta << shifts_[target])] = amps_[i];
  }
  amps_.swap(out);
}

void QuantumState::apply_phase(const std::function<bool(uint64_t)>& sign) {
  for (uint64_t i = 0; i < amps_.size(); ++i) {
    if (sign(i)) amps_[i] = -amps_[i];
  }
}

std::vector<double> QuantumState::marginal(int reg) const {
  check_register(reg);
  std::vector<double> p(uint64_t{1} << widths_[reg], 0.0);
  for (uint64_t i = 0; i < amps_.size(); ++i) p[field(i, reg)] += std::norm(amps_[i]);
  return p;
}

void apply_uip(QuantumState& state, int y_reg, int b_reg, int ancilla_reg) {
  if (state.register_width(y_reg) != state.register_width(b_reg)) {
    throw std::invalid_argument("U_IP needs equal-width y and b registers");
  }
  if (state.register_width(ancilla_reg) != 1) {
    throw std::invalid_argument("U_IP ancilla register must be one qubit");
  }
  state.apply_phase([&state, y_reg, b_reg](uint64_t i) {
    return inner_product(state.field(i, y_reg), state.field(i, b_reg)) != 0;
  });
}

QuantumState dj_state(const BooleanFunction& f) {
  const int n = f.num_vars();
  if (n > kMaxDjVariables) {
    throw CapacityError("state-vector Deutsch-Jozsa supports n <= " +
                        std::to_string(kMaxDjVariables) + ", got n=" +
                        std::to_string(n));
  }
  const std::array<uint64_t, 2> init{0, 1};
  QuantumState state({n, 1}, init);
  state.apply_hadamard(0);
  state.apply_hadamard(1);
  state.apply_controlled_xor(0, 1, [&f](uint64_t x) -> uint64_t { return f(x); });
  state.apply_hadamard(0);
  return state;
}

std::vector<Amplitude> first_register_amplitudes(const QuantumState& state) {
  const int last = state.num_registers() - 1;
  if (state.num_registers() != 2 || state.register_width(last) != 1) {
    throw std::invalid_argument(
        "expected a (register, single-qubit ancilla) state");
  }
  const double h = std::numbers::sqrt2 / 2.0;
  const uint64_t dim = uint64_t{1} << state.register_width(0);
  std::vector<Amplitude> out(dim);
  for (uint64_t w = 0; w < dim; ++w) {
    const std::array<uint64_t, 2> zero{w, 0};
    const std::array<uint64_t, 2> one{w, 1};
    out[w] = h * (state.amplitude(zero) - state.amplitude(one));
  }
  return out;
}

QuantumState qwt_bf_state(const VectorialFunction& F, uint32_t b) {
  const int n = F.num_inputs();
  const int m = F.num_outputs();
  if ((uint64_t{b} >> m) != 0) {
    throw std::invalid_argument("component mask does not fit in m bits");
  }
  if (n + 2 * m + 1 > kMaxStateQubits) {
    throw CapacityError("quantum Walsh transform needs n+2m+1=" +
                        std::to_string(n + 2 * m + 1) +
                        " qubits; the simulator cap is " +
                        std::to_string(kMaxStateQubits));
  }
  const std::array<uint64_t, 4> init{0, 0, b, 1};
  QuantumState state({n, m, m, 1}, init);
  state.apply_hadamard(0);
  state.apply_hadamard(3);
  const auto oracle = [&F](uint64_t x) -> uint64_t { return F(x); };
  state.apply_controlled_xor(0, 1, oracle);
  apply_uip(state, 1, 2, 3);
  // Uncompute y. Left holding F(x), it stays entangled with x and the final
  // Hadamards cannot interfere across branches.
  state.apply_controlled_xor(0, 1, oracle);
  state.apply_hadamard(0);
  return state;
}

void write_amplitudes_csv(std::ostream& out, const QuantumState& state) {
  auto fmt = [](double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
  };
  out << "index,re,im\n";
  const auto amps = state.amplitudes();
  for (uint64_t i = 0; i < amps.size(); ++i) {
    out << i << ',' << fmt(amps[i].real()) << ',' << fmt(amps[i].imag()) << '\n';
  }
}

}  // namespace walshgl
