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

#ifndef WALSHGL_QSIM_H_
#define WALSHGL_QSIM_H_

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "walshgl/boolean_function.h"

namespace walshgl {

using Amplitude = std::complex<double>;

// Largest total qubit count a QuantumState may hold (2^20 amplitudes).
inline constexpr int kMaxStateQubits = 20;
// Largest n accepted by the Deutsch-Jozsa state-vector path.
inline constexpr int kMaxDjVariables = 14;

// Dense state vector over a list of registers. Register 0 occupies the most
// significant bits of the basis index, so |x>|y>|b>|c> reads left to right
// from MSB to LSB; inside a register the usual canonical encoding applies.
class QuantumState {
 public:
  // Computational basis state |values[0]>|values[1]>...
  QuantumState(std::vector<int> register_widths,
               std::span<const uint64_t> values);

  int num_registers() const { return static_cast<int>(widths_.size()); }
  int register_width(int reg) const { return widths_.at(reg); }
  int num_qubits() const { return total_qubits_; }

  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(std::span<const uint64_t> register_values) const;

  uint64_t field(uint64_t index, int reg) const {
    return (index >> shifts_[reg]) & ((uint64_t{1} << widths_[reg]) - 1);
  }

  double norm_squared() const;

  // H on every qubit of `reg`.
  void apply_hadamard(int reg);
  // |..x..y..> -> |..x..(y xor fn(x))..>, x in `control`, y in `target`.
  void apply_controlled_xor(int control, int target,
                            const std::function<uint64_t(uint64_t)>& fn);
  // Multiplies each basis amplitude by (-1)^{sign(index)}.
  void apply_phase(const std::function<bool(uint64_t)>& sign);

  // Probability of each value of `reg` with the other registers traced out.
  std::vector<double> marginal(int reg) const;

 private:
  void check_register(int reg) const;

  std::vector<int> widths_;
  std::vector<int> shifts_;
  int total_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

// Inner-product oracle on registers (y, b, c) with widths (m, m, 1):
// |y>|b>|c> -> (-1)^{y.b} |y>|b>|c>. Diagonal in the computational basis.
void apply_uip(QuantumState& state, int y_reg, int b_reg, int ancilla_reg);

// Deutsch-Jozsa circuit up to (not including) measurement: registers
// (x: n qubits, ancilla: 1 qubit), H^{n+1} on |0..0>|1>, the f-controlled
// NOT onto the ancilla, then H^n on x.
QuantumState dj_state(const BooleanFunction& f);

// Amplitudes of the first register of a two-register state whose last
// register is one ancilla qubit, after contracting the ancilla with <-|.
// For dj_state(f) this is exactly S_f(w).
std::vector<Amplitude> first_register_amplitudes(const QuantumState& state);

// Quantum Walsh transform of b.F: registers (x: n, y: m, b: m, ancilla: 1)
// prepared as |0>|0>|b>|1>, then H on x and the ancilla, the F-controlled NOT
// into y, U_IP on (y, b, ancilla), the F-controlled NOT again to return y to
// |0>, H on x. The x register then carries S_{b.F}(a) as its amplitudes.
QuantumState qwt_bf_state(const VectorialFunction& F, uint32_t b);

// CSV "index,re,im" over the full basis.
void write_amplitudes_csv(std::ostream& out, const QuantumState& state);

}  // namespace walshgl

#endif  // WALSHGL_QSIM_H_
