// Copyright 2026 The qshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qshift/gate.hpp"
#include "qshift/register_layout.hpp"
#include "qshift/shift_register.hpp"
#include "qshift/state_vector.hpp"

namespace qshift {

// ---------------------------------------------------------------------------
// Adders
// ---------------------------------------------------------------------------

/// Carry wires needed to add an a_width-bit register into a b_width-bit one:
/// one carry-in wire plus one zero wire per bit by which B is wider than A.
std::size_t adder_carry_width(std::size_t a_width, std::size_t b_width);

/// Ripple-carry adder B := (A + B) mod 2^|B| over CNOT and TOFFOLI, built
/// from majority / unmajority blocks. A and the carry wires are returned to
/// their input values. With `control`, B is only updated on basis
/// components where the control wire is 1; everything else is still
/// restored.
Circuit build_adder(std::size_t num_wires, std::span<const Wire> a, std::span<const Wire> b,
                    std::span<const Wire> carries, std::optional<Wire> control = std::nullopt);

/// Gate-level addition. Requires |B| >= |A|, the carry count from
/// adder_carry_width(), disjoint registers, and zeroed carries.
void add(StateVector& state, std::span<const Wire> a, std::span<const Wire> b,
         std::span<const Wire> carries);
void add(StateVector& state, const RegisterLayout& layout, std::string_view reg_a,
         std::string_view reg_b, std::string_view carries);

void controlled_add(StateVector& state, Wire control, std::span<const Wire> a,
                    std::span<const Wire> b, std::span<const Wire> carries);
void controlled_add(StateVector& state, const RegisterLayout& layout, Wire control,
                    std::string_view reg_a, std::string_view reg_b, std::string_view carries);

/// Reference adder acting directly as a permutation of basis indices.
void oracle_add(StateVector& state, std::span<const Wire> a, std::span<const Wire> b,
                std::optional<Wire> control = std::nullopt);

// ---------------------------------------------------------------------------
// Multiplication by a classical constant: B := A * l
// ---------------------------------------------------------------------------

struct MulConstSpec {
  std::size_t nA = 1;  // width of A
  std::size_t kA = 1;  // ancilla for A's shift register
  std::size_t nB = 1;  // width of the accumulator B
  std::uint64_t l = 0;

  /// Bit length of l (0 for l = 0).
  std::size_t digits() const;
  /// Shift-lefts performed on A: digits() - 1, or 0 for l = 0.
  std::size_t shifts() const;
  std::size_t adds() const;

  /// Throws InputError unless all widths are positive and kA >= shifts().
  void validate() const;
  /// nB >= nA + digits(): every nA-bit input fits.
  bool fits_all_inputs() const;
};

struct MulConstLayout {
  RegisterLayout registers;  // segments A, B, A_anc, c, carry
  ShiftLayout a_register;
  std::vector<Wire> accumulator;
  std::vector<Wire> carries;

  static MulConstLayout make(const MulConstSpec& spec);

  /// Wires added into B: A's extended data block cut to |B| bits.
  std::vector<Wire> addend() const;
};

/// For p = 0..K-1: if l_p = 1 add A into B; then, unless p = K-1, shift A
/// left once.
Circuit build_mul_const_circuit(const MulConstSpec& spec, const MulConstLayout& layout);

/// Runs build_mul_const_circuit. Every basis component must have B, A's
/// ancilla, c and the carries at 0, and A * l < 2^nB; otherwise InputError
/// is thrown before any gate is applied. A is left shifted by K-1.
void multiply_by_constant(StateVector& state, const MulConstSpec& spec,
                          const MulConstLayout& layout);

// ---------------------------------------------------------------------------
// Multiplication of two registers: B := A * C
// ---------------------------------------------------------------------------

struct MulQuantumSpec {
  std::size_t nA = 1;
  std::size_t kA = 1;
  std::size_t nC = 1;
  std::size_t kC = 1;
  std::size_t nB = 2;

  /// Throws InputError unless widths are positive, kA >= nC-1,
  /// kC >= nC-1 and nB >= nA + nC.
  void validate() const;
};

struct MulQuantumLayout {
  RegisterLayout registers;  // segments A, C, B, A_anc, C_anc, c, carry
  ShiftLayout a_register;
  ShiftLayout c_register;  // shares the control wire with a_register
  std::vector<Wire> accumulator;
  std::vector<Wire> carries;

  static MulQuantumLayout make(const MulQuantumSpec& spec);

  std::vector<Wire> addend() const;
};

/// For p = 0..nC-1: add A into B controlled on C's lowest slot; then, unless
/// p = nC-1, shift A left and C right.
Circuit build_mul_quantum_circuit(const MulQuantumSpec& spec, const MulQuantumLayout& layout);

/// Runs build_mul_quantum_circuit after checking that B, both ancilla
/// blocks, c and the carries are 0. C's bits end up parked in C_anc.
void multiply_registers(StateVector& state, const MulQuantumSpec& spec,
                        const MulQuantumLayout& layout);

/// Right-shifts the register slot-1 times so that data slot `slot`
/// (1-based) lands in slot 1.
void select_qubit(StateVector& state, const ShiftLayout& layout, std::size_t slot);

// ---------------------------------------------------------------------------
// Cost accounting
// ---------------------------------------------------------------------------

struct CostReport {
  MulConstSpec spec;
  std::size_t shifts = 0;
  std::size_t adds = 0;
  std::size_t swaps_per_shift = 0;
  std::size_t swaps = 0;
  std::size_t cswaps = 0;
  GateCountReport adder_gates;    // all adds together
  GateCountReport circuit_gates;  // the whole pipeline as built

  std::uint64_t superposed_values = 0;  // N
  std::uint64_t classical_ops_per_value = 0;
  std::uint64_t classical_ops = 0;  // per-value cost times N
};

/// Gate totals for multiply_by_constant next to the classical count of
/// kA shift/add steps repeated for each of N values. N defaults to 2^nA.
/// The quantum side does not depend on N.
CostReport cost_report(const MulConstSpec& spec,
                       std::optional<std::uint64_t> superposed_values = std::nullopt);

std::string format_cost_report(const CostReport& report);

}  // namespace qshift
