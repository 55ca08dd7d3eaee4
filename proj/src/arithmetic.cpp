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

#include "qshift/arithmetic.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <set>
#include <sstream>

#include "qshift/errors.hpp"

namespace qshift {

namespace {

void require_disjoint(std::initializer_list<std::span<const Wire>> groups) {
  std::set<Wire> seen;
  for (auto group : groups) {
    for (Wire w : group) {
      if (!seen.insert(w).second) {
        throw InputError("adder registers overlap on wire " + std::to_string(w.index));
      }
    }
  }
}

void check_adder_shape(std::span<const Wire> a, std::span<const Wire> b,
                       std::span<const Wire> carries, std::optional<Wire> control) {
  if (a.empty()) throw InputError("adder needs a nonempty A register");
  if (b.size() < a.size()) {
    throw InputError("adder needs |B| >= |A|, got |A|=" + std::to_string(a.size()) +
                     " |B|=" + std::to_string(b.size()));
  }
  if (b.size() > 62) throw InputError("adder register wider than 62 bits");
  if (carries.size() != adder_carry_width(a.size(), b.size())) {
    throw InputError("adder needs " + std::to_string(adder_carry_width(a.size(), b.size())) +
                     " carry wires, got " + std::to_string(carries.size()));
  }
  if (control) {
    const Wire c = *control;
    require_disjoint({a, b, carries, std::span<const Wire>(&c, 1)});
  } else {
    require_disjoint({a, b, carries});
  }
}

void require_zero(const StateVector& state, std::span<const Wire> wires, std::string_view what) {
  for (Wire w : wires) {
    if (!state.wire_is_zero(w)) {
      throw InputError(std::string(what) + " must be 0 on every basis component (wire " +
                       std::to_string(w.index) + " is not)");
    }
  }
}

// Majority: afterwards z holds maj(x, y, z), y holds y^z and x holds x^z.
void append_majority(Circuit& c, Wire x, Wire y, Wire z) {
  c.append(Gate::cnot(z, y)).append(Gate::cnot(z, x)).append(Gate::toffoli(x, y, z));
}

// Undoes append_majority on x and z, leaving y = x ^ y ^ z (the sum bit).
void append_unmajority(Circuit& c, Wire x, Wire y, Wire z) {
  c.append(Gate::toffoli(x, y, z)).append(Gate::cnot(z, x)).append(Gate::cnot(x, y));
}

// As append_unmajority, but y only receives the sum when `control` is 1 and
// is otherwise restored to its value before the majority block.
void append_controlled_unmajority(Circuit& c, Wire control, Wire x, Wire y, Wire z) {
  c.append(Gate::toffoli(x, y, z)).append(Gate::cnot(z, x));
  c.append(Gate::cnot(z, y)).append(Gate::toffoli(control, z, y)).append(Gate::toffoli(control, x, y));
}

}  // namespace

std::size_t adder_carry_width(std::size_t a_width, std::size_t b_width) {
  if (a_width < 1 || b_width < a_width) {
    throw InputError("adder needs 1 <= |A| <= |B|, got |A|=" + std::to_string(a_width) +
                     " |B|=" + std::to_string(b_width));
  }
  return b_width - a_width + 1;
}

Circuit build_adder(std::size_t num_wires, std::span<const Wire> a, std::span<const Wire> b,
                    std::span<const Wire> carries, std::optional<Wire> control) {
  check_adder_shape(a, b, carries, control);
  // A is zero-extended to |B| bits with the spare carry wires; carry-in
  // lives on carries[0] and ripples upward through the extended A wires.
  std::vector<Wire> ext(a.begin(), a.end());
  ext.insert(ext.end(), carries.begin() + 1, carries.end());
  const Wire carry_in = carries.front();
  const std::size_t q = b.size();

  Circuit c(num_wires);
  for (std::size_t i = 0; i < q; ++i) {
    append_majority(c, i == 0 ? carry_in : ext[i - 1], b[i], ext[i]);
  }
  for (std::size_t i = q; i-- > 0;) {
    const Wire x = i == 0 ? carry_in : ext[i - 1];
    if (control) {
      append_controlled_unmajority(c, *control, x, b[i], ext[i]);
    } else {
      append_unmajority(c, x, b[i], ext[i]);
    }
  }
  return c;
}

void add(StateVector& state, std::span<const Wire> a, std::span<const Wire> b,
         std::span<const Wire> carries) {
  Circuit circuit = build_adder(state.num_wires(), a, b, carries);
  require_zero(state, carries, "adder carry wires");
  state.run(circuit);
}

void add(StateVector& state, const RegisterLayout& layout, std::string_view reg_a,
         std::string_view reg_b, std::string_view carries) {
  layout.check_matches(state);
  add(state, layout.wires(reg_a), layout.wires(reg_b), layout.wires(carries));
}

void controlled_add(StateVector& state, Wire control, std::span<const Wire> a,
                    std::span<const Wire> b, std::span<const Wire> carries) {
  Circuit circuit = build_adder(state.num_wires(), a, b, carries, control);
  require_zero(state, carries, "adder carry wires");
  state.run(circuit);
}

void controlled_add(StateVector& state, const RegisterLayout& layout, Wire control,
                    std::string_view reg_a, std::string_view reg_b, std::string_view carries) {
  layout.check_matches(state);
  controlled_add(state, control, layout.wires(reg_a), layout.wires(reg_b),
                 layout.wires(carries));
}

void oracle_add(StateVector& state, std::span<const Wire> a, std::span<const Wire> b,
                std::optional<Wire> control) {
  if (b.size() < a.size() || b.size() > 62) throw InputError("oracle adder needs |A| <= |B| <= 62");
  if (control) {
    const Wire c = *control;
    require_disjoint({a, b, std::span<const Wire>(&c, 1)});
  } else {
    require_disjoint({a, b});
  }
  const std::vector<Wire> av(a.begin(), a.end());
  const std::vector<Wire> bv(b.begin(), b.end());
  const std::uint64_t mask = (std::uint64_t{1} << b.size()) - 1;
  const auto amps = state.amplitudes();
  std::vector<Amplitude> out(amps.size());
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    BasisIndex j = i;
    if (!control || ((i >> control->index) & 1u)) {
      j = write_value(i, bv, (read_value(i, av) + read_value(i, bv)) & mask);
    }
    out[j] = amps[i];
  }
  state = StateVector::from_amplitudes(state.num_wires(), std::move(out), 1.0, state.num_wires());
}

// --- multiply by constant --------------------------------------------------

std::size_t MulConstSpec::digits() const { return static_cast<std::size_t>(std::bit_width(l)); }
std::size_t MulConstSpec::shifts() const { return digits() == 0 ? 0 : digits() - 1; }
std::size_t MulConstSpec::adds() const { return static_cast<std::size_t>(std::popcount(l)); }

void MulConstSpec::validate() const {
  if (nA < 1 || kA < 1 || nB < 1) throw InputError("nA, kA and nB must all be positive");
  if (kA < shifts()) {
    throw InputError("multiplier needs " + std::to_string(shifts()) +
                     " shifts but A has only kA=" + std::to_string(kA) + " ancilla wires");
  }
  if (nB > 62) throw InputError("accumulator wider than 62 bits");
}

bool MulConstSpec::fits_all_inputs() const { return nB >= nA + digits(); }

MulConstLayout MulConstLayout::make(const MulConstSpec& spec) {
  spec.validate();
  MulConstLayout out;
  auto& r = out.registers;
  r.add("A", spec.nA).add("B", spec.nB).add("A_anc", spec.kA).add("c", 1);
  const std::size_t addend_width = std::min(spec.nB, spec.nA + spec.kA);
  r.add("carry", adder_carry_width(addend_width, spec.nB));
  out.a_register = ShiftLayout::from_segments(r, "A", "A_anc", "c");
  out.accumulator = r.wires("B");
  out.carries = r.wires("carry");
  return out;
}

std::vector<Wire> MulConstLayout::addend() const {
  std::vector<Wire> ext = a_register.extended_data();
  ext.resize(std::min(ext.size(), accumulator.size()));
  return ext;
}

Circuit build_mul_const_circuit(const MulConstSpec& spec, const MulConstLayout& layout) {
  spec.validate();
  const std::size_t m = layout.registers.num_wires();
  const Circuit adder = build_adder(m, layout.addend(), layout.accumulator, layout.carries);
  const Circuit shift_left = build_shift_circuit(layout.a_register, Direction::Left, m);
  Circuit c(m);
  const std::size_t K = spec.digits();
  for (std::size_t p = 0; p < K; ++p) {
    if ((spec.l >> p) & 1u) c.append(adder);
    if (p + 1 < K) c.append(shift_left);
  }
  return c;
}

void multiply_by_constant(StateVector& state, const MulConstSpec& spec,
                          const MulConstLayout& layout) {
  spec.validate();
  layout.registers.check_matches(state);
  const Circuit circuit = build_mul_const_circuit(spec, layout);
  require_zero(state, layout.accumulator, "accumulator B");
  require_zero(state, layout.a_register.ancilla, "A's shift ancilla");
  require_zero(state, std::span<const Wire>(&layout.a_register.control, 1), "control wire c");
  require_zero(state, layout.carries, "carry wires");
  const auto& a_wires = layout.a_register.data;
  const std::uint64_t largest = (std::uint64_t{1} << spec.nB) - 1;
  for (BasisIndex i : state.support()) {
    const std::uint64_t a = read_value(i, a_wires);
    if (spec.l != 0 && a > largest / spec.l) {
      throw InputError("capacity: product " + std::to_string(a) + " * " + std::to_string(spec.l) +
                       " does not fit nB=" + std::to_string(spec.nB) + " bits");
    }
  }
  state.run(circuit);
}

// --- multiply two registers ------------------------------------------------

void MulQuantumSpec::validate() const {
  if (nA < 1 || kA < 1 || nC < 1 || kC < 1 || nB < 1) {
    throw InputError("nA, kA, nC, kC and nB must all be positive");
  }
  if (kA + 1 < nC) {
    throw InputError("A is shifted nC-1=" + std::to_string(nC - 1) + " times but kA=" +
                     std::to_string(kA));
  }
  if (kC + 1 < nC) {
    throw InputError("C is shifted nC-1=" + std::to_string(nC - 1) + " times but kC=" +
                     std::to_string(kC));
  }
  if (nB < nA + nC) {
    throw InputError("capacity: nB=" + std::to_string(nB) + " is smaller than nA+nC=" +
                     std::to_string(nA + nC));
  }
  if (nB > 62) throw InputError("accumulator wider than 62 bits");
}

MulQuantumLayout MulQuantumLayout::make(const MulQuantumSpec& spec) {
  spec.validate();
  MulQuantumLayout out;
  auto& r = out.registers;
  r.add("A", spec.nA).add("C", spec.nC).add("B", spec.nB);
  r.add("A_anc", spec.kA).add("C_anc", spec.kC).add("c", 1);
  const std::size_t addend_width = std::min(spec.nB, spec.nA + spec.kA);
  r.add("carry", adder_carry_width(addend_width, spec.nB));
  out.a_register = ShiftLayout::from_segments(r, "A", "A_anc", "c");
  out.c_register = ShiftLayout::from_segments(r, "C", "C_anc", "c");
  out.accumulator = r.wires("B");
  out.carries = r.wires("carry");
  return out;
}

std::vector<Wire> MulQuantumLayout::addend() const {
  std::vector<Wire> ext = a_register.extended_data();
  ext.resize(std::min(ext.size(), accumulator.size()));
  return ext;
}

Circuit build_mul_quantum_circuit(const MulQuantumSpec& spec, const MulQuantumLayout& layout) {
  spec.validate();
  const std::size_t m = layout.registers.num_wires();
  const Circuit cadd = build_adder(m, layout.addend(), layout.accumulator, layout.carries,
                                   layout.c_register.data.front());
  Circuit step_shifts(m);
  step_shifts.append(build_shift_circuit(layout.a_register, Direction::Left, m));
  step_shifts.append(build_shift_circuit(layout.c_register, Direction::Right, m));
  Circuit c(m);
  for (std::size_t p = 0; p < spec.nC; ++p) {
    c.append(cadd);
    if (p + 1 < spec.nC) c.append(step_shifts);
  }
  return c;
}

void multiply_registers(StateVector& state, const MulQuantumSpec& spec,
                        const MulQuantumLayout& layout) {
  spec.validate();
  layout.registers.check_matches(state);
  const Circuit circuit = build_mul_quantum_circuit(spec, layout);
  require_zero(state, layout.accumulator, "accumulator B");
  require_zero(state, layout.a_register.ancilla, "A's shift ancilla");
  require_zero(state, layout.c_register.ancilla, "C's shift ancilla");
  require_zero(state, std::span<const Wire>(&layout.a_register.control, 1), "control wire c");
  require_zero(state, layout.carries, "carry wires");
  state.run(circuit);
}

void select_qubit(StateVector& state, const ShiftLayout& layout, std::size_t slot) {
  if (slot < 1 || slot > layout.n()) {
    throw InputError("slot " + std::to_string(slot) + " outside 1.." + std::to_string(layout.n()));
  }
  shift_times(state, layout, Direction::Right, slot - 1);
}

// --- cost --------------------------------------------------------------------

CostReport cost_report(const MulConstSpec& spec, std::optional<std::uint64_t> superposed_values) {
  spec.validate();
  if (spec.nA >= 64) throw InputError("nA too large for the classical count");
  const MulConstLayout layout = MulConstLayout::make(spec);
  const std::size_t m = layout.registers.num_wires();

  CostReport r;
  r.spec = spec;
  r.shifts = spec.shifts();
  r.adds = spec.adds();
  r.swaps_per_shift = spec.nA + spec.kA - 1;
  r.circuit_gates = count_gates(build_mul_const_circuit(spec, layout));
  r.swaps = r.circuit_gates.count(GateKind::SWAP);
  r.cswaps = r.circuit_gates.count(GateKind::CSWAP);
  const GateCountReport one_add =
      count_gates(build_adder(m, layout.addend(), layout.accumulator, layout.carries));
  for (std::size_t i = 0; i < r.adds; ++i) r.adder_gates += one_add;

  r.superposed_values = superposed_values.value_or(std::uint64_t{1} << spec.nA);
  r.classical_ops_per_value = spec.kA;
  r.classical_ops = r.classical_ops_per_value * r.superposed_values;
  return r;
}

std::string format_cost_report(const CostReport& r) {
  std::ostringstream out;
  const auto row = [&](std::string_view label, auto value) {
    out << "  " << std::left << std::setw(34) << label << std::right << std::setw(10) << value
        << '\n';
  };
  out << "multiply-by-constant cost (nA=" << r.spec.nA << ", kA=" << r.spec.kA
      << ", nB=" << r.spec.nB << ", l=" << r.spec.l << ")\n";
  out << "quantum pipeline\n";
  row("shifts", r.shifts);
  row("adds", r.adds);
  row("swaps per shift (nA+kA-1)", r.swaps_per_shift);
  row("swaps", r.swaps);
  row("cswaps", r.cswaps);
  row("adder CNOT", r.adder_gates.count(GateKind::CNOT));
  row("adder TOFFOLI", r.adder_gates.count(GateKind::TOFFOLI));
  row("primitive gates total", r.circuit_gates.total());
  row("CNOT-equivalent total", r.circuit_gates.cnot_equivalent());
  out << "classical, one value at a time\n";
  row("superposed values N", r.superposed_values);
  row("shift/add ops per value (k)", r.classical_ops_per_value);
  row("shift/add ops total (k*N)", r.classical_ops);

  out << "shifts=" << r.shifts << '\n'
      << "adds=" << r.adds << '\n'
      << "swaps_per_shift=" << r.swaps_per_shift << '\n'
      << "swaps=" << r.swaps << '\n'
      << "cswaps=" << r.cswaps << '\n'
      << "adder_cnot=" << r.adder_gates.count(GateKind::CNOT) << '\n'
      << "adder_toffoli=" << r.adder_gates.count(GateKind::TOFFOLI) << '\n'
      << "quantum_gates=" << r.circuit_gates.total() << '\n'
      << "quantum_cnot_equivalent=" << r.circuit_gates.cnot_equivalent() << '\n'
      << "superposed_values=" << r.superposed_values << '\n'
      << "classical_ops_per_value=" << r.classical_ops_per_value << '\n'
      << "classical_ops=" << r.classical_ops << '\n';
  return out.str();
}

}  // namespace qshift
