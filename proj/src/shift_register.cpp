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

#include "qshift/shift_register.hpp"

#include <algorithm>

#include "qshift/errors.hpp"

namespace qshift {

std::string_view to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

Direction parse_direction(std::string_view text) {
  if (text == "left") return Direction::Left;
  if (text == "right") return Direction::Right;
  throw InputError("direction must be 'left' or 'right', got '" + std::string(text) + "'");
}

Direction opposite(Direction d) { return d == Direction::Left ? Direction::Right : Direction::Left; }

void ShiftSpec::validate() const {
  if (n < 1) throw InputError("shift register needs n >= 1 data wires");
  if (k < 1) throw InputError("shift register needs k >= 1 ancilla wires");
}

ShiftLayout ShiftLayout::standalone(std::size_t n, std::size_t k) {
  ShiftSpec{n, k, Direction::Left}.validate();
  ShiftLayout layout;
  for (std::size_t i = 0; i < k; ++i) layout.ancilla.emplace_back(static_cast<std::uint32_t>(i));
  for (std::size_t j = 0; j < n; ++j) layout.data.emplace_back(static_cast<std::uint32_t>(k + j));
  layout.control = Wire(static_cast<std::uint32_t>(n + k));
  return layout;
}

ShiftLayout ShiftLayout::from_segments(const RegisterLayout& layout, std::string_view data_name,
                                       std::string_view ancilla_name,
                                       std::string_view control_name) {
  const auto& control = layout.wires(control_name);
  if (control.size() != 1) {
    throw InputError("control segment '" + std::string(control_name) + "' must be one wire");
  }
  return ShiftLayout{control.front(), layout.wires(ancilla_name), layout.wires(data_name)};
}

RegisterLayout ShiftLayout::registers() const {
  RegisterLayout layout;
  layout.add("c", std::vector<Wire>{control}).add("a", ancilla).add("b", data);
  return layout;
}

std::vector<Wire> ShiftLayout::extended_data() const {
  std::vector<Wire> out = data;
  out.insert(out.end(), ancilla.rbegin(), ancilla.rend());
  return out;
}

Circuit build_shift_circuit(const ShiftLayout& layout, Direction direction,
                            std::size_t num_wires) {
  ShiftSpec{layout.n(), layout.k(), direction}.validate();
  const auto& a = layout.ancilla;
  const auto& b = layout.data;
  Circuit left(num_wires);
  // Carry a_1 up to the a_k wire.
  for (std::size_t i = 0; i + 1 < a.size(); ++i) left.append(Gate::swap(a[i], a[i + 1]));
  // Bubble b_n down to the b_1 wire, then trade it for a_1.
  for (std::size_t j = b.size() - 1; j > 0; --j) left.append(Gate::swap(b[j - 1], b[j]));
  left.append(Gate::swap(a.back(), b.front()));
  left.append(Gate::cswap(layout.control, a.back(), b.front()));
  return direction == Direction::Left ? left : left.reversed();
}

Circuit build_shift_circuit(const ShiftSpec& spec) {
  spec.validate();
  const ShiftLayout layout = ShiftLayout::standalone(spec.n, spec.k);
  return build_shift_circuit(layout, spec.direction, spec.n + spec.k + 1);
}

namespace {

void require_control_zero(const StateVector& state, const ShiftLayout& layout,
                          std::string_view op) {
  if (!state.wire_is_zero(layout.control)) {
    throw InputError(std::string(op) + " requires control wire c = 0 on every basis component");
  }
}

}  // namespace

void shift(StateVector& state, const ShiftLayout& layout, Direction direction) {
  require_control_zero(state, layout, "shift");
  state.run(build_shift_circuit(layout, direction, state.num_wires()));
}

void shift_times(StateVector& state, const ShiftLayout& layout, Direction direction,
                 std::size_t count) {
  if (count > layout.k()) {
    throw InputError(std::to_string(count) + " shifts need at least " + std::to_string(count) +
                     " ancilla wires, register has " + std::to_string(layout.k()));
  }
  if (count == 0) return;
  require_control_zero(state, layout, "shift");
  for (std::size_t s = 0; s < count; ++s) {
    const Wire entering = direction == Direction::Left ? layout.ancilla[s]
                                                       : layout.ancilla[layout.k() - 1 - s];
    if (!state.wire_is_zero(entering)) {
      throw InputError("insufficient clean ancilla: " + std::to_string(count) + " " +
                       std::string(to_string(direction)) +
                       " shifts need the entering ancilla wires to be 0");
    }
  }
  const Circuit once = build_shift_circuit(layout, direction, state.num_wires());
  for (std::size_t s = 0; s < count; ++s) state.run(once);
}

void rotate(StateVector& state, const ShiftLayout& layout, Direction direction) {
  require_control_zero(state, layout, "rotate");
  state.apply(Gate::x(layout.control));
  state.run(build_shift_circuit(layout, direction, state.num_wires()));
  state.apply(Gate::x(layout.control));
}

ShiftBits classical_shift_oracle(const std::vector<bool>& ancilla, const std::vector<bool>& data,
                                 bool control, Direction direction) {
  const std::size_t k = ancilla.size();
  const std::size_t n = data.size();
  ShiftSpec{n, k, direction}.validate();
  ShiftBits out{std::vector<bool>(k), std::vector<bool>(n)};
  if (direction == Direction::Left) {
    for (std::size_t i = 0; i + 1 < k; ++i) out.ancilla[i] = ancilla[i + 1];
    out.ancilla[k - 1] = data[n - 1];
    out.data[0] = ancilla[0];
    for (std::size_t j = 1; j < n; ++j) out.data[j] = data[j - 1];
    if (control) {
      const bool top = out.ancilla[k - 1];
      out.ancilla[k - 1] = out.data[0];
      out.data[0] = top;
    }
    return out;
  }
  std::vector<bool> a = ancilla;
  std::vector<bool> b = data;
  if (control) {
    const bool top = a[k - 1];
    a[k - 1] = b[0];
    b[0] = top;
  }
  out.ancilla[0] = b[0];
  for (std::size_t i = 1; i < k; ++i) out.ancilla[i] = a[i - 1];
  for (std::size_t j = 0; j + 1 < n; ++j) out.data[j] = b[j + 1];
  out.data[n - 1] = a[k - 1];
  return out;
}

GateCountReport gate_count(const ShiftSpec& spec, Decomposition mode) {
  return count_gates(decompose(build_shift_circuit(spec), mode));
}

}  // namespace qshift
