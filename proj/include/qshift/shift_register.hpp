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
#include <string>
#include <string_view>
#include <vector>

#include "qshift/gate.hpp"
#include "qshift/register_layout.hpp"
#include "qshift/state_vector.hpp"

namespace qshift {

enum class Direction { Left, Right };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);
Direction opposite(Direction d);

/// Widths of one shift register: n data wires b_1..b_n and k ancilla wires
/// a_1..a_k. The register absorbs up to k shifts before bits are lost to
/// wrap-around.
struct ShiftSpec {
  std::size_t n = 1;
  std::size_t k = 1;
  Direction direction = Direction::Left;

  /// Throws InputError unless n >= 1 and k >= 1.
  void validate() const;
};

/// Wire assignment of a shift register, possibly embedded in a larger
/// layout. ancilla[i] is a_{i+1} and data[i] is b_{i+1} (b_1 least
/// significant).
struct ShiftLayout {
  Wire control;
  std::vector<Wire> ancilla;
  std::vector<Wire> data;

  std::size_t n() const { return data.size(); }
  std::size_t k() const { return ancilla.size(); }

  /// Standalone register: a_i on wire i-1, b_j on wire k+j-1, c on wire n+k.
  static ShiftLayout standalone(std::size_t n, std::size_t k);

  /// Looks the three segments up by name. Throws InputError if one is
  /// missing or the control segment is not exactly one wire.
  static ShiftLayout from_segments(const RegisterLayout& layout, std::string_view data_name = "b",
                                   std::string_view ancilla_name = "a",
                                   std::string_view control_name = "c");

  /// Segments "c", "a", "b" in that declaration order.
  RegisterLayout registers() const;

  /// Data wires followed by the ancilla in reverse (b_1..b_n, a_k..a_1).
  /// Shift-left moves this whole block up one place, so it holds the full
  /// shifted value including bits that have left the data segment.
  std::vector<Wire> extended_data() const;
};

/// The swap network for one shift of a standalone register.
///
/// Left: SWAP(a_1,a_2) .. SWAP(a_{k-1},a_k), then SWAP(b_{n-1},b_n) ..
/// SWAP(b_1,b_2), SWAP(a_k,b_1), then CSWAP(c,a_k,b_1). That is n+k-1 swaps
/// and one Fredkin gate. Right is the same list reversed.
Circuit build_shift_circuit(const ShiftSpec& spec);
/// As above on the wires of `layout`, sized for a `num_wires`-wire state.
Circuit build_shift_circuit(const ShiftLayout& layout, Direction direction,
                            std::size_t num_wires);

/// One shift. Requires c = 0 on every basis component.
void shift(StateVector& state, const ShiftLayout& layout, Direction direction);
/// `count` shifts. Additionally requires count <= k and that every ancilla
/// bit which will enter the data segment is 0 (a_1..a_count for left,
/// a_k..a_{k-count+1} for right).
void shift_times(StateVector& state, const ShiftLayout& layout, Direction direction,
                 std::size_t count);
/// One rotation: c is raised to 1 around the shift network and lowered
/// again. Requires c = 0 on entry.
void rotate(StateVector& state, const ShiftLayout& layout, Direction direction);

struct ShiftBits {
  std::vector<bool> ancilla;  // a_1..a_k
  std::vector<bool> data;     // b_1..b_n

  friend bool operator==(const ShiftBits&, const ShiftBits&) = default;
};

/// Classical reference for the net permutation of build_shift_circuit.
///
/// Left, c = 0: (a_1..a_k; b_1..b_n) -> (a_2..a_k, b_n; a_1, b_1..b_{n-1}).
/// Left, c = 1: additionally exchange the results in slots a_k and b_1,
/// giving (a_2..a_k, a_1; b_n, b_1..b_{n-1}).
/// Right is the inverse of left for the same c.
ShiftBits classical_shift_oracle(const std::vector<bool>& ancilla, const std::vector<bool>& data,
                                 bool control, Direction direction);

/// Gate tallies for one shift: none -> {SWAP: n+k-1, CSWAP: 1},
/// cnot -> {CNOT: 3(n+k-1), CSWAP: 1}, all -> {CNOT: 3(n+k-1)+2, TOFFOLI: 1}.
GateCountReport gate_count(const ShiftSpec& spec, Decomposition mode);

}  // namespace qshift
