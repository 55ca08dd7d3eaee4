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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qshift {

/// Position of one qubit inside a state vector.
struct Wire {
  std::uint32_t index = 0;

  constexpr Wire() = default;
  constexpr explicit Wire(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Wire, Wire) = default;
};

enum class GateKind { X, H, CNOT, SWAP, CSWAP, TOFFOLI };

std::string_view to_string(GateKind kind);
std::size_t arity(GateKind kind);

/// One primitive gate. For CNOT, CSWAP and TOFFOLI the control wire(s) come
/// first: CNOT(control, target), CSWAP(control, i, j),
/// TOFFOLI(control1, control2, target).
class Gate {
 public:
  Gate(GateKind kind, std::span<const Wire> wires);

  static Gate x(Wire target);
  static Gate h(Wire target);
  static Gate cnot(Wire control, Wire target);
  static Gate swap(Wire i, Wire j);
  static Gate cswap(Wire control, Wire i, Wire j);
  static Gate toffoli(Wire control1, Wire control2, Wire target);

  GateKind kind() const { return kind_; }
  std::span<const Wire> wires() const { return {wires_.data(), arity(kind_)}; }
  Wire operator[](std::size_t i) const { return wires_[i]; }

  /// Every primitive in the set is self-inverse.
  bool is_permutation() const { return kind_ != GateKind::H; }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  GateKind kind_;
  std::array<Wire, 3> wires_{};
};

std::string to_string(const Gate& gate);

class Circuit {
 public:
  explicit Circuit(std::size_t num_wires) : num_wires_(num_wires) {}

  std::size_t num_wires() const { return num_wires_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }

  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  /// Throws InputError if any wire is >= num_wires().
  Circuit& append(const Gate& gate);
  Circuit& append(const Circuit& other);

  /// Gates in reverse order. Since every primitive is self-inverse this is
  /// the inverse circuit.
  Circuit reversed() const;

  bool has_hadamard() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_wires_;
  std::vector<Gate> gates_;
};

/// SWAP(i, j) as CNOT(i,j) CNOT(j,i) CNOT(i,j).
Circuit decompose_swap(Wire i, Wire j);
/// CSWAP(c, i, j) as CNOT(j,i) TOFFOLI(c,i,j) CNOT(j,i).
Circuit decompose_cswap(Wire c, Wire i, Wire j);

enum class Decomposition {
  None,         // gates as built
  SwapsToCnot,  // SWAP -> 3 CNOT
  All,          // additionally CSWAP -> 2 CNOT + TOFFOLI
};

std::string_view to_string(Decomposition mode);

/// Rewrites a circuit in the requested primitive basis.
Circuit decompose(const Circuit& circuit, Decomposition mode);

struct GateCountReport {
  std::map<GateKind, std::size_t> tallies;

  std::size_t count(GateKind kind) const;
  std::size_t total() const;

  /// CNOT-equivalent cost using SWAP = 3, CSWAP = 8 and TOFFOLI = 6 CNOTs
  /// (the usual 6-CNOT Toffoli network); single-wire gates cost 0.
  std::size_t cnot_equivalent() const;

  GateCountReport& operator+=(const GateCountReport& other);
  friend bool operator==(const GateCountReport&, const GateCountReport&) = default;
};

GateCountReport count_gates(const Circuit& circuit);

}  // namespace qshift
