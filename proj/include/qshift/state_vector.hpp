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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qshift/gate.hpp"

namespace qshift {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

/// Norm and amplitude-equality tolerance.
inline constexpr double kTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxWires = 24;

/// Dense vector of 2^m amplitudes. Wire w is bit w of the basis index; that
/// packing is internal and everything user-facing goes through
/// RegisterLayout.
class StateVector {
 public:
  /// |0...0> on num_wires wires.
  explicit StateVector(std::size_t num_wires, std::size_t max_wires = kDefaultMaxWires);

  /// Throws InputError unless amplitudes.size() == 2^num_wires and the norm
  /// is 1 within `tolerance`.
  static StateVector from_amplitudes(std::size_t num_wires, std::vector<Amplitude> amplitudes,
                                     double tolerance = kTolerance,
                                     std::size_t max_wires = kDefaultMaxWires);

  /// Basis state from a bitstring written highest wire first, so "100" sets
  /// wire 2. The string must have exactly num_wires characters.
  static StateVector basis(std::size_t num_wires, std::string_view bits,
                           std::size_t max_wires = kDefaultMaxWires);
  static StateVector basis(std::size_t num_wires, BasisIndex index,
                           std::size_t max_wires = kDefaultMaxWires);

  std::size_t num_wires() const { return num_wires_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude operator[](BasisIndex i) const { return amplitudes_[i]; }

  double norm() const;

  /// Basis indices whose amplitude modulus exceeds kTolerance.
  std::vector<BasisIndex> support() const;

  /// True if wire `w` reads 0 on every basis component in the support.
  bool wire_is_zero(Wire w) const;

  StateVector& apply(const Gate& gate);
  StateVector& run(const Circuit& circuit);

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(std::size_t num_wires, std::vector<Amplitude> amplitudes);

  void check_gate(const Gate& gate) const;

  std::size_t num_wires_;
  std::vector<Amplitude> amplitudes_;
};

StateVector apply_gate(StateVector state, const Gate& gate);
/// Throws InputError when the circuit width differs from the state's.
StateVector run_circuit(StateVector state, const Circuit& circuit);

/// Largest |a_i - b_i| over all amplitudes; wire counts must match.
double max_abs_difference(const StateVector& a, const StateVector& b);

}  // namespace qshift
