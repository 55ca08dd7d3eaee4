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

#include "qshift/state_vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "qshift/errors.hpp"

namespace qshift {

namespace {

std::vector<Amplitude> zero_state(std::size_t num_wires, std::size_t max_wires) {
  if (num_wires < 1) throw InputError("a state needs at least one wire");
  if (num_wires > max_wires) {
    throw InputError("state of " + std::to_string(num_wires) + " wires exceeds the limit of " +
                     std::to_string(max_wires));
  }
  std::vector<Amplitude> amps(std::size_t{1} << num_wires);
  amps[0] = 1.0;
  return amps;
}

// Spreads the bits of `t` around zero bits at the given ascending positions.
inline BasisIndex insert_zero_bits(BasisIndex t, std::span<const std::uint32_t> sorted_positions) {
  for (std::uint32_t p : sorted_positions) {
    const BasisIndex low = t & ((BasisIndex{1} << p) - 1);
    t = ((t >> p) << (p + 1)) | low;
  }
  return t;
}

template <typename Kernel>
void for_each_block(std::size_t num_wires, const Gate& gate,
                    Kernel&& kernel) {
  std::array<std::uint32_t, 3> positions{};
  const auto wires = gate.wires();
  for (std::size_t i = 0; i < wires.size(); ++i) positions[i] = wires[i].index;
  std::sort(positions.begin(), positions.begin() + wires.size());
  const std::span<const std::uint32_t> sorted(positions.data(), wires.size());
  const BasisIndex blocks = BasisIndex{1} << (num_wires - wires.size());
  for (BasisIndex t = 0; t < blocks; ++t) kernel(insert_zero_bits(t, sorted));
}

inline BasisIndex bit(Wire w) { return BasisIndex{1} << w.index; }

}  // namespace

StateVector::StateVector(std::size_t num_wires, std::size_t max_wires)
    : num_wires_(num_wires), amplitudes_(zero_state(num_wires, max_wires)) {}

StateVector::StateVector(std::size_t num_wires, std::vector<Amplitude> amplitudes)
    : num_wires_(num_wires), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::size_t num_wires,
                                         std::vector<Amplitude> amplitudes, double tolerance,
                                         std::size_t max_wires) {
  if (num_wires < 1 || num_wires > max_wires) {
    throw InputError("wire count " + std::to_string(num_wires) + " outside [1, " +
                     std::to_string(max_wires) + "]");
  }
  if (amplitudes.size() != (std::size_t{1} << num_wires)) {
    throw InputError("expected " + std::to_string(std::size_t{1} << num_wires) +
                     " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  StateVector state(num_wires, std::move(amplitudes));
  if (std::abs(state.norm() - 1.0) > tolerance) {
    throw InputError("state is not normalized (norm " + std::to_string(state.norm()) + ")");
  }
  return state;
}

StateVector StateVector::basis(std::size_t num_wires, std::string_view bits,
                               std::size_t max_wires) {
  if (bits.size() != num_wires) {
    throw InputError("basis label has " + std::to_string(bits.size()) + " bits, expected " +
                     std::to_string(num_wires));
  }
  BasisIndex index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InputError("basis label must contain only 0 and 1");
    index = (index << 1) | static_cast<BasisIndex>(ch == '1');
  }
  return basis(num_wires, index, max_wires);
}

StateVector StateVector::basis(std::size_t num_wires, BasisIndex index, std::size_t max_wires) {
  StateVector state(num_wires, max_wires);
  if (index >= state.dimension()) throw InputError("basis index out of range");
  state.amplitudes_[0] = 0.0;
  state.amplitudes_[index] = 1.0;
  return state;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<BasisIndex> StateVector::support() const {
  std::vector<BasisIndex> out;
  for (BasisIndex i = 0; i < amplitudes_.size(); ++i) {
    if (std::abs(amplitudes_[i]) > kTolerance) out.push_back(i);
  }
  return out;
}

bool StateVector::wire_is_zero(Wire w) const {
  if (w.index >= num_wires_) throw InputError("wire " + std::to_string(w.index) + " out of range");
  const BasisIndex mask = bit(w);
  for (BasisIndex i = 0; i < amplitudes_.size(); ++i) {
    if ((i & mask) != 0 && std::abs(amplitudes_[i]) > kTolerance) return false;
  }
  return true;
}

void StateVector::check_gate(const Gate& gate) const {
  for (Wire w : gate.wires()) {
    if (w.index >= num_wires_) {
      throw InputError("gate " + to_string(gate) + " addresses wire " + std::to_string(w.index) +
                       " of a " + std::to_string(num_wires_) + "-wire state");
    }
  }
}

StateVector& StateVector::apply(const Gate& gate) {
  check_gate(gate);
  auto& amps = amplitudes_;
  switch (gate.kind()) {
    case GateKind::X: {
      const BasisIndex t = bit(gate[0]);
      for_each_block(num_wires_, gate,
                     [&](BasisIndex base) { std::swap(amps[base], amps[base | t]); });
      break;
    }
    case GateKind::H: {
      const BasisIndex t = bit(gate[0]);
      const double s = 1.0 / std::sqrt(2.0);
      for_each_block(num_wires_, gate, [&](BasisIndex base) {
        const Amplitude a0 = amps[base];
        const Amplitude a1 = amps[base | t];
        amps[base] = s * (a0 + a1);
        amps[base | t] = s * (a0 - a1);
      });
      break;
    }
    case GateKind::CNOT: {
      const BasisIndex c = bit(gate[0]);
      const BasisIndex t = bit(gate[1]);
      for_each_block(num_wires_, gate,
                     [&](BasisIndex base) { std::swap(amps[base | c], amps[base | c | t]); });
      break;
    }
    case GateKind::SWAP: {
      const BasisIndex i = bit(gate[0]);
      const BasisIndex j = bit(gate[1]);
      for_each_block(num_wires_, gate,
                     [&](BasisIndex base) { std::swap(amps[base | i], amps[base | j]); });
      break;
    }
    case GateKind::CSWAP: {
      const BasisIndex c = bit(gate[0]);
      const BasisIndex i = bit(gate[1]);
      const BasisIndex j = bit(gate[2]);
      for_each_block(num_wires_, gate,
                     [&](BasisIndex base) { std::swap(amps[base | c | i], amps[base | c | j]); });
      break;
    }
    case GateKind::TOFFOLI: {
      const BasisIndex cc = bit(gate[0]) | bit(gate[1]);
      const BasisIndex t = bit(gate[2]);
      for_each_block(num_wires_, gate,
                     [&](BasisIndex base) { std::swap(amps[base | cc], amps[base | cc | t]); });
      break;
    }
  }
  return *this;
}

StateVector& StateVector::run(const Circuit& circuit) {
  if (circuit.num_wires() != num_wires_) {
    throw InputError("circuit has " + std::to_string(circuit.num_wires()) +
                     " wires but the state has " + std::to_string(num_wires_));
  }
  for (const Gate& g : circuit) apply(g);
  return *this;
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

StateVector run_circuit(StateVector state, const Circuit& circuit) {
  state.run(circuit);
  return state;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.num_wires() != b.num_wires()) throw InputError("states have different wire counts");
  double worst = 0.0;
  for (BasisIndex i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace qshift
