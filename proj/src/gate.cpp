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

#include "qshift/gate.hpp"

#include <algorithm>
#include <sstream>

#include "qshift/errors.hpp"

namespace qshift {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CSWAP: return "CSWAP";
    case GateKind::TOFFOLI: return "TOFFOLI";
  }
  return "?";
}

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H: return 1;
    case GateKind::CNOT:
    case GateKind::SWAP: return 2;
    case GateKind::CSWAP:
    case GateKind::TOFFOLI: return 3;
  }
  return 0;
}

Gate::Gate(GateKind kind, std::span<const Wire> wires) : kind_(kind) {
  if (wires.size() != arity(kind)) {
    throw InputError(std::string(to_string(kind)) + " takes " + std::to_string(arity(kind)) +
                     " wires, got " + std::to_string(wires.size()));
  }
  for (std::size_t i = 0; i < wires.size(); ++i) {
    for (std::size_t j = i + 1; j < wires.size(); ++j) {
      if (wires[i] == wires[j]) {
        throw InputError(std::string(to_string(kind)) + " has duplicate wire " +
                         std::to_string(wires[i].index));
      }
    }
  }
  std::copy(wires.begin(), wires.end(), wires_.begin());
}

Gate Gate::x(Wire target) { return Gate(GateKind::X, std::array{target}); }
Gate Gate::h(Wire target) { return Gate(GateKind::H, std::array{target}); }
Gate Gate::cnot(Wire control, Wire target) {
  return Gate(GateKind::CNOT, std::array{control, target});
}
Gate Gate::swap(Wire i, Wire j) { return Gate(GateKind::SWAP, std::array{i, j}); }
Gate Gate::cswap(Wire control, Wire i, Wire j) {
  return Gate(GateKind::CSWAP, std::array{control, i, j});
}
Gate Gate::toffoli(Wire control1, Wire control2, Wire target) {
  return Gate(GateKind::TOFFOLI, std::array{control1, control2, target});
}

std::string to_string(const Gate& gate) {
  std::ostringstream out;
  out << to_string(gate.kind()) << '(';
  const char* sep = "";
  for (Wire w : gate.wires()) {
    out << sep << w.index;
    sep = ",";
  }
  out << ')';
  return out.str();
}

Circuit& Circuit::append(const Gate& gate) {
  for (Wire w : gate.wires()) {
    if (w.index >= num_wires_) {
      throw InputError("gate " + to_string(gate) + " exceeds circuit width " +
                       std::to_string(num_wires_));
    }
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_wires_ > num_wires_) {
    throw InputError("cannot append a " + std::to_string(other.num_wires_) +
                     "-wire circuit to a " + std::to_string(num_wires_) + "-wire circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::reversed() const {
  Circuit out(num_wires_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

bool Circuit::has_hadamard() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.kind() == GateKind::H; });
}

Circuit decompose_swap(Wire i, Wire j) {
  if (i == j) throw InputError("decompose_swap needs two distinct wires");
  Circuit out(std::max(i.index, j.index) + 1);
  out.append(Gate::cnot(i, j)).append(Gate::cnot(j, i)).append(Gate::cnot(i, j));
  return out;
}

Circuit decompose_cswap(Wire c, Wire i, Wire j) {
  if (c == i || c == j || i == j) throw InputError("decompose_cswap needs three distinct wires");
  Circuit out(std::max({c.index, i.index, j.index}) + 1);
  out.append(Gate::cnot(j, i)).append(Gate::toffoli(c, i, j)).append(Gate::cnot(j, i));
  return out;
}

std::string_view to_string(Decomposition mode) {
  switch (mode) {
    case Decomposition::None: return "none";
    case Decomposition::SwapsToCnot: return "cnot";
    case Decomposition::All: return "all";
  }
  return "?";
}

Circuit decompose(const Circuit& circuit, Decomposition mode) {
  Circuit out(circuit.num_wires());
  for (const Gate& g : circuit) {
    if (g.kind() == GateKind::SWAP && mode != Decomposition::None) {
      out.append(decompose_swap(g[0], g[1]));
    } else if (g.kind() == GateKind::CSWAP && mode == Decomposition::All) {
      out.append(decompose_cswap(g[0], g[1], g[2]));
    } else {
      out.append(g);
    }
  }
  return out;
}

std::size_t GateCountReport::count(GateKind kind) const {
  auto it = tallies.find(kind);
  return it == tallies.end() ? 0 : it->second;
}

std::size_t GateCountReport::total() const {
  std::size_t sum = 0;
  for (const auto& [kind, n] : tallies) sum += n;
  return sum;
}

std::size_t GateCountReport::cnot_equivalent() const {
  return count(GateKind::CNOT) + 3 * count(GateKind::SWAP) + 8 * count(GateKind::CSWAP) +
         6 * count(GateKind::TOFFOLI);
}

GateCountReport& GateCountReport::operator+=(const GateCountReport& other) {
  for (const auto& [kind, n] : other.tallies) tallies[kind] += n;
  return *this;
}

GateCountReport count_gates(const Circuit& circuit) {
  GateCountReport report;
  for (const Gate& g : circuit) ++report.tallies[g.kind()];
  return report;
}

}  // namespace qshift
