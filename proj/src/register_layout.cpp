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

#include "qshift/register_layout.hpp"

#include <algorithm>
#include <cmath>

#include "qshift/errors.hpp"

namespace qshift {

std::uint64_t read_value(BasisIndex index, const std::vector<Wire>& slots) {
  std::uint64_t value = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    value |= ((index >> slots[s].index) & 1u) << s;
  }
  return value;
}

BasisIndex write_value(BasisIndex index, const std::vector<Wire>& slots, std::uint64_t value) {
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const BasisIndex mask = BasisIndex{1} << slots[s].index;
    index = ((value >> s) & 1u) ? (index | mask) : (index & ~mask);
  }
  return index;
}

RegisterLayout& RegisterLayout::add(std::string name, std::vector<Wire> slots) {
  if (name.empty()) throw InputError("segment name must be nonempty");
  if (contains(name)) throw InputError("duplicate segment '" + name + "'");
  if (slots.empty()) throw InputError("segment '" + name + "' has no wires");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (used_.contains(slots[i].index) ||
        std::find(slots.begin(), slots.begin() + i, slots[i]) != slots.begin() + i) {
      throw InputError("wire " + std::to_string(slots[i].index) + " of segment '" + name +
                       "' is already assigned");
    }
  }
  for (Wire w : slots) used_[w.index] = segments_.size();
  segments_.push_back({std::move(name), std::move(slots)});
  return *this;
}

RegisterLayout& RegisterLayout::add(std::string name, std::size_t width) {
  std::vector<Wire> slots;
  std::uint32_t next = 0;
  while (slots.size() < width) {
    if (!used_.contains(next)) slots.emplace_back(next);
    ++next;
  }
  return add(std::move(name), std::move(slots));
}

void RegisterLayout::check_complete() const {
  if (used_.empty()) throw InputError("layout has no segments");
  if (used_.rbegin()->first + 1 != used_.size()) {
    throw InputError("layout segments do not cover wires 0.." + std::to_string(used_.size() - 1));
  }
}

void RegisterLayout::check_matches(const StateVector& state) const {
  check_complete();
  if (state.num_wires() != num_wires()) {
    throw InputError("layout covers " + std::to_string(num_wires()) + " wires but the state has " +
                     std::to_string(state.num_wires()));
  }
}

bool RegisterLayout::contains(std::string_view name) const {
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return s.name == name; });
}

const RegisterLayout::Segment& RegisterLayout::segment(std::string_view name) const {
  for (const Segment& s : segments_) {
    if (s.name == name) return s;
  }
  throw InputError("unknown segment '" + std::string(name) + "'");
}

std::uint64_t RegisterLayout::value(BasisIndex index, std::string_view name) const {
  return read_value(index, wires(name));
}

BasisIndex RegisterLayout::with_value(BasisIndex index, std::string_view name,
                                      std::uint64_t value) const {
  const auto& slots = wires(name);
  if (slots.size() < 64 && (value >> slots.size()) != 0) {
    throw InputError("value " + std::to_string(value) + " does not fit segment '" +
                     std::string(name) + "' of width " + std::to_string(slots.size()));
  }
  return write_value(index, slots, value);
}

std::string RegisterLayout::display(BasisIndex index) const {
  std::string out;
  out.reserve(num_wires());
  for (const Segment& s : segments_) {
    for (auto it = s.slots.rbegin(); it != s.slots.rend(); ++it) {
      out.push_back(((index >> it->index) & 1u) ? '1' : '0');
    }
  }
  return out;
}

BasisIndex RegisterLayout::parse(std::string_view bits) const {
  if (bits.size() != num_wires()) {
    throw InputError("bitstring '" + std::string(bits) + "' has " + std::to_string(bits.size()) +
                     " bits, layout has " + std::to_string(num_wires()));
  }
  BasisIndex index = 0;
  std::size_t pos = 0;
  for (const Segment& s : segments_) {
    for (auto it = s.slots.rbegin(); it != s.slots.rend(); ++it, ++pos) {
      const char ch = bits[pos];
      if (ch != '0' && ch != '1') {
        throw InputError("bitstring '" + std::string(bits) + "' contains '" + ch + "'");
      }
      if (ch == '1') index |= BasisIndex{1} << it->index;
    }
  }
  return index;
}

std::map<std::uint64_t, double> segment_value_distribution(const StateVector& state,
                                                           const RegisterLayout& layout,
                                                           std::string_view name) {
  layout.check_matches(state);
  const auto& slots = layout.wires(name);
  std::map<std::uint64_t, double> dist;
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p != 0.0) dist[read_value(i, slots)] += p;
  }
  return dist;
}

std::vector<Branch> branch_table(const StateVector& state, const RegisterLayout& layout,
                                 const std::vector<std::string>& names) {
  layout.check_matches(state);
  std::vector<const std::vector<Wire>*> segs;
  for (const auto& n : names) segs.push_back(&layout.wires(n));
  std::vector<Branch> rows;
  for (BasisIndex i : state.support()) {
    Branch b{{}, state[i]};
    for (const auto* slots : segs) b.values.push_back(read_value(i, *slots));
    rows.push_back(std::move(b));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Branch& x, const Branch& y) { return x.values < y.values; });
  return rows;
}

StateVector basis_from_values(const RegisterLayout& layout,
                              const std::vector<std::pair<std::string, std::uint64_t>>& values,
                              std::size_t max_wires) {
  layout.check_complete();
  BasisIndex index = 0;
  for (const auto& [name, v] : values) index = layout.with_value(index, name, v);
  return StateVector::basis(layout.num_wires(), index, max_wires);
}

}  // namespace qshift
