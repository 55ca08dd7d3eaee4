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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qshift/gate.hpp"
#include "qshift/state_vector.hpp"

namespace qshift {

/// Named, disjoint groups of wires. Within a segment slot 1 (element 0) is
/// the least significant bit. Bitstrings are displayed segment by segment in
/// declaration order, each segment most-significant slot first.
class RegisterLayout {
 public:
  struct Segment {
    std::string name;
    std::vector<Wire> slots;

    std::size_t width() const { return slots.size(); }
  };

  RegisterLayout() = default;

  /// Appends a segment over explicit wires. Throws InputError on an empty
  /// or duplicate name, an empty wire list, or a wire already in use.
  RegisterLayout& add(std::string name, std::vector<Wire> slots);
  /// Appends a segment over the next `width` unused wire indices.
  RegisterLayout& add(std::string name, std::size_t width);

  /// Number of wires covered. Layouts must cover [0, num_wires()) exactly
  /// before they can describe a state; see check_complete().
  std::size_t num_wires() const { return used_.size(); }
  void check_complete() const;
  /// check_complete() plus a wire-count match against `state`.
  void check_matches(const StateVector& state) const;

  bool contains(std::string_view name) const;
  const Segment& segment(std::string_view name) const;
  const std::vector<Wire>& wires(std::string_view name) const { return segment(name).slots; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Integer held by segment `name` on basis index `index`.
  std::uint64_t value(BasisIndex index, std::string_view name) const;
  /// Overwrites the bits of segment `name` in `index` with `value`.
  BasisIndex with_value(BasisIndex index, std::string_view name, std::uint64_t value) const;

  std::string display(BasisIndex index) const;
  /// Inverse of display(). Throws InputError on a malformed string.
  BasisIndex parse(std::string_view bits) const;

 private:
  std::vector<Segment> segments_;
  std::map<std::uint32_t, std::size_t> used_;  // wire -> segment position
};

std::uint64_t read_value(BasisIndex index, const std::vector<Wire>& slots);
BasisIndex write_value(BasisIndex index, const std::vector<Wire>& slots, std::uint64_t value);

/// Marginal probability of each integer value held by segment `name`.
/// Values with zero probability are omitted.
std::map<std::uint64_t, double> segment_value_distribution(const StateVector& state,
                                                           const RegisterLayout& layout,
                                                           std::string_view name);

/// One nonzero amplitude together with the values of selected segments.
struct Branch {
  std::vector<std::uint64_t> values;
  Amplitude amplitude;
};

/// Every basis component in the state's support, tagged with the values of
/// `names`, sorted lexicographically by those values.
std::vector<Branch> branch_table(const StateVector& state, const RegisterLayout& layout,
                                 const std::vector<std::string>& names);

/// Basis state whose segments hold the given values; unnamed segments are 0.
StateVector basis_from_values(const RegisterLayout& layout,
                              const std::vector<std::pair<std::string, std::uint64_t>>& values,
                              std::size_t max_wires = kDefaultMaxWires);

}  // namespace qshift
