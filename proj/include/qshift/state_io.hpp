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

#include <filesystem>
#include <iosfwd>

#include "qshift/register_layout.hpp"
#include "qshift/state_vector.hpp"

namespace qshift {

// State files are plain text:
//
//   wires=<m>
//   <bitstring> <real> <imag>
//   ...
//
// with one line per nonzero amplitude. Bitstrings follow
// RegisterLayout::display() order and lines are sorted by bitstring.
// Amplitudes carry 17 significant digits, enough to round-trip a double.

void write_state(std::ostream& out, const StateVector& state, const RegisterLayout& layout);

/// Throws InputError on a malformed file, a wire count that differs from the
/// layout, a repeated bitstring, or a norm off from 1 by more than
/// `tolerance`.
StateVector read_state(std::istream& in, const RegisterLayout& layout,
                       double tolerance = kTolerance, std::size_t max_wires = kDefaultMaxWires);

StateVector read_state_file(const std::filesystem::path& path, const RegisterLayout& layout,
                            double tolerance = kTolerance,
                            std::size_t max_wires = kDefaultMaxWires);

/// Writes through a sibling temporary and renames, so `path` is either left
/// untouched or holds the complete new state.
void write_state_file(const std::filesystem::path& path, const StateVector& state,
                      const RegisterLayout& layout);

}  // namespace qshift
