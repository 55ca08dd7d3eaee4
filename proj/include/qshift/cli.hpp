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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qshift/gate.hpp"
#include "qshift/register_layout.hpp"
#include "qshift/shift_register.hpp"
#include "qshift/state_vector.hpp"

namespace qshift::cli {

enum class Command { Shift, Rotate, GateCount, MulConst, MulQuantum, Cost, Prepare };

struct RunConfig {
  Command command = Command::Shift;

  std::size_t n = 0, k = 0;
  std::size_t nA = 0, kA = 0, nB = 0, nC = 0, kC = 0;
  Direction direction = Direction::Left;
  bool rotate = false;
  std::uint64_t multiplier = 0;
  std::optional<std::uint64_t> superposed_values;  // cost --values

  std::filesystem::path in, out;
  Decomposition decompose = Decomposition::None;
  double tolerance = kTolerance;
  std::size_t max_wires = kDefaultMaxWires;

  // prepare
  std::string layout;  // shift | mul-const | mul-quantum
  std::string kind;    // zero | basis | uniform
  std::string bits;
  std::vector<std::string> assignments;  // NAME=VALUE, for basis
  std::string segment;                   // NAME or NAME:SLOTS, for uniform
};

struct ParseResult {
  std::optional<RunConfig> config;  // set when the arguments are valid
  int exit_code = 0;                // 0 for --help, 2 for usage errors
  std::string message;              // help or usage text
};

/// `args` excludes the program name.
ParseResult parse_args(const std::vector<std::string>& args);

/// Parses a binary literal such as "1100". Throws InputError.
std::uint64_t parse_binary(std::string_view text);

/// Layout the given subcommand (or prepare --layout) works on.
RegisterLayout layout_for(const RunConfig& config);

/// kind is "zero", "basis" or "uniform". For basis, `bits` is a full
/// display-order bitstring or empty, and `assignments` are NAME=VALUE pairs
/// applied on top. For uniform, `segment` is NAME (every wire) or NAME:SLOTS
/// with SLOTS like "1" or "1-3" (1-based, slot 1 least significant); H is
/// applied to each selected wire of |0...0>.
StateVector prepare_state(std::string_view kind, const RegisterLayout& layout,
                          std::string_view bits, const std::vector<std::string>& assignments,
                          std::string_view segment, std::size_t max_wires = kDefaultMaxWires);

/// Executes a parsed command. Returns 0 on success and 1 on a domain error
/// (message on `err`, output file untouched).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, and map errors to exit statuses.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void print_branch_table(std::ostream& out, const StateVector& state, const RegisterLayout& layout,
                        const std::vector<std::string>& names);

}  // namespace qshift::cli
