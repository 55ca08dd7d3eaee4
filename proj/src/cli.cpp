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

#include "qshift/cli.hpp"

#include <CLI11.hpp>
#include <bit>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "qshift/arithmetic.hpp"
#include "qshift/errors.hpp"
#include "qshift/state_io.hpp"

namespace qshift::cli {

namespace {

constexpr std::string_view kDescription =
    "Gate-level simulator for swap-network shift registers and shift-and-add multipliers.";

const std::map<std::string, Direction> kDirections{{"left", Direction::Left},
                                                   {"right", Direction::Right}};
const std::map<std::string, Decomposition> kModes{{"none", Decomposition::None},
                                                  {"cnot", Decomposition::SwapsToCnot},
                                                  {"all", Decomposition::All}};

std::string validate_binary(const std::string& text) {
  try {
    parse_binary(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

std::pair<std::size_t, std::size_t> parse_slot_range(std::string_view text, std::size_t width) {
  const auto to_int = [&](std::string_view s) {
    std::size_t v = 0;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("bad slot range '" + std::string(text) + "'");
    }
    for (char ch : s) v = v * 10 + static_cast<std::size_t>(ch - '0');
    return v;
  };
  const auto dash = text.find('-');
  const std::size_t lo = to_int(text.substr(0, dash));
  const std::size_t hi = dash == std::string_view::npos ? lo : to_int(text.substr(dash + 1));
  if (lo < 1 || hi < lo || hi > width) {
    throw InputError("slot range '" + std::string(text) + "' outside 1.." + std::to_string(width));
  }
  return {lo, hi};
}

std::string format_amplitude(Amplitude a) {
  std::ostringstream s;
  s << std::setprecision(12);
  s << a.real();
  if (a.imag() != 0.0) s << std::showpos << a.imag() << 'i';
  return s.str();
}

}  // namespace

std::uint64_t parse_binary(std::string_view text) {
  if (text.empty() || text.size() > 63 || text.find_first_not_of("01") != std::string_view::npos) {
    throw InputError("multiplier must be a binary literal of 1..63 digits, got '" +
                     std::string(text) + "'");
  }
  std::uint64_t v = 0;
  for (char ch : text) v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  return v;
}

ParseResult parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string multiplier;
  std::string direction = "left";
  std::string mode = "none";
  std::optional<std::size_t> nB_override;

  CLI::App app{std::string(kDescription), "qshift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", cfg.tolerance, "Norm tolerance when reading state files")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-wires", cfg.max_wires, "Largest state the simulator will allocate")
      ->check(CLI::Range(1, 30));

  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "Input state file")->required();
    sub->add_option("--out", cfg.out, "Output state file")->required();
  };
  const auto width = [](CLI::App* sub, const std::string& name, std::size_t& field,
                        const std::string& help) {
    return sub->add_option(name, field, help)->required()->check(CLI::PositiveNumber);
  };
  const auto add_mul_const_widths = [&](CLI::App* sub) {
    width(sub, "--nA", cfg.nA, "Width of A");
    width(sub, "--kA", cfg.kA, "Shift ancilla of A");
  };
  const auto add_mul_quantum_widths = [&](CLI::App* sub) {
    width(sub, "--nA", cfg.nA, "Width of A");
    width(sub, "--kA", cfg.kA, "Shift ancilla of A");
    width(sub, "--nC", cfg.nC, "Width of C");
    width(sub, "--kC", cfg.kC, "Shift ancilla of C");
    width(sub, "--nB", cfg.nB, "Width of the accumulator B");
  };

  auto* shift = app.add_subcommand("shift", "Shift (or with --rotate, rotate) a register once");
  width(shift, "--n", cfg.n, "Data width");
  width(shift, "--k", cfg.k, "Ancilla width");
  shift->add_option("--dir", direction, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  shift->add_flag("--rotate", cfg.rotate, "Rotate instead of shift");
  add_io(shift);

  auto* rotate = app.add_subcommand("rotate", "Rotate a register once");
  width(rotate, "--n", cfg.n, "Data width");
  width(rotate, "--k", cfg.k, "Ancilla width");
  rotate->add_option("--dir", direction, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  add_io(rotate);

  auto* gatecount = app.add_subcommand("gatecount", "Gate tallies for one shift");
  width(gatecount, "--n", cfg.n, "Data width");
  width(gatecount, "--k", cfg.k, "Ancilla width");
  gatecount->add_option("--decompose", mode, "none, cnot or all")
      ->check(CLI::IsMember({"none", "cnot", "all"}));

  auto* mul_const = app.add_subcommand("mul-const", "B := A * l for a classical l");
  add_mul_const_widths(mul_const);
  width(mul_const, "--nB", cfg.nB, "Width of the accumulator B");
  mul_const->add_option("--l", multiplier, "Multiplier in binary")
      ->required()
      ->check(validate_binary);
  add_io(mul_const);

  auto* mul_quantum = app.add_subcommand("mul-quantum", "B := A * C for two registers");
  add_mul_quantum_widths(mul_quantum);
  add_io(mul_quantum);

  auto* cost = app.add_subcommand("cost", "Gate totals of mul-const against a classical count");
  add_mul_const_widths(cost);
  cost->add_option("--l", multiplier, "Multiplier in binary")->required()->check(validate_binary);
  cost->add_option("--nB", nB_override, "Width of B (default nA + bits of l)")
      ->check(CLI::PositiveNumber);
  cost->add_option("--values", cfg.superposed_values, "Superposed values N (default 2^nA)")
      ->check(CLI::PositiveNumber);

  auto* prepare = app.add_subcommand("prepare", "Write a starting state for one of the layouts");
  prepare->add_option("--layout", cfg.layout, "shift, mul-const or mul-quantum")
      ->required()
      ->check(CLI::IsMember({"shift", "mul-const", "mul-quantum"}));
  for (auto [name, field] : {std::pair{"--n", &cfg.n}, {"--k", &cfg.k}, {"--nA", &cfg.nA},
                             {"--kA", &cfg.kA}, {"--nB", &cfg.nB}, {"--nC", &cfg.nC},
                             {"--kC", &cfg.kC}}) {
    prepare->add_option(name, *field, "Register width")->check(CLI::PositiveNumber);
  }
  prepare->add_option("--kind", cfg.kind, "zero, basis or uniform")
      ->required()
      ->check(CLI::IsMember({"zero", "basis", "uniform"}));
  prepare->add_option("--bits", cfg.bits, "Full bitstring for --kind basis");
  prepare->add_option("--set", cfg.assignments, "NAME=VALUE for --kind basis");
  prepare->add_option("--segment", cfg.segment, "NAME or NAME:SLOTS for --kind uniform");
  prepare->add_option("--out", cfg.out, "Output state file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (shift->parsed()) cfg.command = cfg.rotate ? Command::Rotate : Command::Shift;
    if (rotate->parsed()) cfg.command = Command::Rotate;
    if (gatecount->parsed()) cfg.command = Command::GateCount;
    if (mul_const->parsed()) cfg.command = Command::MulConst;
    if (mul_quantum->parsed()) cfg.command = Command::MulQuantum;
    if (cost->parsed()) cfg.command = Command::Cost;
    if (prepare->parsed()) {
      cfg.command = Command::Prepare;
      const bool shift_layout = cfg.layout == "shift";
      const bool quantum_layout = cfg.layout == "mul-quantum";
      const auto need = [&](std::size_t v, const char* name) {
        if (v == 0) throw CLI::ValidationError(std::string(name) + " is required for this layout");
      };
      if (shift_layout) {
        need(cfg.n, "--n");
        need(cfg.k, "--k");
      } else {
        need(cfg.nA, "--nA");
        need(cfg.kA, "--kA");
        need(cfg.nB, "--nB");
        if (quantum_layout) {
          need(cfg.nC, "--nC");
          need(cfg.kC, "--kC");
        }
      }
      if (cfg.kind == "uniform" && cfg.segment.empty()) {
        throw CLI::ValidationError("--kind uniform needs --segment");
      }
    }
    cfg.direction = kDirections.at(direction);
    cfg.decompose = kModes.at(mode);
    if (!multiplier.empty()) cfg.multiplier = parse_binary(multiplier);
    if (cfg.command == Command::Cost) {
      cfg.nB = nB_override.value_or(cfg.nA + static_cast<std::size_t>(std::bit_width(cfg.multiplier)));
    }
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, 0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, 0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, 2, std::string("error: ") + e.what() + "\n\n" + app.help()};
  }
  return {cfg, 0, {}};
}

RegisterLayout layout_for(const RunConfig& c) {
  switch (c.command) {
    case Command::Shift:
    case Command::Rotate:
    case Command::GateCount:
      return ShiftLayout::standalone(c.n, c.k).registers();
    case Command::MulConst:
    case Command::Cost:
      return MulConstLayout::make({c.nA, c.kA, c.nB, c.multiplier}).registers;
    case Command::MulQuantum:
      return MulQuantumLayout::make({c.nA, c.kA, c.nC, c.kC, c.nB}).registers;
    case Command::Prepare:
      if (c.layout == "shift") return ShiftLayout::standalone(c.n, c.k).registers();
      if (c.layout == "mul-const") return MulConstLayout::make({c.nA, c.kA, c.nB, 0}).registers;
      if (c.layout == "mul-quantum") {
        return MulQuantumLayout::make({c.nA, c.kA, c.nC, c.kC, c.nB}).registers;
      }
      throw InputError("unknown layout '" + c.layout + "'");
  }
  throw InputError("unknown command");
}

StateVector prepare_state(std::string_view kind, const RegisterLayout& layout,
                          std::string_view bits, const std::vector<std::string>& assignments,
                          std::string_view segment, std::size_t max_wires) {
  layout.check_complete();
  if (kind == "zero") return StateVector(layout.num_wires(), max_wires);
  if (kind == "basis") {
    BasisIndex index = bits.empty() ? 0 : layout.parse(bits);
    for (const std::string& a : assignments) {
      const auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0) throw InputError("expected NAME=VALUE, got '" + a + "'");
      const std::string value = a.substr(eq + 1);
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
          value.size() > 19) {
        throw InputError("bad value in '" + a + "'");
      }
      index = layout.with_value(index, a.substr(0, eq), std::stoull(value));
    }
    return StateVector::basis(layout.num_wires(), index, max_wires);
  }
  if (kind == "uniform") {
    const auto colon = segment.find(':');
    const auto& slots = layout.wires(segment.substr(0, colon));
    std::size_t lo = 1, hi = slots.size();
    if (colon != std::string_view::npos) {
      std::tie(lo, hi) = parse_slot_range(segment.substr(colon + 1), slots.size());
    }
    StateVector state(layout.num_wires(), max_wires);
    for (std::size_t s = lo; s <= hi; ++s) state.apply(Gate::h(slots[s - 1]));
    return state;
  }
  throw InputError("state kind must be zero, basis or uniform, got '" + std::string(kind) + "'");
}

void print_branch_table(std::ostream& out, const StateVector& state, const RegisterLayout& layout,
                        const std::vector<std::string>& names) {
  for (const auto& n : names) out << std::setw(8) << n;
  out << "  amplitude\n";
  for (const Branch& b : branch_table(state, layout, names)) {
    for (std::uint64_t v : b.values) out << std::setw(8) << v;
    out << "  " << format_amplitude(b.amplitude) << '\n';
  }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Shift:
      case Command::Rotate: {
        const ShiftLayout shift_layout = ShiftLayout::standalone(c.n, c.k);
        const RegisterLayout layout = shift_layout.registers();
        StateVector state = read_state_file(c.in, layout, c.tolerance, c.max_wires);
        if (c.command == Command::Rotate) {
          rotate(state, shift_layout, c.direction);
        } else {
          shift(state, shift_layout, c.direction);
        }
        write_state_file(c.out, state, layout);
        print_branch_table(out, state, layout, {"a", "b"});
        return 0;
      }
      case Command::GateCount: {
        const GateCountReport report = gate_count({c.n, c.k, Direction::Left}, c.decompose);
        out << "gates for one shift (n=" << c.n << ", k=" << c.k
            << ", decompose=" << to_string(c.decompose) << ")\n";
        for (const auto& [kind, count] : report.tallies) {
          out << "  " << std::left << std::setw(18) << to_string(kind) << std::right
              << std::setw(8) << count << '\n';
        }
        out << "  " << std::left << std::setw(18) << "total" << std::right << std::setw(8)
            << report.total() << '\n';
        out << "  " << std::left << std::setw(18) << "cnot_equivalent" << std::right
            << std::setw(8) << report.cnot_equivalent() << '\n';
        for (const auto& [kind, count] : report.tallies) out << to_string(kind) << '=' << count << '\n';
        out << "total=" << report.total() << '\n';
        out << "cnot_equivalent=" << report.cnot_equivalent() << '\n';
        return 0;
      }
      case Command::MulConst: {
        const MulConstSpec spec{c.nA, c.kA, c.nB, c.multiplier};
        const MulConstLayout layout = MulConstLayout::make(spec);
        StateVector state = read_state_file(c.in, layout.registers, c.tolerance, c.max_wires);
        multiply_by_constant(state, spec, layout);
        write_state_file(c.out, state, layout.registers);
        print_branch_table(out, state, layout.registers, {"A", "B"});
        return 0;
      }
      case Command::MulQuantum: {
        const MulQuantumSpec spec{c.nA, c.kA, c.nC, c.kC, c.nB};
        const MulQuantumLayout layout = MulQuantumLayout::make(spec);
        StateVector state = read_state_file(c.in, layout.registers, c.tolerance, c.max_wires);
        multiply_registers(state, spec, layout);
        write_state_file(c.out, state, layout.registers);
        print_branch_table(out, state, layout.registers, {"A", "B"});
        return 0;
      }
      case Command::Cost: {
        out << format_cost_report(cost_report({c.nA, c.kA, c.nB, c.multiplier}, c.superposed_values));
        return 0;
      }
      case Command::Prepare: {
        const RegisterLayout layout = layout_for(c);
        const StateVector state =
            prepare_state(c.kind, layout, c.bits, c.assignments, c.segment, c.max_wires);
        write_state_file(c.out, state, layout);
        std::vector<std::string> names;
        for (const auto& s : layout.segments()) names.push_back(s.name);
        print_branch_table(out, state, layout, names);
        return 0;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == 0 ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace qshift::cli
