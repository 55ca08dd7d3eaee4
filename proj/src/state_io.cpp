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

#include "qshift/state_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "qshift/errors.hpp"

namespace qshift {

namespace {

double parse_double(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InputError("line " + std::to_string(line_no) + ": bad number '" + std::string(token) +
                     "'");
  }
  return value;
}

}  // namespace

void write_state(std::ostream& out, const StateVector& state, const RegisterLayout& layout) {
  layout.check_matches(state);
  std::vector<std::pair<std::string, Amplitude>> lines;
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (amps[i] != Amplitude{}) lines.emplace_back(layout.display(i), amps[i]);
  }
  std::sort(lines.begin(), lines.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << std::setprecision(17);
  buf << "wires=" << state.num_wires() << '\n';
  for (const auto& [bits, a] : lines) buf << bits << ' ' << a.real() << ' ' << a.imag() << '\n';
  out << buf.str();
}

StateVector read_state(std::istream& in, const RegisterLayout& layout, double tolerance,
                       std::size_t max_wires) {
  layout.check_complete();
  std::string line;
  std::size_t line_no = 0;
  std::size_t wires = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind("wires=", 0) != 0) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'wires=<m>' header");
    }
    const std::string_view digits = std::string_view(line).substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), wires);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("line " + std::to_string(line_no) + ": bad wire count");
    }
    have_header = true;
  }
  if (!have_header) throw InputError("state file is empty");
  if (wires != layout.num_wires()) {
    throw InputError("state file has " + std::to_string(wires) + " wires, layout expects " +
                     std::to_string(layout.num_wires()));
  }
  if (wires > max_wires) {
    throw InputError("state file has " + std::to_string(wires) + " wires, limit is " +
                     std::to_string(max_wires));
  }

  std::vector<Amplitude> amps(std::size_t{1} << wires);
  std::vector<bool> seen(amps.size(), false);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string bits, re, im, extra;
    if (!(fields >> bits)) continue;
    if (!(fields >> re >> im) || (fields >> extra)) {
      throw InputError("line " + std::to_string(line_no) + ": expected '<bits> <real> <imag>'");
    }
    const BasisIndex index = layout.parse(bits);
    if (seen[index]) {
      throw InputError("line " + std::to_string(line_no) + ": repeated basis state " + bits);
    }
    seen[index] = true;
    amps[index] = {parse_double(re, line_no), parse_double(im, line_no)};
  }
  return StateVector::from_amplitudes(wires, std::move(amps), tolerance, max_wires);
}

StateVector read_state_file(const std::filesystem::path& path, const RegisterLayout& layout,
                            double tolerance, std::size_t max_wires) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open state file " + path.string());
  return read_state(in, layout, tolerance, max_wires);
}

void write_state_file(const std::filesystem::path& path, const StateVector& state,
                      const RegisterLayout& layout) {
  std::ostringstream content;
  write_state(content, state, layout);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content.str();
    out.flush();
    if (!out) throw InputError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot replace " + path.string());
  }
}

}  // namespace qshift
