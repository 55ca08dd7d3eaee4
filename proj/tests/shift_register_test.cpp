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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "qshift/entanglement.hpp"
#include "qshift/errors.hpp"
#include "qshift/shift_register.hpp"
#include "test_support.hpp"

using namespace qshift;
using qshift::testutil::random_state;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Independent oracle: the data wires followed by the ancilla in reverse
// (b_1..b_n, a_k..a_1) form one (n+k)-bit word W. Shift-left rotates W left
// by one; with c = 1 the bits landing in b_1 and a_k (positions 0 and n) are
// then exchanged. Right is the inverse.
std::uint64_t pack_word(std::uint64_t data, std::uint64_t ancilla, std::size_t n, std::size_t k) {
  std::uint64_t w = data;
  for (std::size_t i = 0; i < k; ++i) {
    if ((ancilla >> i) & 1u) w |= std::uint64_t{1} << (n + k - 1 - i);  // a_{i+1}
  }
  return w;
}

std::uint64_t word_oracle(std::uint64_t w, std::size_t n, std::size_t k, bool control,
                          Direction dir) {
  if (dir == Direction::Left) {
    w = testutil::rotl(w, n + k);
    return control ? testutil::swap_bits(w, 0, n) : w;
  }
  if (control) w = testutil::swap_bits(w, 0, n);
  return testutil::rotr(w, n + k);
}

std::vector<bool> bits_of(std::uint64_t v, std::size_t width) {
  std::vector<bool> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = (v >> i) & 1u;
  return out;
}

std::uint64_t value_of(const std::vector<bool>& bits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) v |= std::uint64_t{bits[i]} << i;
  return v;
}

StateVector register_state(const RegisterLayout& layout, std::uint64_t a, std::uint64_t b,
                           bool c = false) {
  BasisIndex index = layout.with_value(0, "a", a);
  index = layout.with_value(index, "b", b);
  index = layout.with_value(index, "c", c ? 1 : 0);
  return StateVector::basis(layout.num_wires(), index);
}

}  // namespace

// ---------- build_shift_circuit ----------

TEST(BuildShiftCircuit, CanonicalOrderN4K2) {
  // a_1=0 a_2=1 b_1..b_4=2..5 c=6
  const Circuit c = build_shift_circuit({4, 2, Direction::Left});
  const std::vector<Gate> expected = {
      Gate::swap(Wire(0), Wire(1)), Gate::swap(Wire(4), Wire(5)),
      Gate::swap(Wire(3), Wire(4)), Gate::swap(Wire(2), Wire(3)),
      Gate::swap(Wire(1), Wire(2)), Gate::cswap(Wire(6), Wire(1), Wire(2))};
  EXPECT_EQ(c.gates(), expected);
  EXPECT_EQ(c.num_wires(), 7u);
}

TEST(BuildShiftCircuit, SmallestRegister) {
  const auto counts = count_gates(build_shift_circuit({1, 1, Direction::Left}));
  EXPECT_EQ(counts.count(GateKind::SWAP), 1u);
  EXPECT_EQ(counts.count(GateKind::CSWAP), 1u);
  EXPECT_EQ(counts.total(), 2u);
}

TEST(BuildShiftCircuit, RightIsReversedLeft) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      EXPECT_EQ(build_shift_circuit({n, k, Direction::Right}),
                build_shift_circuit({n, k, Direction::Left}).reversed());
    }
  }
}

TEST(BuildShiftCircuit, InvalidSpec) {
  EXPECT_THROW(build_shift_circuit({0, 1}), InputError);
  EXPECT_THROW(build_shift_circuit({1, 0}), InputError);
}

TEST(BuildShiftCircuit, ExhaustiveAgainstBothOracles) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const ShiftLayout shift = ShiftLayout::standalone(n, k);
      const RegisterLayout layout = shift.registers();
      for (Direction dir : {Direction::Left, Direction::Right}) {
        const Circuit circuit = build_shift_circuit({n, k, dir});
        for (int c = 0; c <= 1; ++c) {
          for (std::uint64_t a = 0; a < (1u << k); ++a) {
            for (std::uint64_t b = 0; b < (1u << n); ++b) {
              const StateVector out = run_circuit(register_state(layout, a, b, c), circuit);
              const auto support = out.support();
              ASSERT_EQ(support.size(), 1u);
              ASSERT_EQ(out[support[0]], Amplitude(1.0));
              const std::uint64_t a_out = layout.value(support[0], "a");
              const std::uint64_t b_out = layout.value(support[0], "b");
              ASSERT_EQ(layout.value(support[0], "c"), static_cast<std::uint64_t>(c));

              const ShiftBits expected = classical_shift_oracle(bits_of(a, k), bits_of(b, n), c, dir);
              ASSERT_EQ(a_out, value_of(expected.ancilla)) << n << k << c << a << b;
              ASSERT_EQ(b_out, value_of(expected.data)) << n << k << c << a << b;
              ASSERT_EQ(pack_word(b_out, a_out, n, k),
                        word_oracle(pack_word(b, a, n, k), n, k, c, dir));
            }
          }
        }
      }
    }
  }
}

// ---------- shift ----------

TEST(Shift, DoublesValueAndParksExitBit) {
  // b value 2: (b_1..b_4) = (0,1,0,0)
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 2);
  const RegisterLayout layout = shift_layout.registers();
  StateVector s = register_state(layout, 0, 2);
  shift(s, shift_layout, Direction::Left);
  const auto support = s.support();
  ASSERT_EQ(support.size(), 1u);
  EXPECT_EQ(layout.value(support[0], "b"), 4u);
  EXPECT_EQ(layout.value(support[0], "a"), 0u);
}

TEST(Shift, ExitingBitLandsInTopAncilla) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 2);
  const RegisterLayout layout = shift_layout.registers();
  StateVector s = register_state(layout, 0, 9);  // 1001
  shift(s, shift_layout, Direction::Left);
  const BasisIndex out = s.support().at(0);
  EXPECT_EQ(layout.value(out, "b"), 2u);  // 0010
  EXPECT_EQ(layout.value(out, "a"), 2u);  // a_2 = old b_4
}

TEST(Shift, ZeroStateIsFixed) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 2);
  StateVector s(7);
  shift(s, shift_layout, Direction::Left);
  EXPECT_EQ(s, StateVector(7));
}

TEST(Shift, SuperposedDataShiftsBranchwise) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 2);
  const RegisterLayout layout = shift_layout.registers();
  std::vector<Amplitude> amps(128);
  amps[layout.with_value(0, "b", 1)] = kInvSqrt2;
  amps[layout.with_value(0, "b", 2)] = kInvSqrt2;
  StateVector s = StateVector::from_amplitudes(7, amps);
  shift(s, shift_layout, Direction::Left);

  std::vector<Amplitude> expected(128);
  expected[layout.with_value(0, "b", 2)] = kInvSqrt2;
  expected[layout.with_value(0, "b", 4)] = kInvSqrt2;
  EXPECT_LT(max_abs_difference(s, StateVector::from_amplitudes(7, expected)), 1e-12);
  EXPECT_EQ(is_product_across(s, shift_layout.ancilla).rank, 1u);
}

TEST(Shift, RequiresControlClear) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(3, 1);
  StateVector s = register_state(shift_layout.registers(), 0, 1, /*c=*/true);
  EXPECT_THROW(shift(s, shift_layout, Direction::Left), InputError);
  EXPECT_THROW(rotate(s, shift_layout, Direction::Left), InputError);
}

TEST(Shift, MissingSegmentIsInputError) {
  RegisterLayout layout;
  layout.add("a", 1).add("b", 2);
  EXPECT_THROW(ShiftLayout::from_segments(layout), InputError);
  layout.add("c", 2);
  EXPECT_THROW(ShiftLayout::from_segments(layout), InputError);
}

TEST(ShiftTimes, MultipleShiftsNeedCleanAncilla) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(5, 3);
  const RegisterLayout layout = shift_layout.registers();
  StateVector s = register_state(layout, 0, 3);
  shift_times(s, shift_layout, Direction::Left, 3);
  EXPECT_EQ(layout.value(s.support().at(0), "b"), 24u);

  StateVector too_many = register_state(layout, 0, 3);
  EXPECT_THROW(shift_times(too_many, shift_layout, Direction::Left, 4), InputError);

  // a_2 = 1 would enter the data on the second shift.
  StateVector dirty = register_state(layout, 0b010, 3);
  EXPECT_THROW(shift_times(dirty, shift_layout, Direction::Left, 2), InputError);
  EXPECT_NO_THROW(shift_times(dirty, shift_layout, Direction::Left, 1));
}

TEST(ShiftTimes, RightShiftsHalve) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 2);
  const RegisterLayout layout = shift_layout.registers();
  StateVector s = register_state(layout, 0, 13);  // 1101
  shift_times(s, shift_layout, Direction::Right, 2);
  const BasisIndex out = s.support().at(0);
  EXPECT_EQ(layout.value(out, "b"), 3u);
  // consumed bits b_1 = 1, b_2 = 0: a_1 holds the last one out, a_2 the first
  EXPECT_EQ(layout.value(out, "a"), 0b10u);
}

// ---------- rotate ----------

TEST(Rotate, MsbWrapsToLsb) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 2);
  const RegisterLayout layout = shift_layout.registers();
  StateVector one = register_state(layout, 0, 1);
  rotate(one, shift_layout, Direction::Left);
  EXPECT_EQ(layout.value(one.support().at(0), "b"), 2u);
  StateVector eight = register_state(layout, 0, 8);
  rotate(eight, shift_layout, Direction::Left);
  const BasisIndex out = eight.support().at(0);
  EXPECT_EQ(layout.value(out, "b"), 1u);
  EXPECT_EQ(layout.value(out, "a"), 0u);
  EXPECT_EQ(layout.value(out, "c"), 0u);  // c lowered again
}

TEST(Rotate, AncillaRotatesToo) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(3, 3);
  const RegisterLayout layout = shift_layout.registers();
  StateVector s = register_state(layout, 0b001, 0);  // a_1 = 1
  rotate(s, shift_layout, Direction::Left);
  EXPECT_EQ(layout.value(s.support().at(0), "a"), 0b100u);  // now in a_3
}

TEST(Rotate, OrderIsLcmOfWidths) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const ShiftLayout shift_layout = ShiftLayout::standalone(n, k);
      const RegisterLayout layout = shift_layout.registers();
      const std::size_t order = std::lcm(n, k);
      for (int trial = 0; trial < 4; ++trial) {
        const StateVector start =
            register_state(layout, rng() % (1u << k), rng() % (1u << n));
        StateVector s = start;
        for (std::size_t r = 0; r < order; ++r) rotate(s, shift_layout, Direction::Left);
        EXPECT_EQ(s, start) << n << "," << k;
      }
      // No smaller positive power of the wire permutation is the identity.
      const StateVector marker = register_state(layout, 1, 1);
      StateVector s = marker;
      for (std::size_t r = 1; r < order; ++r) {
        rotate(s, shift_layout, Direction::Left);
        const BasisIndex out = s.support().at(0);
        EXPECT_FALSE(layout.value(out, "a") == 1 && layout.value(out, "b") == 1)
            << n << "," << k << " r=" << r;
      }
    }
  }
}

TEST(Rotate, LeftThenRightIsIdentity) {
  std::mt19937_64 rng(32);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const ShiftLayout shift_layout = ShiftLayout::standalone(n, k);
      // random state with c = 0 on every component
      StateVector r = random_state(n + k, rng);
      std::vector<Amplitude> amps(std::size_t{1} << (n + k + 1));
      std::copy(r.amplitudes().begin(), r.amplitudes().end(), amps.begin());
      const StateVector start = StateVector::from_amplitudes(n + k + 1, amps);
      StateVector s = start;
      rotate(s, shift_layout, Direction::Left);
      rotate(s, shift_layout, Direction::Right);
      EXPECT_LT(max_abs_difference(s, start), 1e-12);
    }
  }
}

// ---------- classical_shift_oracle ----------

TEST(ClassicalOracle, WorkedExample) {
  const ShiftBits out = classical_shift_oracle({0, 0}, {1, 1, 0, 0}, false, Direction::Left);
  EXPECT_EQ(out.ancilla, (std::vector<bool>{0, 0}));
  EXPECT_EQ(out.data, (std::vector<bool>{0, 1, 1, 0}));
}

TEST(ClassicalOracle, ControlExchangesTopAncillaAndLowestData) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 3;
    const auto a = bits_of(rng(), k);
    const auto b = bits_of(rng(), n);
    ShiftBits shifted = classical_shift_oracle(a, b, false, Direction::Left);
    const ShiftBits rotated = classical_shift_oracle(a, b, true, Direction::Left);
    const bool top = shifted.ancilla[k - 1];
    shifted.ancilla[k - 1] = shifted.data[0];
    shifted.data[0] = top;
    EXPECT_EQ(shifted, rotated);
  }
}

TEST(ClassicalOracle, RotationMatchesWrittenForm) {
  // (a_1..a_3; b_1..b_4) -> (a_2, a_3, a_1; b_4, b_1, b_2, b_3)
  const ShiftBits out =
      classical_shift_oracle({1, 0, 0}, {0, 0, 0, 1}, true, Direction::Left);
  EXPECT_EQ(out.ancilla, (std::vector<bool>{0, 0, 1}));
  EXPECT_EQ(out.data, (std::vector<bool>{1, 0, 0, 0}));
}

TEST(ClassicalOracle, RightUndoesLeftExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (int c = 0; c <= 1; ++c) {
        for (std::uint64_t a = 0; a < (1u << k); ++a) {
          for (std::uint64_t b = 0; b < (1u << n); ++b) {
            const ShiftBits left = classical_shift_oracle(bits_of(a, k), bits_of(b, n), c,
                                                          Direction::Left);
            const ShiftBits back =
                classical_shift_oracle(left.ancilla, left.data, c, Direction::Right);
            ASSERT_EQ(value_of(back.ancilla), a);
            ASSERT_EQ(value_of(back.data), b);
          }
        }
      }
    }
  }
}

TEST(ClassicalOracle, AgreesWithAdjacentTranspositions) {
  // Replays the swap sequence on a plain array (a_1..a_k, b_1..b_n).
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 3;
    std::vector<bool> cells = bits_of(rng(), k);
    const auto b = bits_of(rng(), n);
    cells.insert(cells.end(), b.begin(), b.end());
    const std::vector<bool> a(cells.begin(), cells.begin() + k);
    for (std::size_t i = 0; i + 1 < k; ++i) std::swap(cells[i], cells[i + 1]);
    for (std::size_t j = k + n - 1; j > k; --j) std::swap(cells[j - 1], cells[j]);
    std::swap(cells[k - 1], cells[k]);
    const ShiftBits out = classical_shift_oracle(a, b, false, Direction::Left);
    EXPECT_EQ(std::vector<bool>(cells.begin(), cells.begin() + k), out.ancilla);
    EXPECT_EQ(std::vector<bool>(cells.begin() + k, cells.end()), out.data);
  }
}

// ---------- gate_count ----------

TEST(GateCount, FourByTwo) {
  const ShiftSpec spec{4, 2};
  auto none = gate_count(spec, Decomposition::None);
  EXPECT_EQ(none.count(GateKind::SWAP), 5u);
  EXPECT_EQ(none.count(GateKind::CSWAP), 1u);
  auto cnot = gate_count(spec, Decomposition::SwapsToCnot);
  EXPECT_EQ(cnot.count(GateKind::CNOT), 15u);
  EXPECT_EQ(cnot.count(GateKind::CSWAP), 1u);
  EXPECT_EQ(cnot.count(GateKind::SWAP), 0u);
}

TEST(GateCount, FullyDecomposedSmallest) {
  const auto all = gate_count({1, 1}, Decomposition::All);
  EXPECT_EQ(all.count(GateKind::CNOT), 5u);  // 3 + 2
  EXPECT_EQ(all.count(GateKind::TOFFOLI), 1u);
  EXPECT_EQ(all.total(), 6u);
}

TEST(GateCount, FormulaOverRange) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto all = gate_count({n, k}, Decomposition::All);
      EXPECT_EQ(all.count(GateKind::CNOT), 3 * (n + k - 1) + 2);
      EXPECT_EQ(all.count(GateKind::TOFFOLI), 1u);
    }
  }
}

// ---------- properties ----------

TEST(ShiftProperties, LinearityOnSmallSuperpositions) {
  std::mt19937_64 rng(35);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 3;
    const std::size_t m = n + k + 1;
    const ShiftLayout shift_layout = ShiftLayout::standalone(n, k);
    const RegisterLayout layout = shift_layout.registers();
    const Circuit circuit = build_shift_circuit({n, k, Direction::Left});
    const std::size_t terms = 2 + rng() % 2;

    std::vector<Amplitude> input(std::size_t{1} << m), expected(std::size_t{1} << m);
    double norm = 0;
    std::vector<std::pair<BasisIndex, Amplitude>> picked;
    for (std::size_t t = 0; t < terms; ++t) {
      const BasisIndex idx = rng() % (std::size_t{1} << m);
      const Amplitude amp{gauss(rng), gauss(rng)};
      picked.emplace_back(idx, amp);
    }
    for (auto& [idx, amp] : picked) input[idx] += amp;
    for (auto& a : input) norm += std::norm(a);
    for (auto& a : input) a /= std::sqrt(norm);
    for (BasisIndex idx = 0; idx < input.size(); ++idx) {
      if (input[idx] == Amplitude{}) continue;
      // shifted image of this basis state, via the classical oracle
      const ShiftBits out = classical_shift_oracle(bits_of(layout.value(idx, "a"), k),
                                                   bits_of(layout.value(idx, "b"), n),
                                                   layout.value(idx, "c"), Direction::Left);
      BasisIndex image = layout.with_value(idx, "a", value_of(out.ancilla));
      image = layout.with_value(image, "b", value_of(out.data));
      expected[image] += input[idx];
    }
    const StateVector got = run_circuit(StateVector::from_amplitudes(m, input), circuit);
    EXPECT_LT(max_abs_difference(got, StateVector::from_amplitudes(m, expected)), 1e-12);
  }
}

TEST(ShiftProperties, LeftThenRightIsIdentityOnRandomStates) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 3;
    const StateVector s = random_state(n + k + 1, rng);
    const StateVector back =
        run_circuit(run_circuit(s, build_shift_circuit({n, k, Direction::Left})),
                    build_shift_circuit({n, k, Direction::Right}));
    EXPECT_LT(max_abs_difference(back, s), 1e-12);
  }
}

TEST(ShiftProperties, SmallValuesDouble) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const ShiftLayout shift_layout = ShiftLayout::standalone(n, k);
      const RegisterLayout layout = shift_layout.registers();
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << (n - 1)); ++v) {
        StateVector s = register_state(layout, 0, v);
        shift(s, shift_layout, Direction::Left);
        const BasisIndex out = s.support().at(0);
        EXPECT_EQ(layout.value(out, "b"), 2 * v);
        EXPECT_EQ(layout.value(out, "a"), 0u);
      }
    }
  }
}

TEST(ShiftProperties, AncillaStaysSeparableWhenExitBitAgrees) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 4, k = 1 + rng() % 3;
    const std::size_t m = n + k + 1;
    const ShiftLayout shift_layout = ShiftLayout::standalone(n, k);
    const RegisterLayout layout = shift_layout.registers();
    const bool top = rng() & 1u;
    // superposition over data values sharing b_n = top, ancilla 0
    std::vector<Amplitude> amps(std::size_t{1} << m);
    double norm = 0;
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << (n - 1)); ++low) {
      const std::uint64_t v = low | (std::uint64_t{top} << (n - 1));
      const Amplitude amp{gauss(rng), gauss(rng)};
      amps[layout.with_value(0, "b", v)] = amp;
      norm += std::norm(amp);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    StateVector s = StateVector::from_amplitudes(m, amps);
    shift(s, shift_layout, Direction::Left);
    EXPECT_EQ(is_product_across(s, shift_layout.ancilla).rank, 1u);
  }
}

TEST(ShiftProperties, BasisInputsStayProductAcrossEveryCut) {
  const ShiftLayout shift_layout = ShiftLayout::standalone(3, 2);
  const RegisterLayout layout = shift_layout.registers();
  for (std::uint64_t v = 0; v < 8; ++v) {
    StateVector s = register_state(layout, 0, v);
    shift(s, shift_layout, Direction::Left);
    for (std::uint32_t mask = 1; mask + 1 < (1u << 6); ++mask) {
      std::vector<Wire> cut;
      for (std::uint32_t w = 0; w < 6; ++w) {
        if ((mask >> w) & 1u) cut.emplace_back(w);
      }
      ASSERT_EQ(is_product_across(s, cut).rank, 1u);
    }
  }
}

TEST(ShiftProperties, DifferingExitBitsEntangleAncillaWithData) {
  // (|b=0001> + |b=1000>)/sqrt2: b_4 differs, so after one shift a_k carries
  // it while the remaining data also differs between branches.
  const ShiftLayout shift_layout = ShiftLayout::standalone(4, 1);
  const RegisterLayout layout = shift_layout.registers();
  std::vector<Amplitude> amps(64);
  amps[layout.with_value(0, "b", 1)] = kInvSqrt2;
  amps[layout.with_value(0, "b", 8)] = kInvSqrt2;
  StateVector s = StateVector::from_amplitudes(6, amps);
  EXPECT_EQ(is_product_across(s, shift_layout.ancilla).rank, 1u);
  shift(s, shift_layout, Direction::Left);
  EXPECT_EQ(is_product_across(s, shift_layout.ancilla).rank, 2u);
}
