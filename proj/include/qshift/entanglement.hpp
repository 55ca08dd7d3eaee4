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
#include <span>
#include <vector>

#include "qshift/gate.hpp"
#include "qshift/state_vector.hpp"

namespace qshift {

/// Singular values at or below this are treated as zero.
inline constexpr double kSchmidtThreshold = 1e-10;

struct SchmidtResult {
  std::size_t rank = 0;
  std::vector<double> coefficients;  // nonzero singular values, descending

  bool is_product() const { return rank == 1; }
};

/// Schmidt decomposition of `state` across (cut | rest). `cut` must be a
/// nonempty proper subset of the state's wires.
SchmidtResult schmidt_decomposition(const StateVector& state, std::span<const Wire> cut,
                                    double threshold = kSchmidtThreshold);

inline SchmidtResult is_product_across(const StateVector& state, std::span<const Wire> cut) {
  return schmidt_decomposition(state, cut);
}

}  // namespace qshift
