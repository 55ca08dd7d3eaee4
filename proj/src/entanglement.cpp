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

#include "qshift/entanglement.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>

#include "qshift/errors.hpp"
#include "qshift/register_layout.hpp"

namespace qshift {

SchmidtResult schmidt_decomposition(const StateVector& state, std::span<const Wire> cut,
                                    double threshold) {
  const std::size_t m = state.num_wires();
  std::vector<bool> in_cut(m, false);
  std::vector<Wire> left;
  for (Wire w : cut) {
    if (w.index >= m) throw InputError("cut wire " + std::to_string(w.index) + " out of range");
    if (in_cut[w.index]) throw InputError("cut lists wire " + std::to_string(w.index) + " twice");
    in_cut[w.index] = true;
    left.push_back(w);
  }
  if (left.empty() || left.size() == m) {
    throw InputError("cut must be a nonempty proper subset of the wires");
  }
  std::vector<Wire> right;
  for (std::uint32_t w = 0; w < m; ++w) {
    if (!in_cut[w]) right.emplace_back(w);
  }
  // Put the smaller side on the rows; the rank is the same either way.
  if (left.size() > right.size()) std::swap(left, right);

  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(Eigen::Index{1} << left.size(),
                                                Eigen::Index{1} << right.size());
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (amps[i] == Amplitude{}) continue;
    psi(static_cast<Eigen::Index>(read_value(i, left)),
        static_cast<Eigen::Index>(read_value(i, right))) = amps[i];
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi);
  SchmidtResult result;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double s = svd.singularValues()(k);
    if (s > threshold) result.coefficients.push_back(s);
  }
  std::sort(result.coefficients.rbegin(), result.coefficients.rend());
  result.rank = result.coefficients.size();
  return result;
}

}  // namespace qshift
