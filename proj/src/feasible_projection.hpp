// Copyright 2026 The stemsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Euclidean projection onto the set of stem distributions with equal row and
// column marginals: { p >= 0, sum p = 1, p_1 = p_2 }.

#ifndef STEMSIM_SRC_FEASIBLE_PROJECTION_HPP_
#define STEMSIM_SRC_FEASIBLE_PROJECTION_HPP_

#include <array>
#include <cstddef>

namespace stemsim::internal {

using Vec16 = std::array<double, 16>;

struct ProjectionStats {
  std::size_t sweeps = 0;
  double gap = 0.0;  // final max |orthant iterate - affine iterate|
};

// Affine part only: sum p = 1 and p_1 = p_2.
Vec16 project_affine(const Vec16& y) noexcept;

// Dykstra's alternating projection between the nonnegative orthant and the
// affine set. The returned point is the orthant iterate: entries are >= 0
// with exact zeros on the inactive stems, and the equality constraints hold
// within `gap`.
Vec16 project_feasible(const Vec16& y, double tolerance = 1e-13,
                       std::size_t max_sweeps = 200'000,
                       ProjectionStats* stats = nullptr) noexcept;

}  // namespace stemsim::internal

#endif  // STEMSIM_SRC_FEASIBLE_PROJECTION_HPP_
