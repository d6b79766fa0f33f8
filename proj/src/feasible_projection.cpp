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

#include "feasible_projection.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace stemsim::internal {
namespace {

// Orthonormal basis of the constraint normals plus the matching right-hand
// sides, built once by Gram-Schmidt. The four marginal-difference rows have
// rank 3 (they sum to zero), so one is dropped.
struct AffineBasis {
  std::vector<Vec16> normals;
  std::vector<double> offsets;

  AffineBasis() {
    std::vector<std::pair<Vec16, double>> rows;
    Vec16 ones;
    ones.fill(1.0);
    rows.emplace_back(ones, 1.0);
    for (std::size_t a = 0; a < 4; ++a) {
      Vec16 r{};
      for (std::size_t b = 0; b < 4; ++b) {
        r[4 * a + b] += 1.0;
        r[4 * b + a] -= 1.0;
      }
      rows.emplace_back(r, 0.0);
    }
    for (auto [r, c] : rows) {
      for (std::size_t k = 0; k < normals.size(); ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < 16; ++i) dot += r[i] * normals[k][i];
        for (std::size_t i = 0; i < 16; ++i) r[i] -= dot * normals[k][i];
        c -= dot * offsets[k];
      }
      double norm = 0.0;
      for (double v : r) norm += v * v;
      norm = std::sqrt(norm);
      if (norm < 1e-9) continue;
      for (double& v : r) v /= norm;
      normals.push_back(r);
      offsets.push_back(c / norm);
    }
  }
};

const AffineBasis& affine_basis() {
  static const AffineBasis basis;
  return basis;
}

}  // namespace

Vec16 project_affine(const Vec16& y) noexcept {
  const auto& basis = affine_basis();
  Vec16 out = y;
  for (std::size_t k = 0; k < basis.normals.size(); ++k) {
    const auto& q = basis.normals[k];
    double dot = 0.0;
    for (std::size_t i = 0; i < 16; ++i) dot += q[i] * y[i];
    const double excess = dot - basis.offsets[k];
    for (std::size_t i = 0; i < 16; ++i) out[i] -= excess * q[i];
  }
  return out;
}

Vec16 project_feasible(const Vec16& y, double tolerance, std::size_t max_sweeps,
                       ProjectionStats* stats) noexcept {
  // The affine step needs no Dykstra correction: its residual always lies in
  // the normal space of the affine set, which the projection annihilates.
  Vec16 x = y;
  Vec16 correction{};
  Vec16 on_affine = project_affine(x);
  std::size_t sweep = 0;
  double gap = 0.0;
  for (; sweep < max_sweeps; ++sweep) {
    gap = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      const double shifted = on_affine[i] + correction[i];
      const double clipped = std::max(0.0, shifted);
      correction[i] = shifted - clipped;
      x[i] = clipped;
    }
    on_affine = project_affine(x);
    for (std::size_t i = 0; i < 16; ++i) {
      gap = std::max(gap, std::abs(on_affine[i] - x[i]));
    }
    if (gap <= tolerance) {
      ++sweep;
      break;
    }
  }
  if (stats) {
    stats->sweeps = sweep;
    stats->gap = gap;
  }
  return x;
}

}  // namespace stemsim::internal
