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

#include "stemsim/similarity.hpp"

#include <algorithm>
#include <string>

#include "stemsim/error.hpp"

namespace stemsim {
namespace {

void require_equal_length(const Strand& x, const Strand& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "strand lengths differ: " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  }
}

}  // namespace

double stem_similarity(const WeightTable& w, const Strand& x, const Strand& y) {
  require_equal_length(x, y);
  double sum = 0.0;
  bool prev_equal = x[0] == y[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const bool equal = x[i] == y[i];
    if (prev_equal && equal) sum += w.at(x[i - 1], x[i]);
    prev_equal = equal;
  }
  return sum;
}

double stem_distance(const WeightTable& w, const Strand& x, const Strand& y) {
  require_equal_length(x, y);
  // Summing the per-position differences keeps the result exactly zero for
  // x == y and nonnegative term by term.
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] != y[i] || x[i + 1] != y[i + 1]) sum += w(x.stem_at(i));
  }
  return sum;
}

double duplex_energy(const WeightTable& w, const Strand& x, const Strand& y) {
  require_equal_length(x, y);
  return stem_similarity(w, x, reverse_complement(y));
}

double max_self_similarity(const WeightTable& w, std::size_t n) {
  if (n < 2) return 0.0;
  // best[b]: heaviest walk of the current length ending in base b.
  std::array<double, 4> best{};
  for (std::size_t step = 1; step < n; ++step) {
    std::array<double, 4> next{};
    for (Base b : kBases) {
      double m = 0.0;
      for (Base a : kBases) m = std::max(m, best[index_of(a)] + w.at(a, b));
      next[index_of(b)] = m;
    }
    best = next;
  }
  return *std::max_element(best.begin(), best.end());
}

}  // namespace stemsim
