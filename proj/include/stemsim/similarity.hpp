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

#ifndef STEMSIM_SIMILARITY_HPP_
#define STEMSIM_SIMILARITY_HPP_

#include "stemsim/alphabet.hpp"
#include "stemsim/weights.hpp"

namespace stemsim {

// Additive stem similarity: the sum of w(x_i, x_{i+1}) over positions i where
// both x_i = y_i and x_{i+1} = y_{i+1}. Throws kLengthMismatch.
double stem_similarity(const WeightTable& w, const Strand& x, const Strand& y);

// S(x,x) - S(x,y). Ordered: in general stem_distance(w,x,y) differs from
// stem_distance(w,y,x).
double stem_distance(const WeightTable& w, const Strand& x, const Strand& y);

// Hybridization energy of x against y: S(x, rc(y)). Symmetric in x and y for
// Watson-Crick invariant weights.
double duplex_energy(const WeightTable& w, const Strand& x, const Strand& y);

// Largest S(x,x) over all strands of length n: the heaviest walk of n-1 stems.
double max_self_similarity(const WeightTable& w, std::size_t n);

}  // namespace stemsim

#endif  // STEMSIM_SIMILARITY_HPP_
