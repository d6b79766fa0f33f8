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

#ifndef STEMSIM_CRITICAL_HPP_
#define STEMSIM_CRITICAL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stemsim/alphabet.hpp"
#include "stemsim/weights.hpp"

namespace stemsim {

// A probability distribution p(a,b) over the 16 stems.
class StemDistribution {
 public:
  using Grid = std::array<double, kStemCount>;

  // Entries must be >= 0 and sum to 1 within sum_tolerance.
  explicit StemDistribution(const Grid& p, double sum_tolerance = 1e-12);

  // Rescales nonnegative masses to unit total, e.g. for 4-decimal tables.
  static StemDistribution normalized(const Grid& masses);
  static StemDistribution uniform();

  double operator()(Stem s) const noexcept { return p_[s.index()]; }
  double at(Base a, Base b) const noexcept { return p_[Stem{a, b}.index()]; }
  const Grid& values() const noexcept { return p_; }

 private:
  Grid p_;
};

struct Marginals {
  std::array<double, 4> first;   // p_1(a) = sum_b p(a,b)
  std::array<double, 4> second;  // p_2(a) = sum_b p(b,a)
};

Marginals marginals(const StemDistribution& p) noexcept;

// max_a |p_1(a) - p_2(a)|
double marginal_residual(const StemDistribution& p) noexcept;

// T_w(p) = sum over stems of (p - p^2) w.
double objective(const WeightTable& w, const StemDistribution& p) noexcept;

// Stationary chain: x_1 ~ initial, x_{i+1} | x_i ~ transitions[x_i].
struct TransitionModel {
  std::array<double, 4> initial{};
  std::array<std::array<double, 4>, 4> transitions{};

  // Throws kValidation unless every row and the initial vector are
  // nonnegative and sum to 1 within 1e-12.
  void validate() const;

  static TransitionModel uniform();
};

// initial = p_1, transitions[a][b] = p(a,b) / p_1(a). Requires marginal
// equality within 1e-8 and p_1(a) > 0 for every base; a zero marginal raises
// kZeroMarginal naming the base.
TransitionModel conditional_model(const StemDistribution& p);

// True iff every ordered pair (a,b) is reachable in 1..4 steps along
// transitions with positive probability. Depends only on the support.
bool markov_condition(const TransitionModel& m) noexcept;

struct SolverOptions {
  double tolerance = 1e-9;             // projected-gradient residual
  std::size_t max_iterations = 1'000'000;
  double support_threshold = 1e-6;     // p(s) below this counts as forbidden
};

struct CriticalReport {
  std::string table_name;
  double t_value = 0.0;
  StemDistribution optimum = StemDistribution::uniform();
  std::vector<Stem> forbidden_stems;  // ascending stem index
  bool markov_ok = false;
  bool regular = false;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Maximizes T_w(p) over distributions with p_1 = p_2 by projected gradient
// ascent. Throws kNotConverged when the iteration cap is reached.
CriticalReport maximize_critical(const WeightTable& w,
                                 const SolverOptions& options = {});

// "L4", "L6", "none", or "other".
std::string forbidden_set_label(const std::vector<Stem>& forbidden);

enum class RateRegime { kZeroRate, kPositiveRate, kIndeterminate };

std::string_view rate_regime_name(RateRegime r) noexcept;

// Zero rate when d >= T_w; positive when d < T_w and w is regular. For a
// non-regular table the regime is positive only when a feasible witness
// satisfying the Markov condition has T_w(witness) > d, else indeterminate.
RateRegime classify_rate(const CriticalReport& report, const WeightTable& w,
                         double d,
                         const std::optional<StemDistribution>& witness = {});
RateRegime classify_rate(const WeightTable& w, double d,
                         const std::optional<StemDistribution>& witness = {});

}  // namespace stemsim

#endif  // STEMSIM_CRITICAL_HPP_
