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

#include "stemsim/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "feasible_projection.hpp"
#include "stemsim/error.hpp"

namespace stemsim {
namespace {

constexpr double kMarginalTolerance = 1e-8;
constexpr double kStochasticTolerance = 1e-12;

using Support = std::array<std::array<bool, 4>, 4>;

bool reachable_within_four(const Support& step) noexcept {
  Support power = step;  // pairs reachable in exactly m steps
  Support any = step;
  for (int m = 2; m <= 4; ++m) {
    Support next{};
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t k = 0; k < 4; ++k)
        if (power[a][k])
          for (std::size_t b = 0; b < 4; ++b)
            if (step[k][b]) next[a][b] = true;
    power = next;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) any[a][b] = any[a][b] || power[a][b];
  }
  for (const auto& row : any)
    for (bool v : row)
      if (!v) return false;
  return true;
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

StemDistribution::StemDistribution(const Grid& p, double sum_tolerance)
    : p_(p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kStemCount; ++i) {
    if (!(p_[i] >= 0.0) || !std::isfinite(p_[i])) {
      throw Error(ErrorKind::kValidation,
                  "probability of stem " + Stem::from_index(i).to_string() +
                      " must be nonnegative, got " + format_value(p_[i]));
    }
    sum += p_[i];
  }
  if (std::abs(sum - 1.0) > sum_tolerance) {
    throw Error(ErrorKind::kValidation,
                "stem probabilities sum to " + format_value(sum) + ", not 1");
  }
}

StemDistribution StemDistribution::normalized(const Grid& masses) {
  double sum = 0.0;
  for (double v : masses) sum += v;
  if (!(sum > 0.0)) {
    throw Error(ErrorKind::kValidation, "stem masses have zero total");
  }
  Grid p = masses;
  for (double& v : p) v /= sum;
  return StemDistribution(p, 1e-12);
}

StemDistribution StemDistribution::uniform() {
  Grid p;
  p.fill(1.0 / static_cast<double>(kStemCount));
  return StemDistribution(p);
}

Marginals marginals(const StemDistribution& p) noexcept {
  Marginals m{};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      m.first[a] += p.values()[4 * a + b];
      m.second[a] += p.values()[4 * b + a];
    }
  }
  return m;
}

double marginal_residual(const StemDistribution& p) noexcept {
  const Marginals m = marginals(p);
  double r = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    r = std::max(r, std::abs(m.first[a] - m.second[a]));
  }
  return r;
}

double objective(const WeightTable& w, const StemDistribution& p) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < kStemCount; ++i) {
    const double q = p.values()[i];
    sum += (q - q * q) * w.values()[i];
  }
  return sum;
}

void TransitionModel::validate() const {
  auto check = [](const std::array<double, 4>& row, const std::string& what) {
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw Error(ErrorKind::kValidation,
                    what + " has a negative or non-finite entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      throw Error(ErrorKind::kValidation,
                  what + " sums to " + format_value(sum) + ", not 1");
    }
  };
  check(initial, "initial distribution");
  for (Base a : kBases) {
    check(transitions[index_of(a)],
          std::string("transition row ") + to_char(a));
  }
}

TransitionModel TransitionModel::uniform() {
  TransitionModel m;
  m.initial.fill(0.25);
  for (auto& row : m.transitions) row.fill(0.25);
  return m;
}

TransitionModel conditional_model(const StemDistribution& p) {
  const Marginals m = marginals(p);
  for (Base a : kBases) {
    const std::size_t i = index_of(a);
    if (std::abs(m.first[i] - m.second[i]) > kMarginalTolerance) {
      throw Error(ErrorKind::kValidation,
                  std::string("marginals differ at base ") + to_char(a) +
                      ": p1=" + format_value(m.first[i]) +
                      ", p2=" + format_value(m.second[i]));
    }
    if (!(m.first[i] > 0.0)) {
      throw Error(ErrorKind::kZeroMarginal,
                  std::string("base ") + to_char(a) + " has zero marginal");
    }
  }
  TransitionModel model;
  model.initial = m.first;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      model.transitions[a][b] = p.values()[4 * a + b] / m.first[a];
    }
  }
  return model;
}

bool markov_condition(const TransitionModel& m) noexcept {
  Support step{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) step[a][b] = m.transitions[a][b] > 0.0;
  return reachable_within_four(step);
}

CriticalReport maximize_critical(const WeightTable& w,
                                 const SolverOptions& options) {
  if (!(options.tolerance > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be positive");
  }
  const auto& weights = w.values();
  // The gradient of T_w is w (1 - 2p), Lipschitz with constant 2 max w.
  const double step = 1.0 / (2.0 * w.max_weight());

  internal::Vec16 p = StemDistribution::uniform().values();
  double residual = 0.0;
  std::size_t it = 0;
  bool converged = false;
  while (it < options.max_iterations) {
    ++it;
    internal::Vec16 ascent;
    for (std::size_t i = 0; i < kStemCount; ++i) {
      ascent[i] = p[i] + step * weights[i] * (1.0 - 2.0 * p[i]);
    }
    const internal::Vec16 next = internal::project_feasible(ascent);
    double sq = 0.0;
    for (std::size_t i = 0; i < kStemCount; ++i) {
      sq += (next[i] - p[i]) * (next[i] - p[i]);
    }
    residual = std::sqrt(sq) / step;
    p = next;
    if (residual <= options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorKind::kNotConverged,
                "projected gradient did not converge after " +
                    std::to_string(it) + " iterations (residual " +
                    format_value(residual) + ")");
  }

  for (double& v : p) v = std::max(0.0, v);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= total;

  CriticalReport report;
  report.table_name = w.name();
  report.optimum = StemDistribution(p);
  report.t_value = objective(w, report.optimum);
  report.iterations = it;
  report.residual = residual;

  Support support{};
  for (std::size_t i = 0; i < kStemCount; ++i) {
    const bool present = p[i] >= options.support_threshold;
    if (!present) report.forbidden_stems.push_back(Stem::from_index(i));
    support[i / 4][i % 4] = present;
  }
  report.markov_ok = reachable_within_four(support);
  report.regular = report.markov_ok;
  return report;
}

std::string forbidden_set_label(const std::vector<Stem>& forbidden) {
  auto as_set = [](std::initializer_list<const char*> names) {
    std::vector<Stem> out;
    for (const char* s : names) {
      out.push_back(Stem{*base_from_char(s[0]), *base_from_char(s[1])});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Stem> sorted = forbidden;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return "none";
  if (sorted == as_set({"AT", "TA", "AA", "TT"})) return "L4";
  if (sorted == as_set({"AT", "TA", "AA", "TT", "AG", "CT"})) return "L6";
  return "other";
}

std::string_view rate_regime_name(RateRegime r) noexcept {
  switch (r) {
    case RateRegime::kZeroRate: return "zero";
    case RateRegime::kPositiveRate: return "positive";
    case RateRegime::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

RateRegime classify_rate(const CriticalReport& report, const WeightTable& w,
                         double d,
                         const std::optional<StemDistribution>& witness) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorKind::kInvalidArgument,
                "relative distance must be positive, got " + format_value(d));
  }
  if (d >= report.t_value) return RateRegime::kZeroRate;
  if (report.regular) return RateRegime::kPositiveRate;
  if (witness && marginal_residual(*witness) <= kMarginalTolerance) {
    bool satisfies_m = false;
    try {
      satisfies_m = markov_condition(conditional_model(*witness));
    } catch (const Error&) {
      satisfies_m = false;
    }
    if (satisfies_m && d < objective(w, *witness)) {
      return RateRegime::kPositiveRate;
    }
  }
  return RateRegime::kIndeterminate;
}

RateRegime classify_rate(const WeightTable& w, double d,
                         const std::optional<StemDistribution>& witness) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorKind::kInvalidArgument,
                "relative distance must be positive, got " + format_value(d));
  }
  return classify_rate(maximize_critical(w), w, d, witness);
}

}  // namespace stemsim
