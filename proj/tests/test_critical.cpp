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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "printed_tables.hpp"
#include "stemsim/critical.hpp"
#include "stemsim/error.hpp"

using namespace stemsim;

namespace {

constexpr Base A = Base::kA, C = Base::kC, G = Base::kG, T = Base::kT;

StemDistribution printed_distribution(const printed::OptimalTable& t) {
  return StemDistribution::normalized(t.p);
}

std::vector<std::string> names(const std::vector<Stem>& stems) {
  std::vector<std::string> out;
  for (Stem s : stems) out.push_back(s.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Weight 1 on AA, TT, CC, GG, CG, GC and 0.01 elsewhere. The maximizer puts
// 1/6 on each heavy stem, so {A}, {T} and {C,G} do not communicate.
WeightTable block_table() {
  WeightTable::Grid g;
  g.fill(0.01);
  for (const char* s : {"AA", "TT", "CC", "GG", "CG", "GC"}) {
    g[Stem{*base_from_char(s[0]), *base_from_char(s[1])}.index()] = 1.0;
  }
  return WeightTable(g, "block");
}

TransitionModel model_from_support(const std::array<std::array<bool, 4>, 4>& s) {
  TransitionModel m;
  m.initial.fill(0.25);
  for (std::size_t a = 0; a < 4; ++a) {
    const double count = static_cast<double>(std::count(s[a].begin(), s[a].end(), true));
    for (std::size_t b = 0; b < 4; ++b) m.transitions[a][b] = s[a][b] ? 1.0 / count : 0.0;
  }
  return m;
}

}  // namespace

TEST_CASE("marginals") {
  const auto u = marginals(StemDistribution::uniform());
  for (int a = 0; a < 4; ++a) {
    CHECK(u.first[a] == doctest::Approx(0.25));
    CHECK(u.second[a] == doctest::Approx(0.25));
  }

  const auto m = marginals(printed_distribution(printed::kUnified));
  for (int a = 0; a < 4; ++a) {
    CHECK(m.first[a] == doctest::Approx(printed::kUnified.p1[a]).epsilon(0.005));
  }

  StemDistribution::Grid point{};
  point[Stem{A, C}.index()] = 1.0;
  const auto pm = marginals(StemDistribution(point));
  CHECK(pm.first == std::array<double, 4>{1, 0, 0, 0});
  CHECK(pm.second == std::array<double, 4>{0, 1, 0, 0});
}

TEST_CASE("distribution validation") {
  StemDistribution::Grid g{};
  g[0] = 0.5;
  CHECK_THROWS_AS(StemDistribution{g}, Error);
  g[1] = 0.5;
  CHECK_NOTHROW(StemDistribution{g});
  g[1] = 0.6;
  g[2] = -0.1;
  CHECK_THROWS_AS(StemDistribution{g}, Error);
}

TEST_CASE("objective") {
  CHECK(objective(WeightTable::constant(1.0), StemDistribution::uniform()) ==
        doctest::Approx(0.9375));
  const auto u = load_builtin(BuiltinTable::kUnified1998);
  CHECK(std::abs(objective(u, printed_distribution(printed::kUnified)) - 1.58) <=
        0.005);
  // The printed Breslauer optimum is listed with T = 1.70, but under the
  // printed Breslauer weights its value is
  //   2(.0344 - .0344^2) + 2(1.66)(.2190 - .2190^2) + (1.98 + 1.70)(.2466 - .2466^2)
  //   = 1.3180.
  const auto b = load_builtin(BuiltinTable::kBreslauer1986);
  const double direct = 2 * (.0344 - .0344 * .0344) +
                        2 * 1.66 * (.2190 - .2190 * .2190) +
                        (1.98 + 1.70) * (.2466 - .2466 * .2466);
  CHECK(direct == doctest::Approx(1.3180).epsilon(1e-4));
  CHECK(objective(b, printed_distribution(printed::kBreslauer)) ==
        doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("maximize_critical on the unified table") {
  const auto w = load_builtin(BuiltinTable::kUnified1998);
  const auto r = maximize_critical(w);
  CHECK(std::abs(r.t_value - 1.58) <= 0.01);
  CHECK(names(r.forbidden_stems) == std::vector<std::string>{"AA", "AT", "TA", "TT"});
  CHECK(forbidden_set_label(r.forbidden_stems) == "L4");
  CHECK(r.regular);
  CHECK(r.markov_ok);
  CHECK(r.residual <= 1e-9);
  CHECK(r.t_value == doctest::Approx(objective(w, r.optimum)).epsilon(1e-12));
}

TEST_CASE("maximize_critical on the Gotoh table") {
  const auto r = maximize_critical(load_builtin(BuiltinTable::kGotoh1981));
  CHECK(names(r.forbidden_stems) ==
        std::vector<std::string>{"AA", "AG", "AT", "CT", "TA", "TT"});
  CHECK(forbidden_set_label(r.forbidden_stems) == "L6");
  CHECK(r.regular);
  // Independent cycle-mixture search; the printed value is 2.60.
  const auto ref = oracle::random_search_max_t(
      load_builtin(BuiltinTable::kGotoh1981).values(), 99);
  CHECK(r.t_value == doctest::Approx(ref.value).epsilon(1e-6));
  CHECK(r.t_value == doctest::Approx(2.6197).epsilon(1e-4));
}

TEST_CASE("constant weights give the uniform optimum") {
  for (double c : {1.0, 0.37, 4.0}) {
    const auto r = maximize_critical(WeightTable::constant(c));
    CHECK(r.t_value == doctest::Approx(c * 15.0 / 16.0).epsilon(1e-10));
    for (double v : r.optimum.values()) CHECK(v == doctest::Approx(1.0 / 16));
    CHECK(r.forbidden_stems.empty());
    CHECK(forbidden_set_label(r.forbidden_stems) == "none");
    CHECK(r.regular);
  }
}

TEST_CASE("iteration cap and tolerance are enforced") {
  SolverOptions opts;
  opts.max_iterations = 1;
  try {
    maximize_critical(load_builtin(BuiltinTable::kUnified1998), opts);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotConverged);
  }
  opts = {};
  opts.tolerance = 0.0;
  CHECK_THROWS_AS(maximize_critical(WeightTable::constant(1.0), opts), Error);
}

TEST_CASE("conditional model") {
  const auto uni = conditional_model(StemDistribution::uniform());
  for (int a = 0; a < 4; ++a) {
    CHECK(uni.initial[a] == doctest::Approx(0.25));
    for (int b = 0; b < 4; ++b) CHECK(uni.transitions[a][b] == doctest::Approx(0.25));
  }

  // Printed row A of the unified optimum is (0, .0589, .0081, 0) with
  // p_1(A) = .067, i.e. (0, .879, .121, 0).
  const auto opt = maximize_critical(load_builtin(BuiltinTable::kUnified1998));
  const auto m = conditional_model(opt.optimum);
  CHECK(m.transitions[0][0] <= 1e-6);
  CHECK(m.transitions[0][1] == doctest::Approx(.0589 / .067).epsilon(0.01));
  CHECK(m.transitions[0][2] == doctest::Approx(.0081 / .067).epsilon(0.05));
  CHECK(m.transitions[0][3] <= 1e-6);
  CHECK_NOTHROW(m.validate());

  const auto block = conditional_model(printed_distribution(printed::kBreslauer));
  CHECK(block.transitions[0] == std::array<double, 4>{1, 0, 0, 0});
  CHECK(block.transitions[3] == std::array<double, 4>{0, 0, 0, 1});
  CHECK(block.transitions[1][0] == 0.0);
  CHECK(block.transitions[1][3] == 0.0);
  CHECK(block.transitions[2][0] == 0.0);
  CHECK(block.transitions[2][3] == 0.0);
  CHECK(block.transitions[1][1] + block.transitions[1][2] == doctest::Approx(1.0));
}

TEST_CASE("conditional model preconditions") {
  StemDistribution::Grid g{};
  g[Stem{C, C}.index()] = 0.5;
  g[Stem{G, G}.index()] = 0.5;
  try {
    conditional_model(StemDistribution(g));
    FAIL("expected zero-marginal error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kZeroMarginal);
    CHECK(std::string(e.what()).find("base A") != std::string::npos);
  }
  StemDistribution::Grid skew{};
  skew[Stem{A, C}.index()] = 1.0;
  CHECK_THROWS_AS(conditional_model(StemDistribution(skew)), Error);
}

TEST_CASE("markov condition") {
  CHECK(markov_condition(TransitionModel::uniform()));
  CHECK_FALSE(markov_condition(
      conditional_model(printed_distribution(printed::kBreslauer))));
  CHECK(markov_condition(conditional_model(
      maximize_critical(load_builtin(BuiltinTable::kUnified1998)).optimum)));

  // A 4-cycle A->C->G->T->A reaches every state within 4 steps.
  std::array<std::array<bool, 4>, 4> cycle{};
  cycle[0][1] = cycle[1][2] = cycle[2][3] = cycle[3][0] = true;
  CHECK(markov_condition(model_from_support(cycle)));
  // Two 2-cycles never mix.
  std::array<std::array<bool, 4>, 4> split{};
  split[0][3] = split[3][0] = split[1][2] = split[2][1] = true;
  CHECK_FALSE(markov_condition(model_from_support(split)));
}

TEST_CASE("property: markov condition depends only on the support") {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.35);
  std::uniform_real_distribution<double> mass(0.01, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<std::array<bool, 4>, 4> support{};
    for (auto& row : support) {
      for (auto&& v : row) v = coin(rng);
      if (std::none_of(row.begin(), row.end(), [](bool b) { return b; })) row[0] = true;
    }
    const auto base = model_from_support(support);
    auto rescaled = base;
    for (auto& row : rescaled.transitions) {
      double total = 0.0;
      for (double& v : row) total += (v = v > 0 ? mass(rng) : 0.0);
      for (double& v : row) v /= total;
    }
    CHECK(markov_condition(base) == markov_condition(rescaled));
  }
}

TEST_CASE("classify rate") {
  const auto u = load_builtin(BuiltinTable::kUnified1998);
  CHECK(classify_rate(u, 2.0) == RateRegime::kZeroRate);
  CHECK(classify_rate(u, 1.0) == RateRegime::kPositiveRate);
  CHECK_THROWS_AS(classify_rate(u, 0.0), Error);
  CHECK_THROWS_AS(classify_rate(u, -1.0), Error);

  const auto block = block_table();
  const auto r = maximize_critical(block);
  CHECK(r.t_value == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
  CHECK_FALSE(r.markov_ok);
  CHECK_FALSE(r.regular);
  CHECK(classify_rate(r, block, 0.9) == RateRegime::kZeroRate);
  CHECK(classify_rate(r, block, 0.3) == RateRegime::kIndeterminate);
  // The uniform distribution satisfies M and has T = 6.1 * 15/256 ~ 0.357.
  const auto uniform = StemDistribution::uniform();
  CHECK(objective(block, uniform) == doctest::Approx(6.1 * 15.0 / 256.0));
  CHECK(classify_rate(r, block, 0.3, uniform) == RateRegime::kPositiveRate);
  CHECK(classify_rate(r, block, 0.5, uniform) == RateRegime::kIndeterminate);

  // Breslauer: the printed analysis calls d = 1.65 indeterminate (T = 1.70),
  // but the maximizer of the printed table has T = 1.318 and satisfies M.
  CHECK(classify_rate(load_builtin(BuiltinTable::kBreslauer1986), 1.65) ==
        RateRegime::kZeroRate);
}

TEST_CASE("property: optimizer invariants on random tables") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const auto grid = oracle::random_wc_table(rng);
    const WeightTable w(grid);
    const auto r = maximize_critical(w);
    const auto& p = r.optimum.values();

    double total = 0.0;
    for (double v : p) {
      CHECK(v >= 0.0);
      total += v;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(marginal_residual(r.optimum) <= 1e-8);
    CHECK(r.t_value >= objective(w, StemDistribution::uniform()));

    for (Base a : kBases) {
      for (Base b : kBases) {
        CHECK(std::abs(r.optimum.at(a, b) -
                       r.optimum.at(complement(b), complement(a))) <= 1e-6);
      }
    }
    const auto m = marginals(r.optimum);
    for (Base a : kBases) {
      const auto i = index_of(a), ic = index_of(complement(a));
      CHECK(std::abs(m.first[i] - m.second[i]) <= 1e-6);
      CHECK(std::abs(m.first[i] - m.first[ic]) <= 1e-6);
      CHECK(std::abs(m.first[i] - m.second[ic]) <= 1e-6);
      for (Base b : kBases) {
        const auto j = index_of(b), jc = index_of(complement(b));
        if (m.first[i] < 1e-9) continue;
        // p_1(b|a) = p(a,b)/p_1(a) and p_2(~b|~a) = p(~b,~a)/p_2(~a)
        const double forward = p[4 * i + j] / m.first[i];
        const double backward = p[4 * jc + ic] / m.second[ic];
        CHECK(std::abs(forward - backward) <= 1e-6);
      }
    }

    const auto ref = oracle::random_search_max_t(grid, 1000 + trial);
    CHECK(std::abs(r.t_value - ref.value) <= 1e-4);
  }
}

TEST_CASE("property: objective is strictly concave on feasible pairs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  const auto cycles = oracle::cycle_measures();
  std::exponential_distribution<double> expo(1.0);
  auto random_feasible = [&] {
    StemDistribution::Grid p{};
    double total = 0.0;
    std::vector<double> lam(cycles.size());
    for (double& l : lam) total += (l = expo(rng));
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (int i = 0; i < 16; ++i) p[i] += lam[c] / total * cycles[c][i];
    return StemDistribution::normalized(p);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const WeightTable w(oracle::random_wc_table(rng));
    const auto p = random_feasible();
    const auto q = random_feasible();
    const double lambda = unit(rng);
    StemDistribution::Grid mix;
    for (int i = 0; i < 16; ++i) {
      mix[i] = lambda * p.values()[i] + (1 - lambda) * q.values()[i];
    }
    const double lhs = objective(w, StemDistribution::normalized(mix));
    const double rhs = lambda * objective(w, p) + (1 - lambda) * objective(w, q);
    CHECK(lhs > rhs);
  }
}
