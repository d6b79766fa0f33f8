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

#include "stemsim/codes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "clique.hpp"
#include "stemsim/error.hpp"
#include "stemsim/similarity.hpp"

namespace stemsim {
namespace {

bool meets(double distance, double threshold) {
  return distance >= threshold - kDistanceSlack;
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Duplicates, self-complementary words and missing complements, in codeword
// order.
std::vector<Violation> structural_violations(const DnaCode& code) {
  std::vector<Violation> out;
  std::set<Strand> seen;
  for (const Strand& x : code.words()) {
    if (!seen.insert(x).second) {
      out.push_back({Violation::Kind::kDuplicate, x.to_string(), {}, 0.0});
    }
  }
  for (const Strand& x : seen) {
    const Strand rc = reverse_complement(x);
    if (rc == x) {
      out.push_back(
          {Violation::Kind::kSelfComplementary, x.to_string(), {}, 0.0});
    } else if (!seen.contains(rc)) {
      out.push_back({Violation::Kind::kMissingComplement, x.to_string(),
                     rc.to_string(), 0.0});
    }
  }
  return out;
}

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations so runs match across toolchains.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t draw(const std::array<double, 4>& probs, std::mt19937_64& rng) {
  const double u = unit_uniform(rng);
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    acc += probs[i];
    if (u < acc) return i;
  }
  return last_positive;
}

bool pair_compatible(const WeightTable& w, const Strand& x, const Strand& y,
                     double threshold) {
  return meets(stem_distance(w, x, y), threshold) &&
         meets(stem_distance(w, y, x), threshold);
}

}  // namespace

DnaCode::DnaCode(std::vector<Strand> words) : words_(std::move(words)) {
  for (const Strand& x : words_) {
    if (x.size() != words_.front().size()) {
      throw Error(ErrorKind::kInvalidCode,
                  "codeword " + x.to_string() + " has length " +
                      std::to_string(x.size()) + ", expected " +
                      std::to_string(words_.front().size()));
    }
  }
}

bool DnaCode::contains(const Strand& x) const {
  return std::find(words_.begin(), words_.end(), x) != words_.end();
}

CodeParams::CodeParams(std::size_t n, double d) : length(n), min_distance(d) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "code length must be >= 2, got " + std::to_string(n));
  }
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorKind::kInvalidArgument,
                "distance D must be positive, got " + format_value(d));
  }
}

std::string describe(const Violation& v) {
  switch (v.kind) {
    case Violation::Kind::kDuplicate:
      return "duplicate codeword " + v.first;
    case Violation::Kind::kSelfComplementary:
      return "codeword " + v.first + " is self reverse complementary";
    case Violation::Kind::kMissingComplement:
      return "codeword " + v.first + " lacks its reverse complement " +
             v.second;
    case Violation::Kind::kDistance:
      return "D(" + v.first + "," + v.second + ") = " + format_value(v.distance);
  }
  return {};
}

double code_min_distance(const WeightTable& w, const DnaCode& code) {
  if (code.empty()) {
    throw Error(ErrorKind::kInvalidCode, "code is empty");
  }
  if (auto bad = structural_violations(code); !bad.empty()) {
    throw Error(ErrorKind::kInvalidCode, "invalid code: " + describe(bad[0]));
  }
  const auto& words = code.words();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j) best = std::min(best, stem_distance(w, words[i], words[j]));
    }
  }
  return best;
}

VerifyResult verify_dna_code(const WeightTable& w, const DnaCode& code,
                             double min_distance) {
  if (!(min_distance > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "distance D must be positive");
  }
  VerifyResult result;
  result.violations = structural_violations(code);
  result.min_distance = std::numeric_limits<double>::infinity();
  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      const double d = stem_distance(w, words[i], words[j]);
      result.min_distance = std::min(result.min_distance, d);
      if (!meets(d, min_distance)) {
        result.violations.push_back({Violation::Kind::kDistance,
                                     words[i].to_string(),
                                     words[j].to_string(), d});
      }
    }
  }
  result.valid = result.violations.empty();
  return result;
}

DnaCode construct_repetition_code(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "n must be odd and >= 3, got " + std::to_string(n));
  }
  std::vector<Strand> words;
  for (std::size_t s = 0; s < kStemCount; ++s) {
    const Stem stem = Stem::from_index(s);
    std::vector<Base> bases(n);
    for (std::size_t i = 0; i < n; ++i) {
      bases[i] = i % 2 == 0 ? stem.first : stem.second;
    }
    words.emplace_back(std::move(bases));
  }
  return DnaCode(std::move(words));
}

Strand sample_chain(const TransitionModel& model, std::size_t n,
                    std::mt19937_64& rng) {
  std::vector<Base> bases(n);
  std::size_t state = draw(model.initial, rng);
  bases[0] = static_cast<Base>(state);
  for (std::size_t i = 1; i < n; ++i) {
    state = draw(model.transitions[state], rng);
    bases[i] = static_cast<Base>(state);
  }
  return Strand(std::move(bases));
}

DnaCode generate_markov_code(const WeightTable& w, const TransitionModel& model,
                             const CodeParams& params, std::size_t trials,
                             std::uint64_t seed) {
  model.validate();
  if (!markov_condition(model)) {
    throw Error(ErrorKind::kInvalidArgument,
                "transition model does not satisfy the Markov condition");
  }
  if (trials == 0) {
    throw Error(ErrorKind::kInvalidArgument, "trials must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Strand> accepted;
  std::set<Strand> present;
  const double threshold = params.min_distance;
  for (std::size_t t = 0; t < trials; ++t) {
    Strand x = sample_chain(model, params.length, rng);
    if (present.contains(x)) continue;
    Strand rc = reverse_complement(x);
    if (rc == x) continue;
    if (!pair_compatible(w, x, rc, threshold)) continue;
    const bool fits = std::all_of(
        accepted.begin(), accepted.end(), [&](const Strand& y) {
          return pair_compatible(w, x, y, threshold) &&
                 pair_compatible(w, rc, y, threshold);
        });
    if (!fits) continue;
    present.insert(x);
    present.insert(rc);
    accepted.push_back(std::move(x));
    accepted.push_back(std::move(rc));
  }
  return DnaCode(std::move(accepted));
}

SearchResult exhaustive_max_code(const WeightTable& w, const CodeParams& params,
                                 std::size_t limit, std::uint64_t node_budget) {
  const std::size_t n = params.length;
  // 4^n without overflow: stop once it passes the limit.
  std::size_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > limit / 4) {
      throw Error(ErrorKind::kTooLarge,
                  "4^" + std::to_string(n) + " strands exceed the search limit " +
                      std::to_string(limit));
    }
    space *= 4;
  }
  if (space > limit) {
    throw Error(ErrorKind::kTooLarge, "4^" + std::to_string(n) +
                                          " strands exceed the search limit " +
                                          std::to_string(limit));
  }
  const double threshold = params.min_distance;

  // Vertices: unordered pairs {x, rc(x)} with x lexicographically first.
  // Enumerating the strands as base-4 numbers visits them in lexicographic
  // order, which fixes the tie-breaking of the clique search.
  std::vector<std::pair<Strand, Strand>> vertices;
  for (std::size_t code = 0; code < space; ++code) {
    std::vector<Base> bases(n);
    std::size_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      bases[i] = static_cast<Base>(rest % 4);
      rest /= 4;
    }
    Strand x(std::move(bases));
    Strand rc = reverse_complement(x);
    if (!(x < rc)) continue;
    if (!pair_compatible(w, x, rc, threshold)) continue;
    vertices.emplace_back(std::move(x), std::move(rc));
  }

  internal::BitGraph graph(vertices.size());
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    const auto& [x, xr] = vertices[u];
    for (std::size_t v = u + 1; v < vertices.size(); ++v) {
      const auto& [y, yr] = vertices[v];
      if (pair_compatible(w, x, y, threshold) &&
          pair_compatible(w, x, yr, threshold) &&
          pair_compatible(w, xr, y, threshold) &&
          pair_compatible(w, xr, yr, threshold)) {
        graph.add_edge(u, v);
      }
    }
  }

  const auto clique = internal::maximum_clique(graph, node_budget);
  std::vector<Strand> words;
  for (std::size_t v : clique.members) {
    words.push_back(vertices[v].first);
    words.push_back(vertices[v].second);
  }
  std::sort(words.begin(), words.end());
  return SearchResult{DnaCode(std::move(words)), clique.exact};
}

double rate_estimate(std::size_t code_size, std::size_t n) {
  if (code_size < 1) {
    throw Error(ErrorKind::kInvalidArgument, "code size must be >= 1");
  }
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "length must be >= 2");
  }
  return std::log(static_cast<double>(code_size)) / std::log(4.0) /
         static_cast<double>(n);
}

DnaCode parse_code(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<Strand> words;
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      words.push_back(Strand::parse(line.substr(first, last - first + 1)));
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return DnaCode(std::move(words));
}

DnaCode load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open code file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_code(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string format_code(const DnaCode& code) {
  std::string out;
  for (const Strand& x : code.words()) {
    out += x.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace stemsim
