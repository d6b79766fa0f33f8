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

#ifndef STEMSIM_CODES_HPP_
#define STEMSIM_CODES_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stemsim/alphabet.hpp"
#include "stemsim/critical.hpp"
#include "stemsim/weights.hpp"

namespace stemsim {

// Distances are compared against a threshold D with this absolute slack.
inline constexpr double kDistanceSlack = 1e-9;

// A set of equal-length strands. Construction only enforces the common
// length; closure under reverse complement and distinctness are checked by
// verify_dna_code / code_min_distance so that broken codes can be reported.
class DnaCode {
 public:
  DnaCode() = default;
  explicit DnaCode(std::vector<Strand> words);

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  // 0 for an empty code.
  std::size_t length() const noexcept {
    return words_.empty() ? 0 : words_.front().size();
  }
  const std::vector<Strand>& words() const noexcept { return words_; }
  bool contains(const Strand& x) const;

 private:
  std::vector<Strand> words_;
};

struct CodeParams {
  std::size_t length = 0;     // n
  double min_distance = 0.0;  // D

  CodeParams(std::size_t n, double d);
  double relative_distance() const noexcept {
    return min_distance / static_cast<double>(length);
  }
};

struct Violation {
  enum class Kind { kDuplicate, kSelfComplementary, kMissingComplement, kDistance };
  Kind kind;
  std::string first;
  std::string second;     // empty unless kind is kDistance
  double distance = 0.0;  // D_w(first, second) for kDistance
};

std::string describe(const Violation& v);

struct VerifyResult {
  bool valid = false;
  // Over ordered pairs; +infinity for the (vacuously valid) empty code.
  double min_distance = 0.0;
  std::vector<Violation> violations;
};

// Minimum of D_w(x, y) over ordered pairs of distinct codewords. Throws
// kInvalidCode naming the codeword when the code is empty, has duplicates, or
// is not closed under reverse complement.
double code_min_distance(const WeightTable& w, const DnaCode& code);

// Structural checks plus every ordered pair with D_w < D.
VerifyResult verify_dna_code(const WeightTable& w, const DnaCode& code,
                             double min_distance);

// X_r: for every stem (a1 a2), the strand a1 a2 a1 a2 ... a1 of odd length n.
DnaCode construct_repetition_code(std::size_t n);

// Samples `trials` strands from the chain and greedily keeps each pair
// (x, rc(x)) that preserves all ordered-pair distances >= D. Deterministic
// for a given seed.
DnaCode generate_markov_code(const WeightTable& w, const TransitionModel& model,
                             const CodeParams& params, std::size_t trials,
                             std::uint64_t seed);

// Samples one strand of length n from the chain.
Strand sample_chain(const TransitionModel& model, std::size_t n,
                    std::mt19937_64& rng);

struct SearchResult {
  DnaCode code;
  bool exact = false;  // false when the node budget ran out
};

inline constexpr std::size_t kDefaultSearchLimit = 4096;  // 4^6 strands
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

// Largest (n, D)_w code via maximum clique over reverse-complement pairs.
// Throws kTooLarge when 4^n exceeds `limit`.
SearchResult exhaustive_max_code(const WeightTable& w, const CodeParams& params,
                                 std::size_t limit = kDefaultSearchLimit,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

// log_4(N) / n.
double rate_estimate(std::size_t code_size, std::size_t n);

// One strand per line; blank lines and '#' comments ignored.
DnaCode parse_code(std::string_view text);
DnaCode load_code_file(const std::filesystem::path& path);
std::string format_code(const DnaCode& code);

}  // namespace stemsim

#endif  // STEMSIM_CODES_HPP_
