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

#include "stemsim/alphabet.hpp"

#include <algorithm>
#include <utility>

#include "stemsim/error.hpp"

namespace stemsim {

char to_char(Base b) noexcept {
  static constexpr char kLetters[] = {'A', 'C', 'G', 'T'};
  return kLetters[index_of(b)];
}

std::optional<Base> base_from_char(char c) noexcept {
  switch (c) {
    case 'A': case 'a': return Base::kA;
    case 'C': case 'c': return Base::kC;
    case 'G': case 'g': return Base::kG;
    case 'T': case 't': return Base::kT;
    default: return std::nullopt;
  }
}

std::string Stem::to_string() const {
  return std::string{to_char(first), to_char(second)};
}

Strand::Strand(std::vector<Base> bases) : bases_(std::move(bases)) {
  if (bases_.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "strand must have length >= 2, got " +
                    std::to_string(bases_.size()));
  }
}

Strand Strand::parse(std::string_view text) {
  std::vector<Base> bases;
  bases.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto b = base_from_char(text[i]);
    if (!b) {
      throw Error(ErrorKind::kParse, "invalid base '" + std::string(1, text[i]) +
                                         "' at position " +
                                         std::to_string(i + 1) + " in \"" +
                                         std::string(text) + "\"");
    }
    bases.push_back(*b);
  }
  return Strand(std::move(bases));
}

std::string Strand::to_string() const {
  std::string out;
  out.reserve(bases_.size());
  for (Base b : bases_) out.push_back(to_char(b));
  return out;
}

Strand reverse_complement(const Strand& x) {
  std::vector<Base> out(x.bases().rbegin(), x.bases().rend());
  std::transform(out.begin(), out.end(), out.begin(),
                 [](Base b) { return complement(b); });
  return Strand(std::move(out));
}

bool is_self_reverse_complementary(const Strand& x) {
  const std::size_t n = x.size();
  if (n % 2 == 1) return false;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (x[i] != complement(x[n - 1 - i])) return false;
  }
  return true;
}

std::vector<Stem> stems_of(const Strand& x) {
  std::vector<Stem> out;
  out.reserve(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out.push_back(x.stem_at(i));
  return out;
}

}  // namespace stemsim
