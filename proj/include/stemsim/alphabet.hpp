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

#ifndef STEMSIM_ALPHABET_HPP_
#define STEMSIM_ALPHABET_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stemsim {

// Numeric values are chosen so that the Watson-Crick complement is 3 - v.
enum class Base : std::uint8_t { kA = 0, kC = 1, kG = 2, kT = 3 };

inline constexpr std::array<Base, 4> kBases = {Base::kA, Base::kC, Base::kG,
                                               Base::kT};
inline constexpr std::size_t kStemCount = 16;

constexpr std::size_t index_of(Base b) noexcept {
  return static_cast<std::size_t>(b);
}

constexpr Base complement(Base b) noexcept {
  return static_cast<Base>(3 - static_cast<std::uint8_t>(b));
}

char to_char(Base b) noexcept;

// Accepts upper- and lowercase A/C/G/T.
std::optional<Base> base_from_char(char c) noexcept;

// An ordered pair of adjacent letters. Stems are indexed 4*first + second,
// i.e. row-major over the 4x4 grid with rows and columns in A,C,G,T order.
struct Stem {
  Base first = Base::kA;
  Base second = Base::kA;

  constexpr std::size_t index() const noexcept {
    return 4 * index_of(first) + index_of(second);
  }
  static constexpr Stem from_index(std::size_t i) noexcept {
    return Stem{static_cast<Base>(i / 4), static_cast<Base>(i % 4)};
  }

  std::string to_string() const;

  friend constexpr auto operator<=>(const Stem&, const Stem&) = default;
};

// The stem read on the opposite strand of a duplex: (a,b) -> (~b,~a).
constexpr Stem wc_image(Stem s) noexcept {
  return Stem{complement(s.second), complement(s.first)};
}

// An oriented DNA sequence of length >= 2.
class Strand {
 public:
  explicit Strand(std::vector<Base> bases);

  // Parses contiguous A/C/G/T text; lowercase is normalized.
  static Strand parse(std::string_view text);

  std::size_t size() const noexcept { return bases_.size(); }
  Base operator[](std::size_t i) const noexcept { return bases_[i]; }
  std::span<const Base> bases() const noexcept { return bases_; }
  Stem stem_at(std::size_t i) const noexcept {
    return Stem{bases_[i], bases_[i + 1]};
  }

  std::string to_string() const;

  friend auto operator<=>(const Strand&, const Strand&) = default;
  friend bool operator==(const Strand&, const Strand&) = default;

 private:
  std::vector<Base> bases_;
};

Strand reverse_complement(const Strand& x);

bool is_self_reverse_complementary(const Strand& x);

// The n-1 consecutive pairs (x_i, x_{i+1}).
std::vector<Stem> stems_of(const Strand& x);

}  // namespace stemsim

#endif  // STEMSIM_ALPHABET_HPP_
