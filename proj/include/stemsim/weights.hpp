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

#ifndef STEMSIM_WEIGHTS_HPP_
#define STEMSIM_WEIGHTS_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "stemsim/alphabet.hpp"

namespace stemsim {

// Stem weights w(a,b) > 0 satisfying w(a,b) = w(~b,~a).
//
// A table read from a relative sample keeps the absolute w(A,A) it was
// normalized by in scale(); for tables given in absolute units scale() is 1.
// Values are never rescaled implicitly: computations use values() as stored.
class WeightTable {
 public:
  using Grid = std::array<double, kStemCount>;

  // Throws Error(kValidation) naming the offending cell when an entry is not
  // strictly positive or when Watson-Crick invariance fails beyond a relative
  // tolerance of 1e-9.
  explicit WeightTable(const Grid& values, std::string name = {},
                       double scale = 1.0);

  static WeightTable constant(double value, std::string name = {});

  double operator()(Stem s) const noexcept { return values_[s.index()]; }
  double at(Base a, Base b) const noexcept {
    return values_[Stem{a, b}.index()];
  }

  const Grid& values() const noexcept { return values_; }
  const std::string& name() const noexcept { return name_; }
  double scale() const noexcept { return scale_; }
  double max_weight() const noexcept;

 private:
  Grid values_;
  std::string name_;
  double scale_;
};

enum class BuiltinTable {
  kUnified1998,
  kGotoh1981,
  kVologodskii1984,
  kBlake1991,
  kBenight1992,
  kSantaLucia1996,
  kSugimoto1996,
  kBreslauer1986,
};

inline constexpr std::array<BuiltinTable, 8> kAllBuiltinTables = {
    BuiltinTable::kUnified1998,     BuiltinTable::kGotoh1981,
    BuiltinTable::kVologodskii1984, BuiltinTable::kBlake1991,
    BuiltinTable::kBenight1992,     BuiltinTable::kSantaLucia1996,
    BuiltinTable::kSugimoto1996,    BuiltinTable::kBreslauer1986,
};

std::string_view builtin_name(BuiltinTable id) noexcept;

// Case-insensitive; accepts the bare id ("Gotoh1981").
std::optional<BuiltinTable> builtin_from_name(std::string_view name) noexcept;

WeightTable load_builtin(BuiltinTable id);

// Divides every entry by w(A,A). The returned scale is the absolute w(A,A),
// so relative() is idempotent on both entries and scale.
WeightTable relative(const WeightTable& w);

double min_weight(const WeightTable& w) noexcept;

// Grid text: optional "scale <value>" line, then four rows of four numbers
// (whitespace or comma separated) in A,C,G,T order. '#' starts a comment.
WeightTable parse_table(std::string_view text, std::string name = {});

WeightTable load_table_file(const std::filesystem::path& path);

// "builtin:<id>" or a file path.
WeightTable resolve_weights(std::string_view source);

}  // namespace stemsim

#endif  // STEMSIM_WEIGHTS_HPP_
