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

#include "stemsim/weights.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "stemsim/error.hpp"

namespace stemsim {
namespace {

constexpr double kWcRelativeTolerance = 1e-9;

std::string cell_name(Stem s) {
  return std::string("(") + to_char(s.first) + "," + to_char(s.second) + ")";
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct BuiltinData {
  BuiltinTable id;
  std::string_view name;
  double scale;
  WeightTable::Grid grid;
};

// Rows a = A,C,G,T; columns b = A,C,G,T. Relative samples carry the absolute
// w(A,A) they were normalized by.
constexpr std::array<BuiltinData, 8> kBuiltins = {{
    {BuiltinTable::kUnified1998, "Unified1998", 1.00,
     {1.00, 1.44, 1.28, 0.88,
      1.45, 1.84, 2.17, 1.28,
      1.30, 2.24, 1.84, 1.44,
      0.58, 1.30, 1.45, 1.00}},
    {BuiltinTable::kGotoh1981, "Gotoh1981", 0.43,
     {1.00, 2.28, 1.93, 0.63,
      2.32, 2.84, 3.95, 1.93,
      2.16, 3.81, 2.84, 2.28,
      0.51, 2.16, 2.32, 1.00}},
    {BuiltinTable::kVologodskii1984, "Vologodskii1984", 0.89,
     {1.00, 1.35, 1.52, 0.91,
      1.54, 1.84, 2.24, 1.52,
      1.40, 2.20, 1.84, 1.35,
      0.85, 1.40, 1.54, 1.00}},
    {BuiltinTable::kBlake1991, "Blake1991", 0.67,
     {1.00, 1.69, 1.75, 0.93,
      1.78, 2.31, 2.79, 1.75,
      1.67, 2.76, 2.31, 1.69,
      1.04, 1.67, 1.78, 1.00}},
    {BuiltinTable::kBenight1992, "Benight1992", 0.93,
     {1.00, 1.63, 1.11, 0.89,
      1.35, 1.80, 1.77, 1.11,
      1.68, 2.62, 1.80, 1.63,
      0.75, 1.68, 1.35, 1.00}},
    {BuiltinTable::kSantaLucia1996, "SantaLucia1996", 1.02,
     {1.00, 1.40, 1.14, 0.72,
      1.35, 1.74, 2.05, 1.14,
      1.43, 2.24, 1.74, 1.40,
      0.59, 1.43, 1.35, 1.00}},
    {BuiltinTable::kSugimoto1996, "Sugimoto1996", 1.20,
     {1.00, 1.25, 1.25, 0.75,
      1.42, 1.75, 2.33, 1.25,
      1.25, 1.92, 1.75, 1.25,
      0.75, 1.25, 1.42, 1.00}},
    {BuiltinTable::kBreslauer1986, "Breslauer1986", 1.66,
     {1.00, 0.68, 0.81, 0.72,
      1.08, 1.66, 1.98, 0.81,
      0.85, 1.70, 1.66, 0.68,
      0.46, 0.85, 1.08, 1.00}},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::vector<std::string> split_fields(const std::string& line) {
  std::string cleaned = line;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                       ": not a number: \"" + tok + "\"");
  }
  return v;
}

}  // namespace

WeightTable::WeightTable(const Grid& values, std::string name, double scale)
    : values_(values), name_(std::move(name)), scale_(scale) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
    throw Error(ErrorKind::kValidation,
                "scale must be positive, got " + format_value(scale_));
  }
  for (std::size_t i = 0; i < kStemCount; ++i) {
    const double v = values_[i];
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::kValidation,
                  "weight " + cell_name(Stem::from_index(i)) +
                      " must be positive, got " + format_value(v));
    }
  }
  for (std::size_t i = 0; i < kStemCount; ++i) {
    const Stem s = Stem::from_index(i);
    const Stem image = wc_image(s);
    const double v = values_[i];
    const double u = values_[image.index()];
    if (std::abs(v - u) > kWcRelativeTolerance * std::max(1.0, v)) {
      throw Error(ErrorKind::kValidation,
                  "Watson-Crick invariance violated: w" + cell_name(s) + "=" +
                      format_value(v) + " but w" + cell_name(image) + "=" +
                      format_value(u));
    }
  }
}

WeightTable WeightTable::constant(double value, std::string name) {
  Grid g;
  g.fill(value);
  return WeightTable(g, std::move(name));
}

double WeightTable::max_weight() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

std::string_view builtin_name(BuiltinTable id) noexcept {
  for (const auto& b : kBuiltins) {
    if (b.id == id) return b.name;
  }
  return {};
}

std::optional<BuiltinTable> builtin_from_name(std::string_view name) noexcept {
  for (const auto& b : kBuiltins) {
    if (iequals(b.name, name)) return b.id;
  }
  return std::nullopt;
}

WeightTable load_builtin(BuiltinTable id) {
  for (const auto& b : kBuiltins) {
    if (b.id == id) return WeightTable(b.grid, std::string(b.name), b.scale);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown builtin table");
}

WeightTable relative(const WeightTable& w) {
  const double base = w.at(Base::kA, Base::kA);
  WeightTable::Grid g = w.values();
  for (double& v : g) v /= base;
  return WeightTable(g, w.name(), w.scale() * base);
}

double min_weight(const WeightTable& w) noexcept {
  return *std::min_element(w.values().begin(), w.values().end());
}

WeightTable parse_table(std::string_view text, std::string name) {
  std::istringstream is{std::string(text)};
  std::optional<double> scale;
  std::vector<double> cells;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (iequals(fields[0], "scale")) {
      if (rows > 0 || scale) {
        throw Error(ErrorKind::kParse,
                    "line " + std::to_string(line_no) +
                        ": 'scale' must appear once, before the grid");
      }
      if (fields.size() != 2) {
        throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                           ": expected 'scale <value>'");
      }
      scale = parse_number(fields[1], line_no);
      continue;
    }
    if (fields.size() != 4) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": expected 4 values in row " +
                      to_char(kBases[std::min<std::size_t>(rows, 3)]) +
                      ", got " + std::to_string(fields.size()));
    }
    if (rows == 4) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                         ": more than 4 grid rows");
    }
    for (const auto& f : fields) cells.push_back(parse_number(f, line_no));
    ++rows;
  }
  if (rows != 4) {
    throw Error(ErrorKind::kParse,
                "expected 4 grid rows, got " + std::to_string(rows));
  }
  WeightTable::Grid g;
  std::copy(cells.begin(), cells.end(), g.begin());
  return WeightTable(g, std::move(name), scale.value_or(1.0));
}

WeightTable load_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open weight table " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_table(buf.str(), path.stem().string());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

WeightTable resolve_weights(std::string_view source) {
  constexpr std::string_view kPrefix = "builtin:";
  if (source.size() >= kPrefix.size() &&
      iequals(source.substr(0, kPrefix.size()), kPrefix)) {
    auto id = builtin_from_name(source.substr(kPrefix.size()));
    if (!id) {
      throw Error(ErrorKind::kInvalidArgument,
                  "unknown builtin table \"" +
                      std::string(source.substr(kPrefix.size())) + "\"");
    }
    return load_builtin(*id);
  }
  return load_table_file(std::filesystem::path(std::string(source)));
}

}  // namespace stemsim
