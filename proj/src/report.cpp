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

#include "stemsim/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "stemsim/error.hpp"

namespace stemsim {
namespace {

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string stem_list(const std::vector<Stem>& stems) {
  std::string out = "{";
  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (i) out += ",";
    out += stems[i].to_string();
  }
  return out + "}";
}

}  // namespace

std::string report_to_text(const CriticalReport& report) {
  std::ostringstream os;
  if (!report.table_name.empty()) os << "table: " << report.table_name << "\n";
  os << "p(a,b)   b=A     b=C     b=G     b=T    | p1(a)\n";
  const Marginals m = marginals(report.optimum);
  for (Base a : kBases) {
    os << "a=" << to_char(a) << "   ";
    for (Base b : kBases) os << "  " << fixed(report.optimum.at(a, b), 4);
    os << "  | " << fixed(m.first[index_of(a)], 4) << "\n";
  }
  os << "T = " << fixed(report.t_value, 4) << "\n";
  os << "forbidden = " << stem_list(report.forbidden_stems) << " ("
     << forbidden_set_label(report.forbidden_stems) << ")\n";
  os << "markov_condition = " << (report.markov_ok ? "true" : "false") << "\n";
  os << "regular = " << (report.regular ? "true" : "false") << "\n";
  return os.str();
}

std::string report_to_json(const CriticalReport& report) {
  nlohmann::ordered_json j;
  j["table"] = report.table_name;
  j["t_value"] = round6(report.t_value);
  // Marginals are summed from the rounded entries so that a parsed report
  // renders back to the same document.
  std::array<double, 4> first{};
  auto& p = j["p"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < kStemCount; ++i) {
    const double v = round6(report.optimum.values()[i]);
    first[i / 4] += v;
    p.push_back(v);
  }
  auto& marg = j["marginals"] = nlohmann::ordered_json::array();
  for (double v : first) marg.push_back(round6(v));
  auto& forbidden = j["forbidden"] = nlohmann::ordered_json::array();
  for (Stem s : report.forbidden_stems) forbidden.push_back(s.to_string());
  j["label"] = forbidden_set_label(report.forbidden_stems);
  j["markov_ok"] = report.markov_ok;
  j["regular"] = report.regular;
  j["iterations"] = report.iterations;
  j["residual"] = report.residual;
  return j.dump(2);
}

CriticalReport report_from_json(std::string_view json) {
  CriticalReport r;
  try {
    const auto j = nlohmann::json::parse(json);
    r.table_name = j.value("table", std::string{});
    r.t_value = j.at("t_value").get<double>();
    const auto& p = j.at("p");
    if (!p.is_array() || p.size() != kStemCount) {
      throw Error(ErrorKind::kParse, "\"p\" must be an array of 16 numbers");
    }
    StemDistribution::Grid grid;
    for (std::size_t i = 0; i < kStemCount; ++i) grid[i] = p[i].get<double>();
    // 16 entries rounded to 6 decimals sum to 1 only within 16 * 5e-7.
    r.optimum = StemDistribution(grid, 1e-5);
    for (const auto& s : j.at("forbidden")) {
      const auto text = s.get<std::string>();
      auto a = text.size() == 2 ? base_from_char(text[0]) : std::nullopt;
      auto b = text.size() == 2 ? base_from_char(text[1]) : std::nullopt;
      if (!a || !b) throw Error(ErrorKind::kParse, "bad stem \"" + text + "\"");
      r.forbidden_stems.push_back(Stem{*a, *b});
    }
    r.regular = j.at("regular").get<bool>();
    r.markov_ok = j.value("markov_ok", r.regular);
    r.iterations = j.value("iterations", std::size_t{0});
    r.residual = j.value("residual", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    throw Error(ErrorKind::kParse, std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace stemsim
