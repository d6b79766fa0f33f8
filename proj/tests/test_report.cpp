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

#include <cmath>
#include <string>

#include "doctest.h"
#include "stemsim/error.hpp"
#include "stemsim/report.hpp"

using namespace stemsim;

TEST_CASE("text report layout") {
  const auto r = maximize_critical(load_builtin(BuiltinTable::kGotoh1981));
  const std::string text = report_to_text(r);
  CHECK(text.rfind("table: Gotoh1981\n", 0) == 0);
  CHECK(text.find("T = 2.6197\n") != std::string::npos);
  CHECK(text.find("forbidden = {AA,AG,AT,CT,TA,TT} (L6)\n") != std::string::npos);
  CHECK(text.find("markov_condition = true\n") != std::string::npos);
  CHECK(text.find("regular = true\n") != std::string::npos);
  CHECK(text.find("a=A     0.0000") != std::string::npos);
}

TEST_CASE("json round trip at six decimals") {
  for (BuiltinTable id : kAllBuiltinTables) {
    const auto r = maximize_critical(load_builtin(id));
    const std::string json = report_to_json(r);
    const auto back = report_from_json(json);
    CHECK(back.table_name == builtin_name(id));
    CHECK(std::abs(back.t_value - r.t_value) <= 5e-7);
    for (std::size_t i = 0; i < kStemCount; ++i) {
      CHECK(std::abs(back.optimum.values()[i] - r.optimum.values()[i]) <= 5e-7);
    }
    CHECK(back.forbidden_stems == r.forbidden_stems);
    CHECK(back.regular == r.regular);
    CHECK(back.markov_ok == r.markov_ok);
    CHECK(back.iterations == r.iterations);
    CHECK(report_to_json(back) == json);
  }
}

TEST_CASE("malformed json") {
  auto kind_of = [](const char* text) {
    try {
      report_from_json(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIo;
  };
  CHECK(kind_of("") == ErrorKind::kParse);
  CHECK(kind_of("{") == ErrorKind::kParse);
  CHECK(kind_of(R"({"t_value": 1})") == ErrorKind::kParse);
  CHECK(kind_of(R"({"t_value": 1, "p": [1], "forbidden": [], "regular": true})") ==
        ErrorKind::kParse);
  CHECK(kind_of(R"({"t_value": 1, "p": [1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
                    "forbidden": ["AX"], "regular": true})") == ErrorKind::kParse);
  CHECK(kind_of(R"({"t_value": 1, "p": [2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
                    "forbidden": [], "regular": true})") == ErrorKind::kParse);
}
