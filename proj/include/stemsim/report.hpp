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

#ifndef STEMSIM_REPORT_HPP_
#define STEMSIM_REPORT_HPP_

#include <string>
#include <string_view>

#include "stemsim/critical.hpp"

namespace stemsim {

// 4x4 probability grid with the p_1 column (4 decimals), then the T value,
// forbidden stems and verdict.
std::string report_to_text(const CriticalReport& report);

// {"table","t_value","p"[16],"marginals"[4],"forbidden"[...],"label",
//  "markov_ok","regular","iterations","residual"}; probabilities and T are
// rounded to 6 decimals. p is row-major over (a,b) in A,C,G,T order.
std::string report_to_json(const CriticalReport& report);

// Inverse of report_to_json. Throws kParse on malformed documents.
CriticalReport report_from_json(std::string_view json);

}  // namespace stemsim

#endif  // STEMSIM_REPORT_HPP_
