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

#include "stemsim/stemsim.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "stemsim/alphabet.hpp"
#include "stemsim/codes.hpp"
#include "stemsim/critical.hpp"
#include "stemsim/error.hpp"
#include "stemsim/report.hpp"
#include "stemsim/similarity.hpp"
#include "stemsim/weights.hpp"

struct stemsim_weights {
  stemsim::WeightTable table;
};

struct stemsim_report {
  stemsim::CriticalReport report;
  std::string label;
};

struct stemsim_code {
  stemsim::DnaCode code;
  std::vector<std::string> text;
};

namespace {

thread_local std::string g_last_error;

stemsim_status to_status(stemsim::ErrorKind kind) {
  using stemsim::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return STEMSIM_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse: return STEMSIM_ERR_PARSE;
    case ErrorKind::kValidation: return STEMSIM_ERR_VALIDATION;
    case ErrorKind::kLengthMismatch: return STEMSIM_ERR_LENGTH_MISMATCH;
    case ErrorKind::kZeroMarginal: return STEMSIM_ERR_ZERO_MARGINAL;
    case ErrorKind::kNotConverged: return STEMSIM_ERR_NOT_CONVERGED;
    case ErrorKind::kTooLarge: return STEMSIM_ERR_TOO_LARGE;
    case ErrorKind::kInvalidCode: return STEMSIM_ERR_INVALID_CODE;
    case ErrorKind::kIo: return STEMSIM_ERR_IO;
  }
  return STEMSIM_ERR_INTERNAL;
}

stemsim_status fail(stemsim_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
stemsim_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return STEMSIM_OK;
  } catch (const stemsim::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(STEMSIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(STEMSIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STEMSIM_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

stemsim_code* wrap(stemsim::DnaCode code) {
  auto* c = new stemsim_code{std::move(code), {}};
  for (const auto& x : c->code.words()) c->text.push_back(x.to_string());
  return c;
}

stemsim_report* wrap(stemsim::CriticalReport r) {
  auto label = stemsim::forbidden_set_label(r.forbidden_stems);
  return new stemsim_report{std::move(r), std::move(label)};
}

std::array<double, 16> grid16(const double* values) {
  std::array<double, 16> g;
  std::copy(values, values + 16, g.begin());
  return g;
}

stemsim::TransitionModel model_from(const double initial[4],
                                    const double transitions[16]) {
  stemsim::TransitionModel m;
  for (std::size_t a = 0; a < 4; ++a) {
    m.initial[a] = initial[a];
    for (std::size_t b = 0; b < 4; ++b) m.transitions[a][b] = transitions[4 * a + b];
  }
  return m;
}

#define STEMSIM_REQUIRE(cond, what)                                   \
  do {                                                                \
    if (!(cond)) return fail(STEMSIM_ERR_INVALID_ARGUMENT, what);     \
  } while (0)

}  // namespace

extern "C" {

const char* stemsim_version(void) { return "0.1.0"; }

const char* stemsim_last_error(void) { return g_last_error.c_str(); }

const char* stemsim_status_name(stemsim_status status) {
  switch (status) {
    case STEMSIM_OK: return "ok";
    case STEMSIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case STEMSIM_ERR_PARSE: return "parse error";
    case STEMSIM_ERR_VALIDATION: return "validation error";
    case STEMSIM_ERR_LENGTH_MISMATCH: return "length mismatch";
    case STEMSIM_ERR_ZERO_MARGINAL: return "zero marginal";
    case STEMSIM_ERR_NOT_CONVERGED: return "not converged";
    case STEMSIM_ERR_TOO_LARGE: return "instance too large";
    case STEMSIM_ERR_INVALID_CODE: return "invalid code";
    case STEMSIM_ERR_IO: return "i/o error";
    case STEMSIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void stemsim_string_free(char* s) { std::free(s); }

stemsim_status stemsim_reverse_complement(const char* strand, char* out,
                                          size_t out_size) {
  STEMSIM_REQUIRE(strand && out, "null argument");
  return guarded([&] {
    const auto rc = stemsim::reverse_complement(stemsim::Strand::parse(strand));
    const auto text = rc.to_string();
    if (out_size < text.size() + 1) {
      throw stemsim::Error(stemsim::ErrorKind::kInvalidArgument,
                           "output buffer too small");
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
  });
}

stemsim_status stemsim_is_self_reverse_complementary(const char* strand,
                                                     int* out) {
  STEMSIM_REQUIRE(strand && out, "null argument");
  return guarded([&] {
    *out = stemsim::is_self_reverse_complementary(stemsim::Strand::parse(strand));
  });
}

stemsim_status stemsim_weights_builtin(const char* name, stemsim_weights** out) {
  STEMSIM_REQUIRE(name && out, "null argument");
  return guarded([&] {
    auto id = stemsim::builtin_from_name(name);
    if (!id) {
      throw stemsim::Error(stemsim::ErrorKind::kInvalidArgument,
                           std::string("unknown builtin table \"") + name + "\"");
    }
    *out = new stemsim_weights{stemsim::load_builtin(*id)};
  });
}

stemsim_status stemsim_weights_load(const char* path, stemsim_weights** out) {
  STEMSIM_REQUIRE(path && out, "null argument");
  return guarded([&] { *out = new stemsim_weights{stemsim::load_table_file(path)}; });
}

stemsim_status stemsim_weights_resolve(const char* source, stemsim_weights** out) {
  STEMSIM_REQUIRE(source && out, "null argument");
  return guarded([&] { *out = new stemsim_weights{stemsim::resolve_weights(source)}; });
}

stemsim_status stemsim_weights_from_grid(const double grid[16], double scale,
                                         const char* name,
                                         stemsim_weights** out) {
  STEMSIM_REQUIRE(grid && out, "null argument");
  return guarded([&] {
    *out = new stemsim_weights{
        stemsim::WeightTable(grid16(grid), name ? name : "", scale)};
  });
}

stemsim_status stemsim_weights_relative(const stemsim_weights* w,
                                        stemsim_weights** out) {
  STEMSIM_REQUIRE(w && out, "null argument");
  return guarded([&] { *out = new stemsim_weights{stemsim::relative(w->table)}; });
}

void stemsim_weights_free(stemsim_weights* w) { delete w; }

stemsim_status stemsim_weights_values(const stemsim_weights* w, double grid[16],
                                      double* scale) {
  STEMSIM_REQUIRE(w && grid, "null argument");
  std::copy(w->table.values().begin(), w->table.values().end(), grid);
  if (scale) *scale = w->table.scale();
  return STEMSIM_OK;
}

const char* stemsim_weights_name(const stemsim_weights* w) {
  return w ? w->table.name().c_str() : "";
}

stemsim_status stemsim_weights_min(const stemsim_weights* w, double* out) {
  STEMSIM_REQUIRE(w && out, "null argument");
  *out = stemsim::min_weight(w->table);
  return STEMSIM_OK;
}

size_t stemsim_builtin_count(void) { return stemsim::kAllBuiltinTables.size(); }

const char* stemsim_builtin_name(size_t index) {
  if (index >= stemsim::kAllBuiltinTables.size()) return nullptr;
  // Names are string literals, hence NUL-terminated.
  return stemsim::builtin_name(stemsim::kAllBuiltinTables[index]).data();
}

stemsim_status stemsim_similarity(const stemsim_weights* w, const char* x,
                                  const char* y, double* out) {
  STEMSIM_REQUIRE(w && x && y && out, "null argument");
  return guarded([&] {
    *out = stemsim::stem_similarity(w->table, stemsim::Strand::parse(x),
                                    stemsim::Strand::parse(y));
  });
}

stemsim_status stemsim_distance(const stemsim_weights* w, const char* x,
                                const char* y, double* out) {
  STEMSIM_REQUIRE(w && x && y && out, "null argument");
  return guarded([&] {
    *out = stemsim::stem_distance(w->table, stemsim::Strand::parse(x),
                                  stemsim::Strand::parse(y));
  });
}

stemsim_status stemsim_duplex_energy(const stemsim_weights* w, const char* x,
                                     const char* y, double* out) {
  STEMSIM_REQUIRE(w && x && y && out, "null argument");
  return guarded([&] {
    *out = stemsim::duplex_energy(w->table, stemsim::Strand::parse(x),
                                  stemsim::Strand::parse(y));
  });
}

stemsim_status stemsim_objective(const stemsim_weights* w, const double p[16],
                                 double* out) {
  STEMSIM_REQUIRE(w && p && out, "null argument");
  return guarded([&] {
    *out = stemsim::objective(w->table, stemsim::StemDistribution(grid16(p)));
  });
}

stemsim_status stemsim_conditional_model(const double p[16], double initial[4],
                                         double transitions[16]) {
  STEMSIM_REQUIRE(p && initial && transitions, "null argument");
  return guarded([&] {
    const auto m = stemsim::conditional_model(stemsim::StemDistribution(grid16(p)));
    for (std::size_t a = 0; a < 4; ++a) {
      initial[a] = m.initial[a];
      for (std::size_t b = 0; b < 4; ++b) transitions[4 * a + b] = m.transitions[a][b];
    }
  });
}

stemsim_status stemsim_markov_condition(const double transitions[16], int* out) {
  STEMSIM_REQUIRE(transitions && out, "null argument");
  const double uniform[4] = {0.25, 0.25, 0.25, 0.25};
  *out = stemsim::markov_condition(model_from(uniform, transitions));
  return STEMSIM_OK;
}

stemsim_status stemsim_maximize_critical(const stemsim_weights* w,
                                         double tolerance,
                                         stemsim_report** out) {
  STEMSIM_REQUIRE(w && out, "null argument");
  return guarded([&] {
    stemsim::SolverOptions options;
    if (tolerance > 0.0) options.tolerance = tolerance;
    *out = wrap(stemsim::maximize_critical(w->table, options));
  });
}

void stemsim_report_free(stemsim_report* r) { delete r; }

double stemsim_report_t_value(const stemsim_report* r) {
  return r ? r->report.t_value : 0.0;
}

stemsim_status stemsim_report_distribution(const stemsim_report* r,
                                           double p[16]) {
  STEMSIM_REQUIRE(r && p, "null argument");
  const auto& v = r->report.optimum.values();
  std::copy(v.begin(), v.end(), p);
  return STEMSIM_OK;
}

uint16_t stemsim_report_forbidden_mask(const stemsim_report* r) {
  if (!r) return 0;
  uint16_t mask = 0;
  for (auto s : r->report.forbidden_stems) {
    mask = static_cast<uint16_t>(mask | (1u << s.index()));
  }
  return mask;
}

const char* stemsim_report_forbidden_label(const stemsim_report* r) {
  return r ? r->label.c_str() : "";
}

int stemsim_report_regular(const stemsim_report* r) {
  return r && r->report.regular;
}

int stemsim_report_markov_ok(const stemsim_report* r) {
  return r && r->report.markov_ok;
}

size_t stemsim_report_iterations(const stemsim_report* r) {
  return r ? r->report.iterations : 0;
}

stemsim_status stemsim_report_to_text(const stemsim_report* r, char** out) {
  STEMSIM_REQUIRE(r && out, "null argument");
  return guarded([&] { *out = duplicate(stemsim::report_to_text(r->report)); });
}

stemsim_status stemsim_report_to_json(const stemsim_report* r, char** out) {
  STEMSIM_REQUIRE(r && out, "null argument");
  return guarded([&] { *out = duplicate(stemsim::report_to_json(r->report)); });
}

stemsim_status stemsim_report_from_json(const char* json, stemsim_report** out) {
  STEMSIM_REQUIRE(json && out, "null argument");
  return guarded([&] { *out = wrap(stemsim::report_from_json(json)); });
}

stemsim_status stemsim_classify_rate(const stemsim_weights* w, double d,
                                     const double* witness,
                                     stemsim_rate_regime* out) {
  STEMSIM_REQUIRE(w && out, "null argument");
  return guarded([&] {
    std::optional<stemsim::StemDistribution> p;
    if (witness) p.emplace(grid16(witness));
    switch (stemsim::classify_rate(w->table, d, p)) {
      case stemsim::RateRegime::kZeroRate: *out = STEMSIM_RATE_ZERO; break;
      case stemsim::RateRegime::kPositiveRate: *out = STEMSIM_RATE_POSITIVE; break;
      case stemsim::RateRegime::kIndeterminate:
        *out = STEMSIM_RATE_INDETERMINATE;
        break;
    }
  });
}

stemsim_status stemsim_code_from_strings(const char* const* words, size_t count,
                                         stemsim_code** out) {
  STEMSIM_REQUIRE(out && (words || count == 0), "null argument");
  return guarded([&] {
    std::vector<stemsim::Strand> strands;
    for (size_t i = 0; i < count; ++i) {
      if (!words[i]) {
        throw stemsim::Error(stemsim::ErrorKind::kInvalidArgument, "null codeword");
      }
      strands.push_back(stemsim::Strand::parse(words[i]));
    }
    *out = wrap(stemsim::DnaCode(std::move(strands)));
  });
}

stemsim_status stemsim_code_load(const char* path, stemsim_code** out) {
  STEMSIM_REQUIRE(path && out, "null argument");
  return guarded([&] { *out = wrap(stemsim::load_code_file(path)); });
}

void stemsim_code_free(stemsim_code* c) { delete c; }

size_t stemsim_code_size(const stemsim_code* c) { return c ? c->code.size() : 0; }

size_t stemsim_code_length(const stemsim_code* c) {
  return c ? c->code.length() : 0;
}

const char* stemsim_code_word(const stemsim_code* c, size_t index) {
  if (!c || index >= c->text.size()) return nullptr;
  return c->text[index].c_str();
}

stemsim_status stemsim_code_to_text(const stemsim_code* c, char** out) {
  STEMSIM_REQUIRE(c && out, "null argument");
  return guarded([&] { *out = duplicate(stemsim::format_code(c->code)); });
}

stemsim_status stemsim_code_min_distance(const stemsim_weights* w,
                                         const stemsim_code* c, double* out) {
  STEMSIM_REQUIRE(w && c && out, "null argument");
  return guarded([&] { *out = stemsim::code_min_distance(w->table, c->code); });
}

stemsim_status stemsim_code_verify(const stemsim_weights* w,
                                   const stemsim_code* c, double D, int* valid,
                                   double* min_distance, char** report) {
  STEMSIM_REQUIRE(w && c && valid, "null argument");
  return guarded([&] {
    const auto result = stemsim::verify_dna_code(w->table, c->code, D);
    std::string text;
    for (const auto& v : result.violations) text += stemsim::describe(v) + "\n";
    if (report) *report = duplicate(text);
    *valid = result.valid;
    if (min_distance) *min_distance = result.min_distance;
  });
}

stemsim_status stemsim_code_repetition(size_t n, stemsim_code** out) {
  STEMSIM_REQUIRE(out, "null argument");
  return guarded([&] { *out = wrap(stemsim::construct_repetition_code(n)); });
}

stemsim_status stemsim_code_generate_markov(const stemsim_weights* w,
                                            const double initial[4],
                                            const double transitions[16],
                                            size_t n, double D, size_t trials,
                                            uint64_t seed, stemsim_code** out) {
  STEMSIM_REQUIRE(w && initial && transitions && out, "null argument");
  return guarded([&] {
    *out = wrap(stemsim::generate_markov_code(
        w->table, model_from(initial, transitions), stemsim::CodeParams(n, D),
        trials, seed));
  });
}

stemsim_status stemsim_code_search(const stemsim_weights* w, size_t n, double D,
                                   size_t limit, stemsim_code** out,
                                   int* exact) {
  STEMSIM_REQUIRE(w && out, "null argument");
  return guarded([&] {
    auto result = stemsim::exhaustive_max_code(
        w->table, stemsim::CodeParams(n, D),
        limit == 0 ? stemsim::kDefaultSearchLimit : limit);
    if (exact) *exact = result.exact;
    *out = wrap(std::move(result.code));
  });
}

stemsim_status stemsim_rate_estimate(size_t code_size, size_t n, double* out) {
  STEMSIM_REQUIRE(out, "null argument");
  return guarded([&] { *out = stemsim::rate_estimate(code_size, n); });
}

}  // extern "C"
