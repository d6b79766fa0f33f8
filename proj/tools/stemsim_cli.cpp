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

// stemsim command-line front end. Talks to the library only through the C
// API in stemsim/stemsim.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stemsim/stemsim.h"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

// Raised for any failed library call; carries the library's message.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(stemsim_status status) {
  if (status != STEMSIM_OK) {
    std::string message = stemsim_last_error();
    if (message.empty()) message = stemsim_status_name(status);
    throw DomainError(message);
  }
}

struct WeightsDeleter {
  void operator()(stemsim_weights* w) const { stemsim_weights_free(w); }
};
struct ReportDeleter {
  void operator()(stemsim_report* r) const { stemsim_report_free(r); }
};
struct CodeDeleter {
  void operator()(stemsim_code* c) const { stemsim_code_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { stemsim_string_free(s); }
};
using WeightsPtr = std::unique_ptr<stemsim_weights, WeightsDeleter>;
using ReportPtr = std::unique_ptr<stemsim_report, ReportDeleter>;
using CodePtr = std::unique_ptr<stemsim_code, CodeDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

WeightsPtr load_weights(const std::string& source) {
  stemsim_weights* w = nullptr;
  check(stemsim_weights_resolve(source.c_str(), &w));
  return WeightsPtr(w);
}

ReportPtr solve(const stemsim_weights* w, double tolerance) {
  stemsim_report* r = nullptr;
  check(stemsim_maximize_critical(w, tolerance, &r));
  return ReportPtr(r);
}

std::string take(char* s) { return std::string(StringPtr(s).get()); }

// Up to 6 decimals with trailing zeros removed: 4.610000 -> 4.61.
std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::vector<std::string> words_of(const stemsim_code* c) {
  std::vector<std::string> out;
  for (size_t i = 0; i < stemsim_code_size(c); ++i) {
    out.emplace_back(stemsim_code_word(c, i));
  }
  return out;
}

double resolve_distance(double absolute, double relative, size_t n) {
  if (absolute > 0.0 && relative > 0.0) {
    throw DomainError("give either --D or --d, not both");
  }
  if (relative > 0.0) return relative * static_cast<double>(n);
  if (absolute > 0.0) return absolute;
  throw DomainError("a positive distance --D (or relative --d) is required");
}

struct Options {
  std::string weights = "builtin:Unified1998";
  std::string format = "text";
  std::string x, y;
  double tolerance = 1e-9;
  size_t n = 0;
  double D = 0.0;
  double d = 0.0;
  size_t trials = 10000;
  uint64_t seed = 1;
  std::string chain = "optimal";
  std::string code_path;
  std::string out_path;
  size_t limit = 4096;
  size_t N = 0;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string run_pairwise(const Options& o, const std::string& command) {
  auto w = load_weights(o.weights);
  double value = 0.0;
  if (command == "sim") {
    check(stemsim_similarity(w.get(), o.x.c_str(), o.y.c_str(), &value));
  } else if (command == "dist") {
    check(stemsim_distance(w.get(), o.x.c_str(), o.y.c_str(), &value));
  } else {
    check(stemsim_duplex_energy(w.get(), o.x.c_str(), o.y.c_str(), &value));
  }
  if (json_output(o)) {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["weights"] = stemsim_weights_name(w.get());
    j["x"] = o.x;
    j["y"] = o.y;
    j["value"] = value;
    return j.dump(2) + "\n";
  }
  return number(value) + "\n";
}

std::string take_json(const stemsim_report* r) {
  char* text = nullptr;
  check(stemsim_report_to_json(r, &text));
  return take(text) + "\n";
}

std::string run_critical(const Options& o) {
  auto w = load_weights(o.weights);
  auto r = solve(w.get(), o.tolerance);
  if (json_output(o)) return take_json(r.get());
  char* text = nullptr;
  check(stemsim_report_to_text(r.get(), &text));
  return take(text);
}

std::string run_tables(const Options& o) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream os;
  char header[128];
  std::snprintf(header, sizeof header, "%-16s %8s  %-6s %s\n", "table", "T",
                "L", "verdict");
  os << header;
  for (size_t i = 0; i < stemsim_builtin_count(); ++i) {
    const std::string name = stemsim_builtin_name(i);
    auto w = load_weights("builtin:" + name);
    auto r = solve(w.get(), o.tolerance);
    const double t = stemsim_report_t_value(r.get());
    const std::string label = stemsim_report_forbidden_label(r.get());
    const bool regular = stemsim_report_regular(r.get());
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %8.4f  %-6s %s\n", name.c_str(), t,
                  label.c_str(), regular ? "regular" : "non-regular");
    os << line;
    rows.push_back({{"table", name},
                    {"t_value", std::round(t * 1e6) / 1e6},
                    {"label", label},
                    {"regular", regular}});
  }
  return json_output(o) ? rows.dump(2) + "\n" : os.str();
}

std::string render_code(const Options& o, const stemsim_code* c,
                        const stemsim_weights* w, const std::string& title,
                        nlohmann::ordered_json extra) {
  double min_distance = 0.0;
  const bool has_pairs = stemsim_code_size(c) > 0;
  if (has_pairs) check(stemsim_code_min_distance(w, c, &min_distance));
  if (json_output(o)) {
    nlohmann::ordered_json j = std::move(extra);
    j["weights"] = stemsim_weights_name(w);
    j["n"] = stemsim_code_length(c);
    j["size"] = stemsim_code_size(c);
    if (has_pairs) {
      j["min_distance"] = min_distance;
    } else {
      j["min_distance"] = nullptr;
    }
    j["codewords"] = words_of(c);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# " << title << "\n";
  os << "# size " << stemsim_code_size(c) << ", min distance ("
     << stemsim_weights_name(w) << ") "
     << (has_pairs ? number(min_distance) : std::string("n/a")) << "\n";
  for (const auto& [key, value] : extra.items()) {
    os << "# " << key << " ";
    if (value.is_number_float()) {
      os << number(value.get<double>());
    } else if (value.is_string()) {
      os << value.get<std::string>();
    } else {
      os << value.dump();
    }
    os << "\n";
  }
  char* text = nullptr;
  check(stemsim_code_to_text(c, &text));
  os << take(text);
  return os.str();
}

std::string run_xr(const Options& o) {
  auto w = load_weights(o.weights);
  stemsim_code* raw = nullptr;
  check(stemsim_code_repetition(o.n, &raw));
  CodePtr c(raw);
  return render_code(o, c.get(), w.get(),
                     "repetition code X_r, n=" + std::to_string(o.n),
                     nlohmann::ordered_json::object());
}

std::string run_gen(const Options& o) {
  auto w = load_weights(o.weights);
  const double D = resolve_distance(o.D, o.d, o.n);
  double initial[4];
  double transitions[16];
  if (o.chain == "uniform") {
    for (double& v : initial) v = 0.25;
    for (double& v : transitions) v = 0.25;
  } else {
    auto r = solve(w.get(), o.tolerance);
    double p[16];
    check(stemsim_report_distribution(r.get(), p));
    check(stemsim_conditional_model(p, initial, transitions));
  }
  stemsim_code* raw = nullptr;
  check(stemsim_code_generate_markov(w.get(), initial, transitions, o.n, D,
                                     o.trials, o.seed, &raw));
  CodePtr c(raw);
  if (!o.out_path.empty()) {
    char* text = nullptr;
    check(stemsim_code_to_text(c.get(), &text));
    const std::string body = take(text);
    std::ofstream file(o.out_path);
    if (!(file << body)) throw DomainError("cannot write " + o.out_path);
  }
  nlohmann::ordered_json extra;
  extra["D"] = D;
  extra["chain"] = o.chain;
  extra["trials"] = o.trials;
  extra["seed"] = o.seed;
  double rate = 0.0;
  if (stemsim_code_size(c.get()) > 0) {
    check(stemsim_rate_estimate(stemsim_code_size(c.get()), o.n, &rate));
  }
  extra["rate"] = rate;
  return render_code(o, c.get(), w.get(), "Markov ensemble code", extra);
}

std::string run_verify(const Options& o) {
  auto w = load_weights(o.weights);
  stemsim_code* raw = nullptr;
  check(stemsim_code_load(o.code_path.c_str(), &raw));
  CodePtr c(raw);
  const double D = resolve_distance(o.D, o.d, stemsim_code_length(c.get()));
  int valid = 0;
  double min_distance = 0.0;
  char* report = nullptr;
  check(stemsim_code_verify(w.get(), c.get(), D, &valid, &min_distance, &report));
  const std::string violations = take(report);
  if (json_output(o)) {
    nlohmann::ordered_json j;
    j["weights"] = stemsim_weights_name(w.get());
    j["D"] = D;
    j["size"] = stemsim_code_size(c.get());
    j["valid"] = static_cast<bool>(valid);
    if (std::isinf(min_distance)) {
      j["min_distance"] = nullptr;
    } else {
      j["min_distance"] = min_distance;
    }
    auto& list = j["violations"] = nlohmann::ordered_json::array();
    std::istringstream is(violations);
    for (std::string line; std::getline(is, line);) list.push_back(line);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "size " << stemsim_code_size(c.get()) << "\n";
  os << "min distance " << number(min_distance) << "\n";
  os << "valid " << (valid ? "true" : "false") << " (D = " << number(D) << ")\n";
  os << violations;
  return os.str();
}

std::string run_search(const Options& o) {
  auto w = load_weights(o.weights);
  const double D = resolve_distance(o.D, o.d, o.n);
  stemsim_code* raw = nullptr;
  int exact = 0;
  check(stemsim_code_search(w.get(), o.n, D, o.limit, &raw, &exact));
  CodePtr c(raw);
  nlohmann::ordered_json extra;
  extra["D"] = D;
  extra["exact"] = static_cast<bool>(exact);
  return render_code(o, c.get(), w.get(), "exhaustive maximum code", extra);
}

std::string run_rate(const Options& o) {
  double rate = 0.0;
  check(stemsim_rate_estimate(o.N, o.n, &rate));
  if (json_output(o)) {
    nlohmann::ordered_json j{{"N", o.N}, {"n", o.n}, {"rate", rate}};
    return j.dump(2) + "\n";
  }
  return number(rate) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive stem similarity toolkit for DNA codes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--weights", o.weights,
                 "weight table: builtin:<id> or a grid file")
      ->capture_default_str();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto pairwise = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("x", o.x, "first strand")->required();
    sub->add_option("y", o.y, "second strand")->required();
    return sub;
  };
  pairwise("sim", "additive stem similarity S_w(x,y)");
  pairwise("dist", "stem distance D_w(x,y) = S_w(x,x) - S_w(x,y)");
  pairwise("energy", "duplex energy S_w(x, rc(y))");

  auto* critical = app.add_subcommand("critical", "critical relative distance T_w")
                       ->fallthrough();
  critical->add_option("--tolerance", o.tolerance, "projected-gradient tolerance")
      ->check(CLI::PositiveNumber);
  app.add_subcommand("tables", "T_w summary for every builtin table")->fallthrough();

  auto* xr = app.add_subcommand("xr", "repetition code X_r")->fallthrough();
  xr->add_option("--n", o.n, "odd length >= 3")->required();

  auto* gen = app.add_subcommand("gen", "random code from a Markov ensemble")
                  ->fallthrough();
  gen->add_option("--n", o.n, "codeword length")->required();
  gen->add_option("--D", o.D, "minimum distance");
  gen->add_option("--d", o.d, "relative minimum distance (D = d n)");
  gen->add_option("--trials", o.trials, "chain samples")->capture_default_str();
  gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen->add_option("--chain", o.chain, "sampling chain")
      ->check(CLI::IsMember({"optimal", "uniform"}))
      ->capture_default_str();
  gen->add_option("--out", o.out_path, "also write the codewords to a file");

  auto* verify = app.add_subcommand("verify", "check a code file")->fallthrough();
  verify->add_option("--code", o.code_path, "code file")->required();
  verify->add_option("--D", o.D, "minimum distance");
  verify->add_option("--d", o.d, "relative minimum distance (D = d n)");

  auto* search = app.add_subcommand("search", "exhaustive maximum code (small n)")
                     ->fallthrough();
  search->add_option("--n", o.n, "codeword length")->required();
  search->add_option("--D", o.D, "minimum distance");
  search->add_option("--d", o.d, "relative minimum distance (D = d n)");
  search->add_option("--limit", o.limit, "maximum 4^n")->capture_default_str();

  auto* rate = app.add_subcommand("rate", "finite-length rate log4(N)/n")
                   ->fallthrough();
  rate->add_option("--N", o.N, "code size")->required();
  rate->add_option("--n", o.n, "codeword length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string output;
  try {
    if (command == "sim" || command == "dist" || command == "energy") {
      output = run_pairwise(o, command);
    } else if (command == "critical") {
      output = run_critical(o);
    } else if (command == "tables") {
      output = run_tables(o);
    } else if (command == "xr") {
      output = run_xr(o);
    } else if (command == "gen") {
      output = run_gen(o);
    } else if (command == "verify") {
      output = run_verify(o);
    } else if (command == "search") {
      output = run_search(o);
    } else {
      output = run_rate(o);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  std::cout << output;
  return 0;
}
