// Copyright 2026 The kcgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// kcg: command-line front end over the libkcgeom C API.
//
// Exit codes: 0 success (no violations), 1 violations or mismatches found,
// 2 usage, parse or domain errors.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kcg/kcg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string message;
};

void check(kcg_status s, const std::string& context = {}) {
  if (s == KCG_OK) return;
  std::string msg = context.empty() ? "" : context + ": ";
  msg += kcg_last_error();
  throw Failure{msg};
}

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// "re", "re,im" or "[re,im]".
kcg_complex parse_complex(std::string text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  auto number = [&](const std::string& s) {
    double x = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, x);
    if (res.ec != std::errc() || res.ptr != last) {
      throw Failure{"not a number: \"" + s + "\""};
    }
    return x;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

struct QuadrupleDeleter {
  void operator()(kcg_quadruple* q) const { kcg_quadruple_destroy(q); }
};
using QuadruplePtr = std::unique_ptr<kcg_quadruple, QuadrupleDeleter>;

QuadruplePtr parse_quadruple(const std::string& json) {
  kcg_quadruple* q = nullptr;
  check(kcg_quadruple_parse(json.c_str(), &q), "record");
  return QuadruplePtr(q);
}

int run_dist(const std::string& a, const std::string& b) {
  kcg_point p, q;
  check(kcg_point_parse(a.c_str(), &p), "first point");
  check(kcg_point_parse(b.c_str(), &q), "second point");
  double dk = 0.0, dk_form = 0.0;
  check(kcg_dist(&p, &q, &dk, &dk_form));
  std::cout << "{\"dk\":" << fmt(dk) << ",\"dk_via_form\":" << fmt(dk_form)
            << "}\n";
  return kExitOk;
}

int run_xratio(const std::string& record) {
  const QuadruplePtr q = parse_quadruple(record);
  const char* json = nullptr;
  check(kcg_cross_ratios_json(q.get(), &json));
  std::cout << json << '\n';
  return kExitOk;
}

int run_ptolemy(const std::string& record, double eq_tol) {
  const QuadruplePtr q = parse_quadruple(record);
  const char* json = nullptr;
  check(kcg_ptolemy_json(q.get(), eq_tol, &json));
  std::cout << json << '\n';
  return kExitOk;
}

int run_sample(const kcg_sample_spec& spec, const std::string& out_path) {
  kcg_sampler* raw = nullptr;
  check(kcg_sampler_create(&spec, &raw), "sample");
  const std::unique_ptr<kcg_sampler, void (*)(kcg_sampler*)> sampler(
      raw, kcg_sampler_destroy);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) throw Failure{"cannot open " + out_path + " for writing"};
    out = &file;
  }
  for (;;) {
    const char* line = nullptr;
    check(kcg_sampler_next(sampler.get(), &line), "sample");
    if (!line) break;
    *out << line << '\n';
  }
  out->flush();
  if (!*out) throw Failure{"write failed"};
  return kExitOk;
}

int run_verify(const std::string& input, double tol, double eq_tol, bool json,
               unsigned threads) {
  kcg_verifier* raw = nullptr;
  check(kcg_verifier_create(tol, eq_tol, &raw), "verify");
  const std::unique_ptr<kcg_verifier, void (*)(kcg_verifier*)> verifier(
      raw, kcg_verifier_destroy);

  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input, std::ios::binary);
    if (!file) throw Failure{"cannot open " + input};
    in = &file;
  }
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    check(kcg_verifier_add(verifier.get(), line.c_str()),
          input + ":" + std::to_string(line_no));
  }

  kcg_verify_report r;
  check(kcg_verifier_run(verifier.get(), threads, &r), "verify");
  if (json) {
    const char* text = nullptr;
    check(kcg_verifier_report_json(verifier.get(), &text));
    std::cout << text << '\n';
  } else {
    std::cout << "count                 " << r.count << '\n'
              << "violations            " << r.violations << '\n'
              << "max_variety_residual  " << fmt(r.max_variety_residual) << '\n'
              << "min_slack             " << fmt(r.min_slack) << '\n'
              << "equality_counts       None=" << r.equality_counts[0]
              << " Separate13=" << r.equality_counts[1]
              << " Separate12=" << r.equality_counts[2]
              << " Separate14=" << r.equality_counts[3] << '\n'
              << "mismatches            " << r.mismatches << '\n'
              << "tolerances            tol=" << fmt(r.tol)
              << " eq_tol=" << fmt(r.eq_tol) << '\n';
  }
  return (r.violations == 0 && r.mismatches == 0) ? kExitOk : kExitViolations;
}

int run_bergman(const std::string& z1, const std::string& z2,
                const std::string& w1, const std::string& w2) {
  double rho = 0.0;
  check(kcg_bergman_distance(parse_complex(z1), parse_complex(z2),
                             parse_complex(w1), parse_complex(w2), &rho));
  std::cout << fmt(rho) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koranyi-Cygan geometry and the Ptolemaean inequality on the "
               "Heisenberg group"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kcg_version());

  std::string p_json, q_json;
  auto* dist = app.add_subcommand("dist", "Koranyi-Cygan distance, two ways");
  dist->add_option("p", p_json, "point JSON, e.g. '{\"z\":[0,0],\"t\":0}'")
      ->required();
  dist->add_option("q", q_json, "point JSON")->required();

  std::string record;
  auto* xratio = app.add_subcommand("xratio", "cross-ratios X1, X2, X3");
  xratio->add_option("record", record, "quadruple record JSON")->required();

  double eq_tol = kcg_default_eq_tol();
  auto* ptolemy =
      app.add_subcommand("ptolemy", "Ptolemaean slacks and equality case");
  ptolemy->add_option("record", record, "quadruple record JSON")->required();
  ptolemy->add_option("--eq-tol", eq_tol, "equality window")
      ->capture_default_str();

  kcg_sample_spec spec;
  kcg_sample_spec_default(&spec);
  std::string kind = "generic";
  std::string out_path;
  bool near_degenerate = false;
  auto* sample = app.add_subcommand("sample", "write seeded quadruples as JSONL");
  sample->add_option("--kind", kind, "generic | rcircle | ccircle")
      ->check(CLI::IsMember({"generic", "rcircle", "ccircle"}))
      ->capture_default_str();
  sample->add_option("--count", spec.count)->capture_default_str();
  sample->add_option("--seed", spec.seed)->capture_default_str();
  sample->add_option("--box", spec.box, "coordinate bound")
      ->capture_default_str();
  sample->add_option("--twist-depth", spec.twist_depth,
                     "number of random J-unitary factors")
      ->capture_default_str();
  sample->add_option("--min-gap", spec.min_gap, "distinctness floor")
      ->capture_default_str();
  sample->add_flag("--near-degenerate", near_degenerate,
                   "put p2 within [min-gap, 2 min-gap] of p1");
  sample->add_option("--out", out_path, "output file (default stdout)");

  std::string input = "-";
  double tol = kcg_default_tol();
  bool json = false;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "batch-verify a JSONL dataset");
  verify->add_option("--input", input, "JSONL file, - for stdin")
      ->capture_default_str();
  verify->add_option("--tol", tol, "violation threshold")
      ->capture_default_str();
  verify->add_option("--eq-tol", eq_tol, "equality window")
      ->capture_default_str();
  verify->add_flag("--json", json, "print the report as JSON");
  verify->add_option("--threads", threads, "0 = all cores")
      ->capture_default_str();

  std::string z1, z2, w1, w2;
  auto* bergman = app.add_subcommand(
      "bergman", "Bergman distance between (z1, z2) and (w1, w2)");
  bergman->positionals_at_end();
  for (auto [name, target] : {std::pair{"z1", &z1}, std::pair{"z2", &z2},
                              std::pair{"w1", &w1}, std::pair{"w2", &w2}}) {
    bergman->add_option(name, *target, "complex as re or re,im")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*dist) return run_dist(p_json, q_json);
    if (*xratio) return run_xratio(record);
    if (*ptolemy) return run_ptolemy(record, eq_tol);
    if (*sample) {
      spec.kind = kind == "rcircle"   ? KCG_SAMPLE_RCIRCLE
                  : kind == "ccircle" ? KCG_SAMPLE_CCIRCLE
                                      : KCG_SAMPLE_GENERIC;
      spec.near_degenerate = near_degenerate ? 1 : 0;
      return run_sample(spec, out_path);
    }
    if (*verify) return run_verify(input, tol, eq_tol, json, threads);
    if (*bergman) return run_bergman(z1, z2, w1, w2);
  } catch (const Failure& f) {
    std::cerr << "kcg: " << f.message << '\n';
    return kExitError;
  }
  return kExitError;
}
