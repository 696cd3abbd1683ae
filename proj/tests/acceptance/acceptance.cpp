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

// Acceptance suite.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "kcg/batch.hpp"
#include "kcg/bergman.hpp"
#include "kcg/cross_ratio.hpp"
#include "kcg/heisenberg.hpp"
#include "kcg/ptolemy.hpp"
#include "kcg/sampling.hpp"
#include "oracle.hpp"

namespace {

using namespace kcg;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double rel_err(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double rel_err(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

Complex to_double(oracle::C c) {
  return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

HeisPoint random_point(Rng& rng, double box = 3.0) {
  return {rng.disc(box), rng.uniform(-box * box, box * box)};
}

Similarity random_isometry(Rng& rng) {
  Similarity s;
  s.phi = rng.uniform(0.0, 2 * std::numbers::pi);
  s.zeta = rng.disc(kTwistZetaMax);
  s.s = rng.uniform(-kTwistSMax, kTwistSMax);
  return s;
}

std::vector<Record> records_of(const SampleSpec& spec) {
  std::vector<Record> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (const LabeledQuadruple& lq : sample(spec)) out.push_back({lq.q, lq.label});
  return out;
}

// Shared by criteria 2, 3 and 8.
struct GenericBatch {
  std::vector<Record> records;
  VerifyReport report;
  double seconds = 0.0;
};

const GenericBatch& generic_batch() {
  static const GenericBatch batch = [] {
    GenericBatch b;
    const auto start = std::chrono::steady_clock::now();
    SampleSpec spec;
    spec.seed = 20260101;
    spec.count = 100000;
    spec.twist_depth = 6;
    b.records = records_of(spec);
    b.report = verify_batch(b.records, VerifyTolerances{1e-9, 1e-7});
    b.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return b;
  }();
  return batch;
}

Outcome golden_quadruple() {
  const Quadruple q{{BoundaryPoint(0.0, 0.0), BoundaryPoint(1.0, 0.0),
                     BoundaryPoint(2.0, 0.0), BoundaryPoint(3.0, 0.0)}};
  // Brute-force evaluation first, checked against the exact rationals.
  const auto o = [](double x) { return oracle::fin(x, 0, 0); };
  const Complex w1 = to_double(oracle::cross_ratio(o(0), o(1), o(2), o(3)));
  const Complex w2 = to_double(oracle::cross_ratio(o(0), o(2), o(1), o(3)));
  const Complex w3 = to_double(oracle::cross_ratio(o(1), o(2), o(0), o(3)));
  double err = std::max({rel_err(w1, 16.0 / 9.0), rel_err(w2, 1.0 / 9.0),
                         rel_err(w3, 1.0 / 16.0)});
  const bool oracle_ok = err <= 1e-12;

  const PtolemyReport r = verify(q);
  err = std::max({err, rel_err(r.triple.x1, w1), rel_err(r.triple.x2, w2),
                  rel_err(r.triple.x3, w3), rel_err(r.s1 - r.s2, 1.0)});
  const bool ok = oracle_ok && err <= 1e-12 &&
                  r.equality_case == EqualityCase::kSeparate13;
  return {ok, "max rel err " + sci(err) + ", case " +
                  to_string(r.equality_case)};
}

Outcome variety_equations() {
  const GenericBatch& b = generic_batch();
  const double res = b.report.max_variety_residual;
  const bool ok = b.report.count == 100000 && res <= 1e-8 && b.seconds < 10.0;
  std::ostringstream s;
  s << b.report.count << " quadruples, max residual " << sci(res) << ", "
    << sci(b.seconds) << " s";
  return {ok, s.str()};
}

Outcome ptolemaean_inequality() {
  const VerifyReport& r = generic_batch().report;
  const bool ok = r.violations == 0 && r.min_slack >= -1e-9;
  return {ok, std::to_string(r.violations) + " violations, min slack " +
                  sci(r.min_slack)};
}

Outcome equality_classification() {
  SampleSpec spec;
  spec.seed = 4;
  spec.kind = SampleKind::kRCircle;
  spec.count = 10000;
  spec.twist_depth = 6;
  const VerifyReport r = verify_batch(records_of(spec), {1e-9, 1e-7});
  const auto& c = r.equality_counts;
  const bool covered = c[1] > 0 && c[2] > 0 && c[3] > 0;
  std::ostringstream s;
  s << r.mismatches << " mismatches; Separate13=" << c[1]
    << " Separate12=" << c[2] << " Separate14=" << c[3] << " None=" << c[0];
  return {r.mismatches == 0 && covered && r.count == 10000, s.str()};
}

Outcome chain_strictness() {
  SampleSpec spec;
  spec.seed = 5;
  spec.kind = SampleKind::kCCircle;
  spec.count = 10000;
  spec.min_gap = 0.1;
  const auto records = records_of(spec);
  std::int64_t flagged = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const PtolemyReport r = verify(records[i].q, 1e-7);
    min_slack = std::min(min_slack, r.min_slack());
    if (r.equality_case != EqualityCase::kNone || r.r_circle) {
      if (++flagged <= 5) {
        std::printf("  counterexample #%zu: %s\n", i,
                    to_json(Record{records[i].q, records[i].label}).c_str());
      }
    }
  }
  return {flagged == 0, std::to_string(flagged) +
                            " flagged, min slack " + sci(min_slack)};
}

Outcome metric_identity() {
  Rng rng(6);
  double form = 0.0, inv = 0.0, dil = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const BoundaryPoint p = random_point(rng), q = random_point(rng);
    const double d = dk(p, q);
    form = std::max(form, rel_err(d, dk_via_form(p, q)));
    const GroupElement g = similarity_matrix(random_isometry(rng));
    inv = std::max(inv, rel_err(dk(apply(g, p), apply(g, q)), d));
    const double r = std::exp(rng.uniform(-3.0, 3.0));
    const GroupElement h = similarity_matrix(Similarity::dilation(r));
    dil = std::max(dil, rel_err(dk(apply(h, p), apply(h, q)), r * d));
  }
  return {form <= 1e-12 && inv <= 1e-10 && dil <= 1e-12,
          "form " + sci(form) + ", invariance " + sci(inv) + ", dilation " +
              sci(dil)};
}

Outcome cross_ratio_invariance() {
  // Untwisted base quadruples under random words of one to six factors.
  SampleSpec spec;
  spec.seed = 7;
  spec.count = 10000;
  spec.twist_depth = 0;
  Rng rng(7);
  double worst = 0.0;
  for (const LabeledQuadruple& lq : sample(spec)) {
    const GroupElement g =
        random_junitary(rng, 1 + static_cast<int>(rng.next() % 6));
    Quadruple moved;
    for (int k = 0; k < 4; ++k) moved.p[k] = apply(g, lq.q.p[k]);
    const CrossRatioTriple a = triple(lq.q), b = triple(moved);
    worst = std::max({worst, rel_err(a.x1, b.x1), rel_err(a.x2, b.x2),
                      rel_err(a.x3, b.x3)});
  }
  return {worst <= 1e-8, "max rel err " + sci(worst)};
}

Outcome modulus_identity() {
  double worst = 0.0;
  std::int64_t n = 0;
  for (const Record& rec : generic_batch().records) {
    if (!rec.q.all_finite()) continue;
    ++n;
    auto d = [&](int i, int j) { return dk(rec.q.p[i - 1], rec.q.p[j - 1]); };
    const CrossRatioTriple t = triple(rec.q);
    worst = std::max(
        {worst,
         rel_err(std::sqrt(std::abs(t.x1)), d(3, 1) * d(4, 2) / (d(4, 1) * d(3, 2))),
         rel_err(std::sqrt(std::abs(t.x2)), d(2, 1) * d(4, 3) / (d(4, 1) * d(2, 3))),
         rel_err(std::sqrt(std::abs(t.x3)), d(1, 2) * d(4, 3) / (d(4, 2) * d(1, 3)))});
  }
  return {n > 0 && worst <= 1e-10,
          std::to_string(n) + " quadruples, max rel err " + sci(worst)};
}

Outcome triangle_inequality() {
  Rng rng(9);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100000; ++i) {
    const BoundaryPoint p = random_point(rng), m = random_point(rng),
                        q = random_point(rng);
    const double a = dk(p, m), b = dk(m, q), c = dk(p, q);
    worst = std::min(worst, (a + b - c) / std::max({a, b, c}));
  }
  return {worst >= -1e-12, "min scaled slack " + sci(worst)};
}

Outcome bergman_golden() {
  const double want = static_cast<double>(oracle::bergman(-1, 0, -2, 0));
  const double rho =
      bergman_distance(InteriorPoint{-1.0, 0.0}, InteriorPoint{-2.0, 0.0});
  const double err = std::max(std::abs(want - std::numbers::ln2),
                              std::abs(rho - std::numbers::ln2));
  return {err <= 1e-12, "abs err " + sci(err)};
}

Outcome similarity_j_unitary() {
  Rng rng(11);
  int passed = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Similarity s;
    s.r = std::exp(rng.uniform(-2.0, 2.0));
    s.phi = rng.uniform(0.0, 2 * std::numbers::pi);
    s.zeta = rng.disc(kTwistZetaMax);
    if (std::abs(s.zeta.imag()) < 1e-3) s.zeta += Complex(0.0, 0.5);
    s.s = rng.uniform(-kTwistSMax, kTwistSMax);
    const GroupElement m = similarity_matrix(s);
    worst = std::max(worst, j_unitarity_defect(m));
    passed += is_j_unitary(m);
  }
  return {passed == 1000,
          std::to_string(passed) + "/1000, max defect " + sci(worst)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"golden quadruple", golden_quadruple},
      {"variety equations", variety_equations},
      {"ptolemaean inequality", ptolemaean_inequality},
      {"equality classification", equality_classification},
      {"chain strictness", chain_strictness},
      {"metric identity", metric_identity},
      {"cross-ratio invariance", cross_ratio_invariance},
      {"modulus identity", modulus_identity},
      {"triangle inequality", triangle_inequality},
      {"bergman golden pair", bergman_golden},
      {"similarity is J-unitary", similarity_j_unitary},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %-26s %s\n", o.pass ? "PASS" : "FAIL", index, name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
