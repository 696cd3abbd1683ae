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

#include "kcg/ptolemy.hpp"

#include <algorithm>
#include <cmath>

#include "kcg/error.hpp"
#include "kcg/heisenberg.hpp"

namespace kcg {
namespace {

bool real_positive(Complex x, double tol) {
  return x.real() > 0.0 && std::abs(x.imag()) <= tol * std::abs(x);
}

}  // namespace

const char* to_string(EqualityCase c) {
  switch (c) {
    case EqualityCase::kNone: return "None";
    case EqualityCase::kSeparate13: return "Separate13";
    case EqualityCase::kSeparate12: return "Separate12";
    case EqualityCase::kSeparate14: return "Separate14";
  }
  return "?";
}

double PtolemyReport::min_slack() const {
  return std::min({slack_sum, slack_diff_lo, slack_diff_hi});
}

bool is_r_circle(const CrossRatioTriple& t, double tol) {
  return real_positive(t.x1, tol) && real_positive(t.x2, tol) &&
         real_positive(t.x3, tol);
}

bool is_r_circle(const Quadruple& q, double tol) {
  return is_r_circle(triple(q), tol);
}

PtolemyReport verify(const Quadruple& q, double eq_tol) {
  PtolemyReport r;
  r.triple = triple(q);
  r.s1 = std::sqrt(std::abs(r.triple.x1));
  r.s2 = std::sqrt(std::abs(r.triple.x2));
  r.slack_sum = r.s1 + r.s2 - 1.0;
  r.slack_diff_lo = r.s1 - r.s2 + 1.0;
  r.slack_diff_hi = 1.0 - r.s1 + r.s2;

  // Closest slack inside the window wins; distinct points never put two of
  // them there at once.
  struct Candidate {
    double slack;
    EqualityCase label;
  };
  const Candidate candidates[] = {
      {r.slack_diff_hi, EqualityCase::kSeparate13},
      {r.slack_diff_lo, EqualityCase::kSeparate12},
      {r.slack_sum, EqualityCase::kSeparate14},
  };
  double best = eq_tol;
  for (const Candidate& c : candidates) {
    if (std::abs(c.slack) <= best) {
      best = std::abs(c.slack);
      r.equality_case = c.label;
    }
  }

  r.r_circle = is_r_circle(r.triple, eq_tol);
  if (q.all_finite()) r.metric = verify_metric(q);
  return r;
}

MetricSlacks verify_metric(const Quadruple& q) {
  if (!q.all_finite()) {
    throw Error(Errc::kInfinity, "metric form requires finite points");
  }
  auto d = [&](int i, int j) { return dk(q.p[i - 1], q.p[j - 1]); };
  const double d12_34 = d(1, 2) * d(3, 4);
  const double d13_24 = d(1, 3) * d(2, 4);
  const double d23_14 = d(2, 3) * d(1, 4);

  MetricSlacks m;
  m.slack = {d13_24 + d12_34 - d23_14, d12_34 + d23_14 - d13_24,
             d13_24 + d23_14 - d12_34};
  m.scale = std::max({d12_34, d13_24, d23_14});
  return m;
}

}  // namespace kcg
