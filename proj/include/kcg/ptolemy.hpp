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

// Ptolemaean inequality on the boundary sphere.
//
// With s1 = |X1|^{1/2} and s2 = |X2|^{1/2} every quadruple of distinct points
// satisfies
//
//   s1 + s2 >= 1,   s1 - s2 <= 1,   s2 - s1 <= 1,
//
// and one of them is an equality exactly when the four points lie on an
// R-circle.  Which one is decided by the cyclic order on that circle:
//
//   s1 - s2 = 1   p1, p3 separate p2, p4
//   s2 - s1 = 1   p1, p2 separate p3, p4
//   s1 + s2 = 1   p1, p4 separate p2, p3
//
// For finite points the same statements read as inequalities between
// products of Koranyi-Cygan distances; verify_metric evaluates those.

#ifndef KCG_PTOLEMY_HPP_
#define KCG_PTOLEMY_HPP_

#include <array>
#include <optional>

#include "kcg/cross_ratio.hpp"

namespace kcg {

inline constexpr double kDefaultEqTol = 1e-7;
inline constexpr double kDefaultSlackTol = 1e-9;

enum class EqualityCase { kNone, kSeparate13, kSeparate12, kSeparate14 };

const char* to_string(EqualityCase c);

// Slacks (RHS - LHS) of
//   d23 d14 <= d24 d13 + d12 d34
//   d13 d24 <= d12 d34 + d23 d14
//   d12 d34 <= d13 d24 + d23 d14
// and the largest of the three products, for scaling.
struct MetricSlacks {
  std::array<double, 3> slack{};
  double scale = 0.0;
};

struct PtolemyReport {
  double s1 = 0.0;
  double s2 = 0.0;
  double slack_sum = 0.0;      // s1 + s2 - 1
  double slack_diff_lo = 0.0;  // s1 - s2 + 1
  double slack_diff_hi = 0.0;  // 1 - s1 + s2
  EqualityCase equality_case = EqualityCase::kNone;
  bool r_circle = false;
  CrossRatioTriple triple;
  std::optional<MetricSlacks> metric;  // present iff all points are finite

  double min_slack() const;
};

// eq_tol is the absolute window around zero inside which a slack counts as
// an equality; it is also the tolerance handed to is_r_circle.
PtolemyReport verify(const Quadruple& q, double eq_tol = kDefaultEqTol);

// Throws kInfinity("metric form requires finite points") for ideal points.
MetricSlacks verify_metric(const Quadruple& q);

// X1, X2, X3 all real and positive: |Im x| <= tol |x| and Re x > 0.
bool is_r_circle(const Quadruple& q, double tol = kDefaultEqTol);
bool is_r_circle(const CrossRatioTriple& t, double tol = kDefaultEqTol);

}  // namespace kcg

#endif  // KCG_PTOLEMY_HPP_
