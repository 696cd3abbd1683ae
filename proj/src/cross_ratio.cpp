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

#include "kcg/cross_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "kcg/error.hpp"

namespace kcg {
namespace {

double max_of(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

double relative(double diff, double scale) {
  return scale == 0.0 ? std::abs(diff) : std::abs(diff) / scale;
}

[[noreturn]] void degenerate() {
  throw Error(Errc::kDegenerate, "degenerate quadruple");
}

}  // namespace

Complex boundary_pairing(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinity() || q.is_infinity()) {
    return herm(standard_lift(p), standard_lift(q));
  }
  // Expanded form of <lift(p), lift(q)> for two finite points,
  //   -|zp - zq|^2 + 2i Im((zp - zq) conj(zq)) + i(tp - tq),
  // which vanishes with the separation instead of cancelling |z|^2 terms.
  const HeisPoint& a = p.finite();
  const HeisPoint& b = q.finite();
  const Complex dz = a.z - b.z;
  return {-std::norm(dz), 2.0 * (dz * std::conj(b.z)).imag() + (a.t - b.t)};
}

bool distinct(const BoundaryPoint& p, const BoundaryPoint& q, double eps) {
  return std::abs(boundary_pairing(p, q)) >
         eps * standard_lift(p).norm() * standard_lift(q).norm();
}

void Quadruple::validate(double eps) const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!distinct(p[i], p[j], eps)) degenerate();
}

bool Quadruple::all_finite() const {
  return std::all_of(p.begin(), p.end(),
                     [](const BoundaryPoint& b) { return b.is_finite(); });
}

Complex cross_ratio(const BoundaryPoint& p1, const BoundaryPoint& p2,
                    const BoundaryPoint& p3, const BoundaryPoint& p4) {
  Quadruple{{p1, p2, p3, p4}}.validate();
  // Finite points use their standard lifts and infinity uses (1, 0, 0), so
  // every point keeps one lift across all four pairings.
  return boundary_pairing(p3, p1) * boundary_pairing(p4, p2) /
         (boundary_pairing(p4, p1) * boundary_pairing(p3, p2));
}

VarietyResiduals variety_residuals(Complex x1, Complex x2, Complex x3) {
  const double a1 = std::abs(x1);
  const double a2 = std::abs(x2);
  const double a3 = std::abs(x3);

  VarietyResiduals r;
  r.res1 = relative(a2 - a1 * a3, max_of({a2, a1 * a3}));

  const double lhs = 2.0 * a1 * a1 * x3.real();
  const double rhs =
      a1 * a1 + a2 * a2 - 2.0 * x1.real() - 2.0 * x2.real() + 1.0;
  r.res2 = relative(lhs - rhs, max_of({lhs, a1 * a1, a2 * a2,
                                       2.0 * x1.real(), 2.0 * x2.real(), 1.0}));
  return r;
}

bool on_variety(Complex x1, Complex x2, Complex x3, double tol) {
  const VarietyResiduals r = variety_residuals(x1, x2, x3);
  return r.res1 <= tol && r.res2 <= tol;
}

CrossRatioTriple triple(const Quadruple& q) {
  q.validate();
  // pair(i, j) = <p_i, p_j>, one-based to match the formulas.
  auto pair = [&](int i, int j) {
    return boundary_pairing(q.p[i - 1], q.p[j - 1]);
  };

  CrossRatioTriple t;
  t.x1 = pair(3, 1) * pair(4, 2) / (pair(4, 1) * pair(3, 2));
  t.x2 = pair(2, 1) * pair(4, 3) / (pair(4, 1) * pair(2, 3));
  t.x3 = pair(1, 2) * pair(4, 3) / (pair(4, 2) * pair(1, 3));
  const VarietyResiduals r = variety_residuals(t.x1, t.x2, t.x3);
  t.res1 = r.res1;
  t.res2 = r.res2;
  return t;
}

}  // namespace kcg
