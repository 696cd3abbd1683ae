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

#include "kcg/heisenberg.hpp"

#include <cmath>
#include <numbers>

#include "kcg/error.hpp"

namespace kcg {

HeisPoint group_mul(const HeisPoint& p, const HeisPoint& q) {
  return {p.z + q.z, p.t + q.t + 2.0 * (std::conj(q.z) * p.z).imag()};
}

HeisPoint group_inv(const HeisPoint& p) { return {-p.z, -p.t}; }

double gauge(const HeisPoint& p) {
  return std::sqrt(std::abs(Complex(std::norm(p.z), -p.t)));
}

double dk(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinity() || q.is_infinity()) {
    throw Error(Errc::kInfinity, "metric undefined at infinity");
  }
  return gauge(group_mul(group_inv(p.finite()), q.finite()));
}

double dk_via_form(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinity() || q.is_infinity()) {
    throw Error(Errc::kInfinity, "metric undefined at infinity");
  }
  // lift(q) is null, so <lp, lq> = <lp - lq, lq>; the difference vanishes
  // exactly when p == q.
  const HVector lq = standard_lift(q);
  return std::sqrt(std::abs(herm(standard_lift(p) + Complex(-1.0) * lq, lq)));
}

GroupElement similarity_matrix(const Similarity& sim) {
  if (!(sim.r > 0.0) || !std::isfinite(sim.r)) {
    throw Error(Errc::kInvalidArgument, "similarity dilation must be > 0");
  }
  const Complex rot = std::polar(1.0, sim.phi);
  const double sqrt2 = std::numbers::sqrt2;
  GroupElement iso = GroupElement::identity();
  iso(0, 1) = -sqrt2 * std::conj(sim.zeta) * rot;
  iso(0, 2) = Complex(-std::norm(sim.zeta), sim.s);
  iso(1, 1) = rot;
  iso(1, 2) = sqrt2 * sim.zeta;
  if (sim.r == 1.0) return iso;

  GroupElement dil;
  dil(0, 0) = sim.r;
  dil(1, 1) = 1.0;
  dil(2, 2) = 1.0 / sim.r;
  return iso * dil;
}

GroupElement inversion() { return GroupElement::j(); }

BoundaryPoint apply(const GroupElement& g, const BoundaryPoint& p) {
  const HVector v = g * standard_lift(p).normalized();
  if (v.is_zero()) throw Error(Errc::kDegenerate, "degenerate vector");
  if (std::abs(v[2]) <= kInfinitySnap * v.norm()) {
    return BoundaryPoint::Infinity();
  }
  const Complex first = v[0] / v[2];
  return BoundaryPoint(v[1] / (v[2] * std::numbers::sqrt2), first.imag());
}

BoundaryPoint r_circle_point(std::optional<double> x) {
  if (!x) return BoundaryPoint::Infinity();
  return BoundaryPoint(Complex(*x, 0.0), 0.0);
}

BoundaryPoint c_circle_point(double r, double t0, double theta) {
  if (!(r > 0.0)) {
    throw Error(Errc::kInvalidArgument, "chain radius must be > 0");
  }
  return BoundaryPoint(std::polar(r, theta), t0);
}

}  // namespace kcg
