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

#include "kcg/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kcg/error.hpp"

namespace kcg {

const HeisPoint& BoundaryPoint::finite() const {
  if (!finite_) throw Error(Errc::kInfinity, "metric undefined at infinity");
  return *finite_;
}

double HVector::norm() const {
  return std::sqrt(std::norm(c_[0]) + std::norm(c_[1]) + std::norm(c_[2]));
}

double HVector::max_abs() const {
  return std::max({std::abs(c_[0]), std::abs(c_[1]), std::abs(c_[2])});
}

HVector HVector::normalized() const {
  const double m = max_abs();
  if (m == 0.0) throw Error(Errc::kDegenerate, "degenerate vector");
  return Complex(1.0 / m) * *this;
}

Complex herm(const HVector& v, const HVector& w) {
  return v[0] * std::conj(w[2]) + v[1] * std::conj(w[1]) +
         v[2] * std::conj(w[0]);
}

const char* to_string(SpaceClass c) {
  switch (c) {
    case SpaceClass::kNegative: return "Negative";
    case SpaceClass::kNull: return "Null";
    case SpaceClass::kPositive: return "Positive";
  }
  return "?";
}

SpaceClass classify(const HVector& v, double tol) {
  if (v.is_zero()) throw Error(Errc::kDegenerate, "degenerate vector");
  const double n = v.norm();
  const double q = herm(v, v).real();
  const double band = tol * n * n;
  if (q < -band) return SpaceClass::kNegative;
  if (q > band) return SpaceClass::kPositive;
  return SpaceClass::kNull;
}

HVector standard_lift(const BoundaryPoint& p) {
  if (p.is_infinity()) return kInfinityLift;
  const HeisPoint& h = p.finite();
  return {Complex(-std::norm(h.z), h.t), std::numbers::sqrt2 * h.z, 1.0};
}

BoundaryPoint project(const HVector& v, double tol) {
  if (classify(v, tol) != SpaceClass::kNull) {
    throw Error(Errc::kDomain, "not a boundary vector");
  }
  if (std::abs(v[2]) <= tol * v.norm()) return BoundaryPoint::Infinity();
  const Complex first = v[0] / v[2];
  return BoundaryPoint(v[1] / (v[2] * std::numbers::sqrt2), first.imag());
}

GroupElement GroupElement::identity() {
  GroupElement g;
  for (std::size_t i = 0; i < 3; ++i) g(i, i) = 1.0;
  return g;
}

GroupElement GroupElement::j() {
  GroupElement g;
  g(0, 2) = 1.0;
  g(1, 1) = 1.0;
  g(2, 0) = 1.0;
  return g;
}

GroupElement GroupElement::adjoint() const {
  GroupElement a;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = std::conj(m_[c][r]);
  return a;
}

double GroupElement::max_abs() const {
  double m = 0.0;
  for (const auto& row : m_)
    for (const Complex& x : row) m = std::max(m, std::abs(x));
  return m;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement p;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return p;
}

HVector operator*(const GroupElement& g, const HVector& v) {
  HVector out;
  for (std::size_t r = 0; r < 3; ++r)
    out[r] = g(r, 0) * v[0] + g(r, 1) * v[1] + g(r, 2) * v[2];
  return out;
}

double j_unitarity_defect(const GroupElement& m) {
  const double scale = m.max_abs();
  if (scale == 0.0) return std::numeric_limits<double>::infinity();
  const GroupElement j = GroupElement::j();
  const GroupElement d = m.adjoint() * j * m;
  double worst = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      worst = std::max(worst, std::abs(d(r, c) - j(r, c)));
  return worst / (scale * scale);
}

bool is_j_unitary(const GroupElement& m, double tol) {
  return j_unitarity_defect(m) <= tol;
}

}  // namespace kcg
