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

// The Heisenberg group C x R with law
//
//   (z, t) * (w, s) = (z + w, t + s + 2 Im(conj(w) z)),
//
// its Koranyi gauge |(z, t)| = | |z|^2 - it |^{1/2} and the Koranyi-Cygan
// metric d(p, q) = |p^{-1} * q|, plus the matrices through which similarities
// and the inversion act on the boundary.

#ifndef KCG_HEISENBERG_HPP_
#define KCG_HEISENBERG_HPP_

#include <optional>

#include "kcg/hermitian.hpp"
#include "kcg/point.hpp"

namespace kcg {

HeisPoint group_mul(const HeisPoint& p, const HeisPoint& q);
HeisPoint group_inv(const HeisPoint& p);
double gauge(const HeisPoint& p);

// Koranyi-Cygan distance.  Throws kInfinity if either point is infinite.
double dk(const BoundaryPoint& p, const BoundaryPoint& q);

// The same distance evaluated as |<lift(p), lift(q)>|^{1/2}.
double dk_via_form(const BoundaryPoint& p, const BoundaryPoint& q);

// (z, t) -> (zeta, s) * (r e^{i phi} z, r^2 t).
struct Similarity {
  double r = 1.0;
  double phi = 0.0;
  Complex zeta{};
  double s = 0.0;

  static Similarity translation(Complex zeta, double s) {
    return {1.0, 0.0, zeta, s};
  }
  static Similarity rotation(double phi) { return {1.0, phi, {}, 0.0}; }
  static Similarity dilation(double r) { return {r, 0.0, {}, 0.0}; }
};

// Left translation by (zeta, s) composed with the rotation e^{i phi}:
//
//   [[1, -sqrt2 conj(zeta) e^{i phi}, -|zeta|^2 + is],
//    [0,  e^{i phi},                   sqrt2 zeta   ],
//    [0,  0,                           1            ]]
//
// times the dilation diag(r, 1, 1/r).  The (1,2) entry carries conj(zeta);
// without the conjugate the matrix is not J-unitary for non-real zeta.
// Throws kInvalidArgument unless r > 0.
GroupElement similarity_matrix(const Similarity& sim);

// The Koranyi inversion, realised by J: swaps the origin and infinity and
// sends (z, t) to (z / (-|z|^2 + it), -t / (|z|^4 + t^2)).
GroupElement inversion();

// Projective action on the boundary: project(g * lift(p)).  g is assumed to
// be J-unitary, so the image is always a boundary point; a third lift
// component below kInfinitySnap times the lift norm is read as infinity.
inline constexpr double kInfinitySnap = 1e-14;
BoundaryPoint apply(const GroupElement& g, const BoundaryPoint& p);

// The standard infinite R-circle {(x, 0)} u {infinity}; nullopt is infinity.
BoundaryPoint r_circle_point(std::optional<double> x);

// The chain (r e^{i theta}, t0).  Throws kInvalidArgument unless r > 0.
BoundaryPoint c_circle_point(double r, double t0, double theta);

}  // namespace kcg

#endif  // KCG_HEISENBERG_HPP_
