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

// Complex cross-ratios of boundary quadruples,
//
//   X(p1, p2, p3, p4) = <p3, p1><p4, p2> / (<p4, p1><p3, p2>),
//
// evaluated on lifts.  X is independent of the lifts chosen and invariant
// under the diagonal action of J-unitary matrices.  For a quadruple the three
// values
//
//   X1 = X(p1, p2, p3, p4),  X2 = X(p1, p3, p2, p4),  X3 = X(p2, p3, p1, p4)
//
// satisfy |X2| = |X1||X3| and
// 2|X1|^2 Re X3 = |X1|^2 + |X2|^2 - 2 Re(X1 + X2) + 1.

#ifndef KCG_CROSS_RATIO_HPP_
#define KCG_CROSS_RATIO_HPP_

#include <array>
#include <utility>

#include "kcg/hermitian.hpp"
#include "kcg/point.hpp"

namespace kcg {

inline constexpr double kDistinctEps = 1e-12;

// <lift(p), lift(q)> on standard lifts.
Complex boundary_pairing(const BoundaryPoint& p, const BoundaryPoint& q);

// Two boundary points are distinct iff their lifts pair to a nonzero value:
// |<lp, lq>| > eps |lp| |lq|.
bool distinct(const BoundaryPoint& p, const BoundaryPoint& q,
              double eps = kDistinctEps);

struct Quadruple {
  std::array<BoundaryPoint, 4> p;

  // Throws kDegenerate("degenerate quadruple") unless pairwise distinct.
  void validate(double eps = kDistinctEps) const;
  bool all_finite() const;
};

// Throws kDegenerate if the points are not pairwise distinct.
Complex cross_ratio(const BoundaryPoint& p1, const BoundaryPoint& p2,
                    const BoundaryPoint& p3, const BoundaryPoint& p4);

struct VarietyResiduals {
  double res1 = 0.0;
  double res2 = 0.0;
};

// Relative residuals of the two variety equations; each absolute residual is
// divided by the largest modulus among the terms of its equation.
VarietyResiduals variety_residuals(Complex x1, Complex x2, Complex x3);

bool on_variety(Complex x1, Complex x2, Complex x3, double tol);

struct CrossRatioTriple {
  Complex x1;
  Complex x2;
  Complex x3;
  double res1 = 0.0;
  double res2 = 0.0;
};

CrossRatioTriple triple(const Quadruple& q);

}  // namespace kcg

#endif  // KCG_CROSS_RATIO_HPP_
