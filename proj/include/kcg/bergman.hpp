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

#ifndef KCG_BERGMAN_HPP_
#define KCG_BERGMAN_HPP_

#include "kcg/hermitian.hpp"

namespace kcg {

// A point (z1, z2) of the Siegel domain 2 Re z1 + |z2|^2 < 0.
struct InteriorPoint {
  Complex z1;
  Complex z2;

  bool in_domain() const;
  // (z1, z2, 1).
  HVector lift() const;
};

// Bergman distance rho with
//   cosh^2(rho / 2) = |<z, w>|^2 / (<z, z><w, w>).
// Throws kDomain("not an interior point") unless both points are interior.
double bergman_distance(const InteriorPoint& z, const InteriorPoint& w);

// Same distance for arbitrary negative vectors; lifts need not be standard.
double bergman_distance(const HVector& z, const HVector& w);

}  // namespace kcg

#endif  // KCG_BERGMAN_HPP_
