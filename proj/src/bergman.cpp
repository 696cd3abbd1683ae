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

#include "kcg/bergman.hpp"

#include <cmath>

#include "kcg/error.hpp"

namespace kcg {
namespace {

constexpr double kQuotientSlack = 1e-12;

}  // namespace

bool InteriorPoint::in_domain() const {
  return std::isfinite(z1.real()) && std::isfinite(z1.imag()) &&
         std::isfinite(z2.real()) && std::isfinite(z2.imag()) &&
         2.0 * z1.real() + std::norm(z2) < 0.0;
}

HVector InteriorPoint::lift() const { return {z1, z2, 1.0}; }

double bergman_distance(const InteriorPoint& z, const InteriorPoint& w) {
  if (!z.in_domain() || !w.in_domain()) {
    throw Error(Errc::kDomain, "not an interior point");
  }
  return bergman_distance(z.lift(), w.lift());
}

double bergman_distance(const HVector& z, const HVector& w) {
  const double zz = herm(z, z).real();
  const double ww = herm(w, w).real();
  if (!(zz < 0.0) || !(ww < 0.0)) {
    throw Error(Errc::kDomain, "not an interior point");
  }
  // cosh^2(rho/2) - 1 = (|<z,w>|^2 - <z,z><w,w>) / (<z,z><w,w>).  With
  // d = w - z the numerator equals |<z,d>|^2 - <z,z><d,d>, which vanishes
  // with d instead of cancelling two large terms.
  const HVector d = w + Complex(-1.0) * z;
  const double numer = std::norm(herm(z, d)) - zz * herm(d, d).real();
  const double denom = zz * ww;
  double sinh2 = numer / denom;
  if (sinh2 < 0.0) {
    if (sinh2 < -kQuotientSlack) {
      throw Error(Errc::kDomain, "Bergman quotient below one");
    }
    sinh2 = 0.0;
  }
  return 2.0 * std::asinh(std::sqrt(sinh2));
}

}  // namespace kcg
