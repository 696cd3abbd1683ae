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

#ifndef KCG_POINT_HPP_
#define KCG_POINT_HPP_

#include <complex>
#include <optional>

namespace kcg {

using Complex = std::complex<double>;

// A point (z, t) of the Heisenberg group C x R.
struct HeisPoint {
  Complex z{};
  double t = 0.0;

  friend bool operator==(const HeisPoint&, const HeisPoint&) = default;
};

// A point of the boundary sphere: either a finite Heisenberg point or the
// point at infinity.
class BoundaryPoint {
 public:
  // Default-constructs the origin (0, 0).
  BoundaryPoint() : finite_(HeisPoint{}) {}
  BoundaryPoint(const HeisPoint& p) : finite_(p) {}  // NOLINT: implicit
  BoundaryPoint(Complex z, double t) : finite_(HeisPoint{z, t}) {}

  static BoundaryPoint Infinity() { return BoundaryPoint(std::nullopt); }

  bool is_infinity() const { return !finite_.has_value(); }
  bool is_finite() const { return finite_.has_value(); }

  // Throws kcg::Error(kInfinity) for the point at infinity.
  const HeisPoint& finite() const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  explicit BoundaryPoint(std::nullopt_t) : finite_(std::nullopt) {}

  std::optional<HeisPoint> finite_;
};

}  // namespace kcg

#endif  // KCG_POINT_HPP_
