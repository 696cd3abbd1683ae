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

// Linear algebra on C^{2,1}: the signature (2,1) Hermitian form
//
//   <v, w> = w^* J v = v1 conj(w3) + v2 conj(w2) + v3 conj(w1),
//
//   J = [[0,0,1],[0,1,0],[1,0,0]],
//
// the classification of vectors by the sign of <v, v>, standard lifts of
// boundary points and the projection back, and J-unitarity of 3x3 matrices.
//
// All tolerances are relative: a quantity is compared against tol times the
// appropriate power of the vector or matrix magnitude.

#ifndef KCG_HERMITIAN_HPP_
#define KCG_HERMITIAN_HPP_

#include <array>
#include <cstddef>

#include "kcg/point.hpp"

namespace kcg {

inline constexpr double kDefaultTol = 1e-10;

class HVector {
 public:
  constexpr HVector() = default;
  constexpr HVector(Complex a, Complex b, Complex c) : c_{a, b, c} {}

  constexpr Complex& operator[](std::size_t i) { return c_[i]; }
  constexpr const Complex& operator[](std::size_t i) const { return c_[i]; }

  // Euclidean norm on C^3 and the largest component modulus.
  double norm() const;
  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  // Rescaled so that the largest component has modulus one.  Every
  // projective quantity is unchanged by this.
  HVector normalized() const;

  friend HVector operator*(Complex a, const HVector& v) {
    return {a * v[0], a * v[1], a * v[2]};
  }
  friend HVector operator+(const HVector& a, const HVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::array<Complex, 3> c_{};
};

// The distinguished null vectors lifting the origin and infinity.
inline constexpr HVector kOriginLift{0.0, 0.0, 1.0};
inline constexpr HVector kInfinityLift{1.0, 0.0, 0.0};

Complex herm(const HVector& v, const HVector& w);

enum class SpaceClass { kNegative, kNull, kPositive };

const char* to_string(SpaceClass c);

// Sign of <v, v> against +-tol * |v|^2.  Throws kDegenerate on the zero
// vector.
SpaceClass classify(const HVector& v, double tol = kDefaultTol);

// (-|z|^2 + it, sqrt(2) z, 1) for a finite point, (1, 0, 0) for infinity.
HVector standard_lift(const BoundaryPoint& p);

// Inverse of standard_lift up to a nonzero complex multiple.  The vector must
// be null within tol; a third component below tol * |v| maps to infinity.
BoundaryPoint project(const HVector& v, double tol = kDefaultTol);

// 3x3 complex matrix acting on C^{2,1} by left multiplication.
class GroupElement {
 public:
  using Matrix = std::array<std::array<Complex, 3>, 3>;

  constexpr GroupElement() : m_{} {}
  constexpr explicit GroupElement(const Matrix& m) : m_(m) {}

  static GroupElement identity();
  // The form matrix J.  It is its own inverse and is J-unitary.
  static GroupElement j();

  constexpr Complex& operator()(std::size_t r, std::size_t c) {
    return m_[r][c];
  }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_[r][c];
  }

  GroupElement adjoint() const;
  double max_abs() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend HVector operator*(const GroupElement& g, const HVector& v);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  Matrix m_;
};

// max |(M^* J M - J)_{ij}| / max |M_ij|^2, infinite for the zero matrix.
double j_unitarity_defect(const GroupElement& m);

// True iff M^* J M = J within tol * |M|_max^2 (equivalently M^{-1} = J M^* J).
bool is_j_unitary(const GroupElement& m, double tol = kDefaultTol);

}  // namespace kcg

#endif  // KCG_HERMITIAN_HPP_
