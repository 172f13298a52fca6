// Copyright 2026 The Zonelab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZONELAB_VECTOR_H_
#define ZONELAB_VECTOR_H_

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>

#include "zonelab/error.h"

namespace zonelab {

// Largest supported ambient dimension. Points live in fixed-capacity storage
// so that the inner loops never allocate.
inline constexpr int kMaxDim = 8;

// A point or displacement in R^d, 2 <= d <= kMaxDim, with finite coordinates.
class Vector {
 public:
  Vector() = default;
  Vector(std::initializer_list<double> coords);
  explicit Vector(std::span<const double> coords);

  // The zero vector of dimension `dim`.
  static Vector Zero(int dim);

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  const double* data() const { return c_.data(); }
  std::span<const double> coords() const { return {c_.data(), size_t(dim_)}; }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(double s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, double s) { return a *= s; }
  friend Vector operator*(double s, Vector a) { return a *= s; }
  friend bool operator==(const Vector& a, const Vector& b);

  // Euclidean length; directions are normalized with it.
  double euclidean_norm() const;

  std::string ToString() const;

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

// Throws kDimension unless both vectors share a dimension.
void CheckSameDim(const Vector& a, const Vector& b);

// Axis-aligned compact world.
class Box {
 public:
  Box(Vector lo, Vector hi);

  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }
  int dim() const { return lo_.dim(); }
  double diameter() const { return (hi_ - lo_).euclidean_norm(); }
  bool Contains(const Vector& p) const;
  bool Contains(const double* p) const;

  // The square [-half, half]^2.
  static Box Square(double half);

 private:
  Vector lo_;
  Vector hi_;
};

}  // namespace zonelab

#endif  // ZONELAB_VECTOR_H_
