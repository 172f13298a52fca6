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

#include "zonelab/vector.h"

#include <sstream>

namespace zonelab {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kParameter: return "parameter error";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kNotSeparated: return "sites not separated";
    case ErrorCode::kConstruction: return "construction error";
    case ErrorCode::kMonotonicity: return "monotonicity violated";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "I/O error";
  }
  return "error";
}

namespace {

void CheckCoords(std::span<const double> coords) {
  if (coords.size() < 2 || coords.size() > size_t(kMaxDim)) {
    throw Error(ErrorCode::kDimension,
                "vector dimension " + std::to_string(coords.size()) +
                    " outside [2, " + std::to_string(kMaxDim) + "]");
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::kDomain, "non-finite coordinate");
    }
  }
}

}  // namespace

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::span<const double>(coords.begin(), coords.size())) {}

Vector::Vector(std::span<const double> coords) {
  CheckCoords(coords);
  dim_ = int(coords.size());
  for (int i = 0; i < dim_; ++i) c_[i] = coords[i];
}

Vector Vector::Zero(int dim) {
  if (dim < 2 || dim > kMaxDim) {
    throw Error(ErrorCode::kDimension, "bad dimension " + std::to_string(dim));
  }
  Vector v;
  v.dim_ = dim;
  return v;
}

Vector& Vector::operator+=(const Vector& o) {
  CheckSameDim(*this, o);
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  CheckSameDim(*this, o);
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (int i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

double Vector::euclidean_norm() const {
  double s = 0;
  for (int i = 0; i < dim_; ++i) s += c_[i] * c_[i];
  return std::sqrt(s);
}

std::string Vector::ToString() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

void CheckSameDim(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimension,
                "mixed dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

Box::Box(Vector lo, Vector hi) : lo_(lo), hi_(hi) {
  CheckSameDim(lo, hi);
  for (int i = 0; i < lo.dim(); ++i) {
    if (!(lo[i] < hi[i])) {
      throw Error(ErrorCode::kDomain, "box needs lo < hi on every axis");
    }
  }
}

bool Box::Contains(const Vector& p) const {
  return p.dim() == dim() && Contains(p.data());
}

bool Box::Contains(const double* p) const {
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

Box Box::Square(double half) { return Box({-half, -half}, {half, half}); }

}  // namespace zonelab
