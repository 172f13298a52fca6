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

#include "zonelab/geometry.h"

#include <algorithm>
#include <limits>
#include <numbers>

namespace zonelab {

namespace {

double RadicalInverse(uint64_t i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0;
  while (i > 0) {
    r += f * double(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

constexpr int kPrimes[kMaxDim] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

std::vector<Vector> UnitDirections(int dim, int count) {
  if (dim < 2 || dim > kMaxDim) {
    throw Error(ErrorCode::kDimension, "bad dimension " + std::to_string(dim));
  }
  if (count < 4) {
    throw Error(ErrorCode::kParameter, "need at least 4 directions");
  }
  std::vector<Vector> out;
  out.reserve(count);
  if (dim == 2) {
    for (int i = 0; i < count; ++i) {
      double a = 2 * std::numbers::pi * i / count;
      out.push_back(Vector{std::cos(a), std::sin(a)});
    }
    // Snap the axis directions so that they are exact.
    for (auto& v : out) {
      for (int c = 0; c < 2; ++c) {
        if (std::abs(v[c]) < 1e-15) v[c] = 0;
        if (std::abs(std::abs(v[c]) - 1) < 1e-15) v[c] = v[c] > 0 ? 1 : -1;
      }
    }
    return out;
  }
  if (dim == 3) {
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      double z = 1 - (2.0 * i + 1) / count;
      double r = std::sqrt(std::max(0.0, 1 - z * z));
      double phi = golden * i;
      out.push_back(Vector{r * std::cos(phi), r * std::sin(phi), z});
    }
    return out;
  }
  // Halton points of [-1,1]^dim projected radially; points too close to the
  // origin are skipped because their direction is ill conditioned.
  for (uint64_t i = 1; int(out.size()) < count; ++i) {
    Vector v = Vector::Zero(dim);
    for (int c = 0; c < dim; ++c) v[c] = 2 * RadicalInverse(i, kPrimes[c]) - 1;
    double len = v.euclidean_norm();
    if (len < 0.1) continue;
    v *= 1 / len;
    if (std::find(out.begin(), out.end(), v) != out.end()) continue;
    out.push_back(v);
  }
  return out;
}

double DistPointToPoints(const Vector& x, std::span<const Vector> points,
                         const NormSpec& n) {
  if (points.empty()) {
    throw Error(ErrorCode::kDomain, "distance to an empty set");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Vector& a : points) best = std::min(best, Distance(n, x, a));
  return best;
}

double DistPointToSegment(const Vector& x, const Vector& a, const Vector& b,
                          const NormSpec& n, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::kParameter, "tol must be positive");
  CheckSameDim(x, a);
  CheckSameDim(a, b);
  const Vector ab = b - a;
  const double len = NormEval(n, ab);
  if (len == 0) return Distance(n, x, a);
  auto f = [&](double t) { return Distance(n, x, a + t * ab); };
  // f is len-Lipschitz in t, so a bracket of width tol/len pins the minimum
  // value to within tol.
  const double width = tol / len;
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double lo = 0, hi = 1;
  double m1 = hi - inv_phi * (hi - lo);
  double m2 = lo + inv_phi * (hi - lo);
  double f1 = f(m1), f2 = f(m2);
  while (hi - lo > width) {
    if (f1 <= f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - inv_phi * (hi - lo);
      f1 = f(m1);
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + inv_phi * (hi - lo);
      f2 = f(m2);
    }
  }
  return std::min({f(0), f(1), f1, f2, f(0.5 * (lo + hi))});
}

double BoxExit(const double* p, const double* u, const Box& box) {
  if (!box.Contains(p)) {
    throw Error(ErrorCode::kDomain, "ray source outside the box");
  }
  double t = std::numeric_limits<double>::infinity();
  for (int i = 0; i < box.dim(); ++i) {
    if (u[i] > 0) {
      t = std::min(t, (box.hi()[i] - p[i]) / u[i]);
    } else if (u[i] < 0) {
      t = std::min(t, (box.lo()[i] - p[i]) / u[i]);
    }
  }
  if (std::isinf(t)) throw Error(ErrorCode::kDomain, "zero ray direction");
  return std::max(0.0, t);
}

double BoxExit(const Vector& p, const Vector& u, const Box& box) {
  CheckSameDim(p, u);
  if (p.dim() != box.dim()) {
    throw Error(ErrorCode::kDimension, "point and box dimensions differ");
  }
  return BoxExit(p.data(), u.data(), box);
}

ConvexityProbeResult StrictConvexityProbe(const NormSpec& n, int samples,
                                          int dim, double tolerance) {
  if (samples < 100) {
    throw Error(ErrorCode::kParameter, "probe needs at least 100 samples");
  }
  n.CheckDim(dim);
  // Smallest multiple of 4 with enough pairs, so the axis directions (where
  // polyhedral norms have their faces) are among the samples in 2D.
  int m = 4;
  while (int64_t(m) * (m - 1) / 2 < samples) m += 4;
  std::vector<Vector> unit = UnitDirections(dim, m);
  for (auto& v : unit) v *= 1 / NormEval(n, v);

  ConvexityProbeResult result;
  double widest = -1;
  int checked = 0;
  for (int i = 0; i < m && checked < samples; ++i) {
    for (int j = i + 1; j < m && checked < samples; ++j, ++checked) {
      Vector mid = 0.5 * (unit[i] + unit[j]);
      if (NormEval(n, mid) >= 1 - tolerance) {
        double sep = (unit[i] - unit[j]).euclidean_norm();
        if (sep > widest) {
          widest = sep;
          result.convex_evidence = false;
          result.witness = std::make_pair(unit[i], unit[j]);
        }
      }
    }
  }
  return result;
}

}  // namespace zonelab
