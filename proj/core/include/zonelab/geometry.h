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

// Metric kernel: directions, point/segment distances, ray clipping and a
// numerical strict-convexity probe. Everything here is a pure function.

#ifndef ZONELAB_GEOMETRY_H_
#define ZONELAB_GEOMETRY_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zonelab/norm.h"
#include "zonelab/vector.h"

namespace zonelab {

// `count` distinct Euclidean-unit vectors in R^dim. In 2D the angles are
// 2*pi*i/count starting at 0. In 3D the points form a spherical Fibonacci
// lattice; above 3D Halton points of the cube [-1,1]^dim are projected to
// the sphere. Deterministic bit for bit.
std::vector<Vector> UnitDirections(int dim, int count);

// min_{a in points} ||x - a||.
double DistPointToPoints(const Vector& x, std::span<const Vector> points,
                         const NormSpec& n);

// min_{t in [0,1]} ||x - (a + t(b - a))|| to within `tol`, by golden-section
// search on the convex objective.
double DistPointToSegment(const Vector& x, const Vector& a, const Vector& b,
                          const NormSpec& n, double tol);

// Largest t >= 0 with p + t*u in `box`. `p` must lie in the box.
double BoxExit(const Vector& p, const Vector& u, const Box& box);
double BoxExit(const double* p, const double* u, const Box& box);

struct ConvexityProbeResult {
  bool convex_evidence = true;
  std::optional<std::pair<Vector, Vector>> witness;
};

inline constexpr double kDefaultProbeTolerance = 1e-9;

// Looks for a segment on the unit sphere of `n`: checks `samples` pairs of
// distinct unit vectors and flags any pair whose midpoint has norm
// >= 1 - tolerance. A true result is evidence, not a proof. When several
// pairs fail the one farthest apart is reported.
ConvexityProbeResult StrictConvexityProbe(
    const NormSpec& n, int samples, int dim = 2,
    double tolerance = kDefaultProbeTolerance);

}  // namespace zonelab

#endif  // ZONELAB_GEOMETRY_H_
