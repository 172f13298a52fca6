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

// The Dom mapping on tuples and the inner/outer iteration
//
//   I(0) = (P_k)_k,  O(n) = Dom(I(n)),  I(n+1) = Dom(O(n)).
//
// I(n) increases, O(n) decreases, and every zone or double zone diagram is
// sandwiched between them. The final I(n) is reported as m (least double
// zone diagram) and the final O(n) as M (greatest).

#ifndef ZONELAB_DIAGRAM_H_
#define ZONELAB_DIAGRAM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "zonelab/oracle.h"
#include "zonelab/problem.h"

namespace zonelab {

// Component k = dom(P_k, union of the clouds of components j != k).
DiagramTuple DomMap(const Problem& prob, const DiagramTuple& current,
                    TupleLabel label = {});

// O(0) = Dom(I(0)).
DiagramTuple Voronoi(const Problem& prob);

// Exact Hausdorff distance between clouds via nearest-point indexes.
double HausdorffDistance(const PointCloud& a, const PointCloud& b,
                         const NormSpec& norm);

// Per-component Hausdorff distance between the clouds of two tuples.
std::vector<double> ConvergenceGap(const DiagramTuple& a, const DiagramTuple& b,
                                   const NormSpec& norm);

struct IterationTrace {
  std::vector<DiagramTuple> inner;  // I(0)..I(n)
  std::vector<DiagramTuple> outer;  // O(0)..O(n)
  std::vector<std::vector<double>> gaps;  // gaps[n][k] = H(I(n)_k, O(n)_k)
  std::vector<double> seconds;            // wall time to produce I(n), O(n)
  std::vector<size_t> monotonicity_violations;  // per n, 0 when unchecked
  bool converged = false;
  // Norm outside the strict-convexity hypothesis of the convergence theory.
  bool outside_guarantees = false;

  int last() const { return int(inner.size()) - 1; }
  double max_gap(int n) const;
};

// Runs the I/O iteration until max_k gap <= gap_tol * diameter or max_iters.
// With params().monotonicity_resolution > 0 on planar problems, each step is
// rasterized and checked against the previous one; inclusion failures beyond
// a one-cell dilation throw kMonotonicity naming the iteration.
IterationTrace Iterate(const Problem& prob);

// Per-component Hausdorff distance between T and Dom(T).
std::vector<double> FixedPointResidual(const Problem& prob,
                                       const DiagramTuple& tuple);

struct ZonePair {
  DiagramTuple first;   // (m_1, M_2)
  DiagramTuple second;  // (M_1, m_2)
  std::vector<double> residual_first;
  std::vector<double> residual_second;
};

// The two zone diagrams assembled from m and M of a two-site problem.
ZonePair TwoSiteZone(const Problem& prob, const IterationTrace& trace);

struct SandwichViolation {
  std::string relation;  // e.g. "I(1) in I(2)"
  int component = 0;
  size_t cells = 0;
};

struct SandwichReport {
  int resolution = 0;
  size_t checks = 0;
  size_t violating_cells = 0;
  std::vector<SandwichViolation> violations;

  bool ok() const { return violating_cells == 0; }
};

// Rasterizes every I(n), O(n) and checks I(n) in I(n+1), O(n+1) in O(n) and
// I(n) in O(m) for all n, m, per component, up to a one-cell dilation.
SandwichReport CheckSandwich(const IterationTrace& trace, const Box& box,
                             int resolution);

}  // namespace zonelab

#endif  // ZONELAB_DIAGRAM_H_
