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

#include "zonelab/diagram.h"

#include <algorithm>
#include <chrono>
#include <optional>

#include "zonelab/parallel.h"
#include "zonelab/raster.h"

namespace zonelab {

DiagramTuple DomMap(const Problem& prob, const DiagramTuple& current,
                    TupleLabel label) {
  const int K = prob.K();
  if (current.K() != K) {
    throw Error(ErrorCode::kDomain, "tuple has " + std::to_string(current.K()) +
                                        " components, problem has " +
                                        std::to_string(K));
  }
  const DomOptions options = prob.dom_options();
  std::vector<RegionRays> regions;
  regions.reserve(K);
  for (int k = 0; k < K; ++k) {
    PointCloud others(prob.dim());
    for (int j = 0; j < K; ++j) {
      if (j != k) others.Append(current.clouds[j]);
    }
    RegionRays r = DomRegion(prob.site(k), others, prob.directions(),
                             prob.box(), prob.norm(), options);
    r.generation = label.n;
    regions.push_back(std::move(r));
  }
  return DiagramTuple::FromRegions(std::move(regions),
                                   prob.params().samples_per_ray, label);
}

DiagramTuple Voronoi(const Problem& prob) {
  return DomMap(prob, SitesTuple(prob), {TupleLabel::Kind::kOuter, 0});
}

double HausdorffDistance(const PointCloud& a, const PointCloud& b,
                         const NormSpec& norm) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kDomain, "Hausdorff distance of an empty cloud");
  }
  auto directed = [&](const PointCloud& from, const PointCloud& to) {
    NearestIndex index(to, norm);
    double worst = 0;
    for (size_t i = 0; i < from.size(); ++i) {
      worst = std::max(worst, index.Nearest(from.at(i)));
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<double> ConvergenceGap(const DiagramTuple& a, const DiagramTuple& b,
                                   const NormSpec& norm) {
  if (a.K() != b.K()) {
    throw Error(ErrorCode::kDomain, "tuples have different K");
  }
  std::vector<double> gaps(a.K());
  for (int k = 0; k < a.K(); ++k) {
    gaps[k] = HausdorffDistance(a.clouds[k], b.clouds[k], norm);
  }
  return gaps;
}

double IterationTrace::max_gap(int n) const {
  const auto& g = gaps.at(n);
  return g.empty() ? 0 : *std::max_element(g.begin(), g.end());
}

IterationTrace Iterate(const Problem& prob) {
  using Clock = std::chrono::steady_clock;
  const auto& params = prob.params();
  IterationTrace trace;
  trace.outside_guarantees = !prob.norm().strictly_convex();

  const bool check = params.monotonicity_resolution > 0 && prob.dim() == 2 &&
                     prob.K() <= kMaxGridLabels;
  std::optional<GridSpec> spec;
  if (check) spec.emplace(prob.box(), std::max(32, params.monotonicity_resolution));
  std::optional<MembershipGrid> prev_inner, prev_outer;

  const double tol = params.gap_tol * prob.diameter();
  for (int n = 0; n <= params.max_iters; ++n) {
    auto start = Clock::now();
    DiagramTuple inner =
        n == 0 ? SitesTuple(prob)
               : DomMap(prob, trace.outer.back(), {TupleLabel::Kind::kInner, n});
    DiagramTuple outer = DomMap(prob, inner, {TupleLabel::Kind::kOuter, n});
    trace.seconds.push_back(
        std::chrono::duration<double>(Clock::now() - start).count());
    trace.gaps.push_back(ConvergenceGap(inner, outer, prob.norm()));

    size_t violations = 0;
    if (check) {
      MembershipGrid gi = RasterizeTuple(inner, *spec);
      MembershipGrid go = RasterizeTuple(outer, *spec);
      for (int k = 0; k < prob.K(); ++k) {
        violations += InclusionViolations(gi, go, k);
        if (prev_inner) {
          violations += InclusionViolations(*prev_inner, gi, k);
          violations += InclusionViolations(go, *prev_outer, k);
        }
      }
      prev_inner = std::move(gi);
      prev_outer = std::move(go);
    }
    trace.monotonicity_violations.push_back(violations);
    trace.inner.push_back(std::move(inner));
    trace.outer.push_back(std::move(outer));
    if (violations > 0) {
      throw Error(ErrorCode::kMonotonicity,
                  "iteration " + std::to_string(n) + ": " +
                      std::to_string(violations) +
                      " cells break the I/O sandwich; eps or ray_count is "
                      "too coarse");
    }
    if (trace.max_gap(n) <= tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

std::vector<double> FixedPointResidual(const Problem& prob,
                                       const DiagramTuple& tuple) {
  DiagramTuple image = DomMap(prob, tuple, tuple.label);
  return ConvergenceGap(tuple, image, prob.norm());
}

ZonePair TwoSiteZone(const Problem& prob, const IterationTrace& trace) {
  if (prob.K() != 2) {
    throw Error(ErrorCode::kDomain, "zone assembly from m and M needs K = 2");
  }
  if (trace.inner.empty() || trace.outer.empty()) {
    throw Error(ErrorCode::kDomain, "empty iteration trace");
  }
  const DiagramTuple& m = trace.inner.back();
  const DiagramTuple& M = trace.outer.back();
  auto assemble = [](const DiagramTuple& a, const DiagramTuple& b) {
    DiagramTuple t;
    t.label = {TupleLabel::Kind::kZone, a.label.n};
    t.regions = {a.regions[0], b.regions[1]};
    t.clouds = {a.clouds[0], b.clouds[1]};
    return t;
  };
  ZonePair z;
  z.first = assemble(m, M);
  z.second = assemble(M, m);
  z.residual_first = FixedPointResidual(prob, z.first);
  z.residual_second = FixedPointResidual(prob, z.second);
  return z;
}

SandwichReport CheckSandwich(const IterationTrace& trace, const Box& box,
                             int resolution) {
  GridSpec spec(box, resolution);
  SandwichReport report;
  report.resolution = resolution;
  std::vector<MembershipGrid> inner, outer;
  for (const auto& t : trace.inner) inner.push_back(RasterizeTuple(t, spec));
  for (const auto& t : trace.outer) outer.push_back(RasterizeTuple(t, spec));
  const int K = trace.inner.empty() ? 0 : trace.inner.front().K();
  auto check = [&](const MembershipGrid& a, const MembershipGrid& b,
                   const std::string& relation) {
    for (int k = 0; k < K; ++k) {
      ++report.checks;
      size_t v = InclusionViolations(a, b, k);
      if (v > 0) {
        report.violating_cells += v;
        report.violations.push_back({relation, k, v});
      }
    }
  };
  auto name = [](char c, size_t n) {
    return std::string(1, c) + "(" + std::to_string(n) + ")";
  };
  for (size_t n = 0; n + 1 < inner.size(); ++n) {
    check(inner[n], inner[n + 1], name('I', n) + " in " + name('I', n + 1));
  }
  for (size_t n = 0; n + 1 < outer.size(); ++n) {
    check(outer[n + 1], outer[n], name('O', n + 1) + " in " + name('O', n));
  }
  for (size_t n = 0; n < inner.size(); ++n) {
    for (size_t m = 0; m < outer.size(); ++m) {
      check(inner[n], outer[m], name('I', n) + " in " + name('O', m));
    }
  }
  return report;
}

}  // namespace zonelab
