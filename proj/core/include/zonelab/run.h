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

#ifndef ZONELAB_RUN_H_
#define ZONELAB_RUN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonelab/config.h"
#include "zonelab/diagram.h"

namespace zonelab {

struct InvariantOutcome {
  std::string name;
  bool passed = true;
  bool hard = true;  // a failed hard invariant makes the exit status nonzero
  std::string detail;
};

struct BenchResult {
  std::vector<int> site_counts;
  std::vector<double> sizes;    // G * K * ray_count
  std::vector<double> seconds;  // per-iteration wall time at workers = 1
  double exponent = 0;          // least-squares slope of log time vs log size
  int speedup_workers = 0;
  double speedup = 0;  // largest K: time(1 worker) / time(speedup_workers)
  unsigned hardware_threads = 0;
};

struct RunReport {
  Mode mode = Mode::kZone;
  std::string norm;
  int K = 0;
  int dim = 0;
  double diameter = 0;
  std::vector<std::vector<double>> gaps;  // [n][k]
  std::vector<double> seconds;            // [n]
  std::vector<size_t> rays;               // [n], rays in I(n) and O(n)
  std::vector<size_t> endpoints;          // [n], rays with t_end > 0
  bool converged = false;
  bool outside_guarantees = false;
  std::vector<double> residual_first;   // K = 2 zone mode
  std::vector<double> residual_second;  // K = 2 zone mode
  double zone_distance = -1;            // max_k H between the two zones
  std::vector<double> symdiff;          // oracle-compare, per component
  std::optional<BenchResult> bench;
  std::vector<InvariantOutcome> invariants;

  int exit_code() const;
  std::string ToJson() const;
};

// Executes the configured mode and writes the requested outputs. Invariant
// failures are recorded in the report; I/O failures throw kIo.
RunReport Run(const RunConfig& config);

// K sites of `points_per_site` points each, drawn uniformly in `box` with
// rejection until every pair of sites is at least diameter / (4 sqrt K)
// apart. Points of one site lie within a tenth of that distance of a common
// center. Deterministic in `seed` on every platform.
std::vector<std::vector<Vector>> RandomSites(int K, int points_per_site,
                                             const Box& box,
                                             const NormSpec& norm,
                                             uint64_t seed);

// max_k H(Dom(m)_k, M_k) where m, M are the final inner/outer tuples. Dom is
// re-evaluated with twice the rays (a superset of the directions), so the
// value measures the fixed-point identity rather than repeating the step
// that produced M.
double DomResidual(const Problem& prob, const IterationTrace& trace);

// Timing sweep behind bench mode: direct (linear-scan) pipeline, no
// adaptive refinement, one Dom iteration per site count.
BenchResult RunBench(const RunConfig& config);

}  // namespace zonelab

#endif  // ZONELAB_RUN_H_
