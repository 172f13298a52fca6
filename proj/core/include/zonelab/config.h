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

#ifndef ZONELAB_CONFIG_H_
#define ZONELAB_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zonelab/problem.h"

namespace zonelab {

enum class Mode { kVoronoi, kZone, kOracleCompare, kBench };

std::string_view ToString(Mode mode);
Mode ParseMode(std::string_view name);

enum class SvgStyle { kEndpoints, kRays };

struct OutputPaths {
  std::string svg;
  std::string csv;
  std::string report;
};

struct BenchSpec {
  std::vector<int> site_counts = {2, 4, 8, 16};
  int points_per_site = 3;
  int ray_count = 32;
  int speedup_workers = 8;
};

struct RunConfig {
  Mode mode = Mode::kZone;
  NormSpec norm = NormSpec::L2();
  Box box = Box::Square(5);
  std::vector<std::vector<Vector>> sites;
  IterationParams iteration;
  OutputPaths output;
  int workers = 1;  // 0 means "auto"
  uint64_t seed = 0;
  int oracle_resolution = 256;
  SvgStyle svg_style = SvgStyle::kEndpoints;
  BenchSpec bench;

  // The problem described by sites/box/norm/iteration, workers applied.
  Problem MakeProblem() const;
};

// Parses the JSON configuration document:
//
//   {"mode": "zone", "norm": "l2",
//    "box": {"lo": [-5, -5], "hi": [5, 5]},
//    "sites": [[[x, y], ...], ...],
//    "iteration": {"ray_count", "eps_endpoint", "samples_per_ray",
//                  "adaptive_depth", "max_iters", "gap_tol"},
//    "seed": 0, "workers": 1 | "auto", "oracle_resolution": 256,
//    "svg_style": "endpoints" | "rays",
//    "output": {"svg", "csv", "report"},
//    "bench": {"site_counts", "points_per_site", "ray_count",
//              "speedup_workers"}}
//
// Unknown keys and wrong types are kParse errors naming the field path, e.g.
// "iteration.ray_count". Sites are checked for positive separation
// (kNotSeparated naming the pair). `mode_override`, when set, replaces the
// document's mode (the CLI passes the mode positionally).
RunConfig ParseConfig(std::string_view text,
                      std::optional<Mode> mode_override = std::nullopt);

RunConfig LoadConfig(const std::string& path,
                     std::optional<Mode> mode_override = std::nullopt);

}  // namespace zonelab

#endif  // ZONELAB_CONFIG_H_
