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

#include "zonelab/config.h"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace zonelab {

using nlohmann::json;

std::string_view ToString(Mode mode) {
  switch (mode) {
    case Mode::kVoronoi: return "voronoi";
    case Mode::kZone: return "zone";
    case Mode::kOracleCompare: return "oracle-compare";
    case Mode::kBench: return "bench";
  }
  return "zone";
}

Mode ParseMode(std::string_view name) {
  if (name == "voronoi") return Mode::kVoronoi;
  if (name == "zone") return Mode::kZone;
  if (name == "oracle-compare") return Mode::kOracleCompare;
  if (name == "bench") return Mode::kBench;
  throw Error(ErrorCode::kParse, "unknown mode '" + std::string(name) + "'");
}

namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, path + ": " + what);
}

// Validation failures keep their own code but gain the field path.
[[noreturn]] void Rethrow(const Error& e, const std::string& path) {
  if (e.code() == ErrorCode::kParse) throw e;
  throw Error(e.code(), path + ": " + e.what());
}

void CheckKeys(const json& obj, const std::string& path,
               const std::set<std::string>& allowed) {
  if (!obj.is_object()) Fail(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      Fail(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

double GetNumber(const json& v, const std::string& path) {
  if (!v.is_number()) Fail(path, "expected a number");
  return v.get<double>();
}

int GetInt(const json& v, const std::string& path) {
  if (!v.is_number_integer()) Fail(path, "expected an integer");
  return v.get<int>();
}

std::string GetString(const json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

Vector GetVector(const json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected a coordinate array");
  std::vector<double> coords;
  for (size_t i = 0; i < v.size(); ++i) {
    coords.push_back(GetNumber(v[i], path + "[" + std::to_string(i) + "]"));
  }
  try {
    return Vector(coords);
  } catch (const Error& e) {
    Fail(path, e.what());
  }
}

}  // namespace

Problem RunConfig::MakeProblem() const {
  std::vector<Site> s;
  for (size_t k = 0; k < sites.size(); ++k) s.push_back(Site{int(k), sites[k]});
  IterationParams p = iteration;
  p.workers = workers;
  return Problem::Create(std::move(s), box, norm, p);
}

RunConfig ParseConfig(std::string_view text, std::optional<Mode> mode_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  CheckKeys(doc, "",
            {"mode", "norm", "box", "sites", "iteration", "seed", "workers",
             "oracle_resolution", "svg_style", "output", "bench"});
  RunConfig cfg;
  if (doc.contains("mode")) {
    try {
      cfg.mode = ParseMode(GetString(doc["mode"], "mode"));
    } catch (const Error& e) {
      if (!mode_override) Fail("mode", e.what());
    }
  } else if (!mode_override) {
    Fail("mode", "missing");
  }
  if (mode_override) cfg.mode = *mode_override;

  if (doc.contains("norm")) {
    try {
      cfg.norm = NormSpec::Parse(GetString(doc["norm"], "norm"));
    } catch (const Error& e) {
      Rethrow(e, "norm");
    }
  }

  if (doc.contains("box")) {
    const json& b = doc["box"];
    CheckKeys(b, "box", {"lo", "hi"});
    if (!b.contains("lo") || !b.contains("hi")) Fail("box", "needs lo and hi");
    try {
      cfg.box = Box(GetVector(b["lo"], "box.lo"), GetVector(b["hi"], "box.hi"));
    } catch (const Error& e) {
      Rethrow(e, "box");
    }
  } else if (cfg.mode != Mode::kBench) {
    Fail("box", "missing");
  }

  if (doc.contains("sites")) {
    const json& s = doc["sites"];
    if (!s.is_array()) Fail("sites", "expected an array of sites");
    for (size_t k = 0; k < s.size(); ++k) {
      std::string path = "sites[" + std::to_string(k) + "]";
      if (!s[k].is_array() || s[k].empty()) {
        Fail(path, "expected a nonempty array of points");
      }
      std::vector<Vector> pts;
      for (size_t i = 0; i < s[k].size(); ++i) {
        Vector p = GetVector(s[k][i], path + "[" + std::to_string(i) + "]");
        if (p.dim() != cfg.box.dim()) {
          Fail(path + "[" + std::to_string(i) + "]", "dimension differs from box");
        }
        pts.push_back(p);
      }
      cfg.sites.push_back(std::move(pts));
    }
  }
  if (cfg.mode != Mode::kBench && cfg.sites.size() < 2) {
    Fail("sites", "need at least 2 sites");
  }

  if (doc.contains("iteration")) {
    const json& it = doc["iteration"];
    CheckKeys(it, "iteration",
              {"ray_count", "eps_endpoint", "samples_per_ray", "adaptive_depth",
               "max_iters", "gap_tol", "refine_threshold"});
    auto& p = cfg.iteration;
    if (it.contains("ray_count")) p.ray_count = GetInt(it["ray_count"], "iteration.ray_count");
    if (it.contains("eps_endpoint")) p.eps_endpoint = GetNumber(it["eps_endpoint"], "iteration.eps_endpoint");
    if (it.contains("samples_per_ray")) p.samples_per_ray = GetInt(it["samples_per_ray"], "iteration.samples_per_ray");
    if (it.contains("adaptive_depth")) p.adaptive_depth = GetInt(it["adaptive_depth"], "iteration.adaptive_depth");
    if (it.contains("max_iters")) p.max_iters = GetInt(it["max_iters"], "iteration.max_iters");
    if (it.contains("gap_tol")) p.gap_tol = GetNumber(it["gap_tol"], "iteration.gap_tol");
    if (it.contains("refine_threshold")) p.refine_threshold = GetNumber(it["refine_threshold"], "iteration.refine_threshold");
    try {
      p.Validate();
    } catch (const Error& e) {
      Rethrow(e, "iteration");
    }
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) Fail("seed", "expected a nonnegative integer");
    cfg.seed = doc["seed"].get<uint64_t>();
  }
  if (doc.contains("workers")) {
    const json& w = doc["workers"];
    if (w.is_string() && w.get<std::string>() == "auto") {
      cfg.workers = 0;
    } else {
      cfg.workers = GetInt(w, "workers");
      if (cfg.workers < 1) Fail("workers", "must be >= 1 or \"auto\"");
    }
  }
  if (doc.contains("oracle_resolution")) {
    cfg.oracle_resolution = GetInt(doc["oracle_resolution"], "oracle_resolution");
    if (cfg.oracle_resolution < 32) Fail("oracle_resolution", "must be >= 32");
  }
  if (doc.contains("svg_style")) {
    std::string s = GetString(doc["svg_style"], "svg_style");
    if (s == "endpoints") {
      cfg.svg_style = SvgStyle::kEndpoints;
    } else if (s == "rays") {
      cfg.svg_style = SvgStyle::kRays;
    } else {
      Fail("svg_style", "expected \"endpoints\" or \"rays\"");
    }
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    CheckKeys(o, "output", {"svg", "csv", "report"});
    if (o.contains("svg")) cfg.output.svg = GetString(o["svg"], "output.svg");
    if (o.contains("csv")) cfg.output.csv = GetString(o["csv"], "output.csv");
    if (o.contains("report")) cfg.output.report = GetString(o["report"], "output.report");
  }
  if (doc.contains("bench")) {
    const json& b = doc["bench"];
    CheckKeys(b, "bench",
              {"site_counts", "points_per_site", "ray_count", "speedup_workers"});
    auto& bs = cfg.bench;
    if (b.contains("site_counts")) {
      const json& ks = b["site_counts"];
      if (!ks.is_array() || ks.size() < 2) Fail("bench.site_counts", "need >= 2 entries");
      bs.site_counts.clear();
      for (size_t i = 0; i < ks.size(); ++i) {
        int k = GetInt(ks[i], "bench.site_counts[" + std::to_string(i) + "]");
        if (k < 2) Fail("bench.site_counts[" + std::to_string(i) + "]", "must be >= 2");
        bs.site_counts.push_back(k);
      }
    }
    if (b.contains("points_per_site")) bs.points_per_site = GetInt(b["points_per_site"], "bench.points_per_site");
    if (b.contains("ray_count")) bs.ray_count = GetInt(b["ray_count"], "bench.ray_count");
    if (b.contains("speedup_workers")) bs.speedup_workers = GetInt(b["speedup_workers"], "bench.speedup_workers");
    if (bs.points_per_site < 1) Fail("bench.points_per_site", "must be >= 1");
    if (bs.ray_count < 4) Fail("bench.ray_count", "must be >= 4");
    if (bs.speedup_workers < 1) Fail("bench.speedup_workers", "must be >= 1");
  }

  // Site separation, reported by pair before any computation starts.
  for (size_t k = 0; k < cfg.sites.size(); ++k) {
    for (const Vector& p : cfg.sites[k]) {
      if (!cfg.box.Contains(p)) {
        Fail("sites[" + std::to_string(k) + "]", "point " + p.ToString() + " outside the box");
      }
    }
    for (size_t j = k + 1; j < cfg.sites.size(); ++j) {
      double d = std::numeric_limits<double>::infinity();
      for (const Vector& p : cfg.sites[k]) {
        d = std::min(d, DistPointToPoints(p, cfg.sites[j], cfg.norm));
      }
      if (d <= 0) {
        throw Error(ErrorCode::kNotSeparated,
                    "sites[" + std::to_string(k) + "] and sites[" +
                        std::to_string(j) + "] are at distance 0");
      }
    }
  }
  return cfg;
}

RunConfig LoadConfig(const std::string& path, std::optional<Mode> mode_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str(), mode_override);
}

}  // namespace zonelab
