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

#include "zonelab/run.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "json.hpp"
#include "zonelab/export.h"
#include "zonelab/raster.h"

namespace zonelab {

namespace {

using nlohmann::json;

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Inserts "_outer" before the extension of `path`.
std::string OuterPath(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  const size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + "_outer";
  }
  return path.substr(0, dot) + "_outer" + path.substr(dot);
}

void RecordTrace(const IterationTrace& trace, RunReport& report) {
  report.gaps = trace.gaps;
  report.seconds = trace.seconds;
  report.converged = trace.converged;
  report.outside_guarantees = trace.outside_guarantees;
  for (size_t n = 0; n < trace.inner.size(); ++n) {
    size_t rays = 0, endpoints = 0;
    for (const DiagramTuple* t : {&trace.inner[n], &trace.outer[n]}) {
      for (const auto& r : t->regions) {
        rays += r.rays.size();
        for (const Ray& ray : r.rays) endpoints += ray.t_end > 0;
      }
    }
    report.rays.push_back(rays);
    report.endpoints.push_back(endpoints);
  }
}

void AddSandwich(const IterationTrace& trace, const Problem& prob,
                 int resolution, RunReport& report) {
  if (prob.dim() != 2 || prob.K() > kMaxGridLabels) return;
  SandwichReport s = CheckSandwich(trace, prob.box(), resolution);
  std::string detail = std::to_string(s.checks) + " inclusions at " +
                       std::to_string(resolution) + "^2, " +
                       std::to_string(s.violating_cells) + " violating cells";
  for (const auto& v : s.violations) {
    detail += "; " + v.relation + " k=" + std::to_string(v.component) + ": " +
              std::to_string(v.cells);
  }
  report.invariants.push_back({"sandwich", s.ok(), true, detail});
}

double Seconds(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

void RunZone(const RunConfig& config, RunReport& report) {
  Problem prob = config.MakeProblem();
  // The sandwich is checked once over the whole trace below, so a
  // violation is reported rather than aborting the run.
  prob.mutable_params().monotonicity_resolution = 0;
  IterationTrace trace = Iterate(prob);
  RecordTrace(trace, report);
  AddSandwich(trace, prob, config.oracle_resolution, report);

  const double tol = prob.params().gap_tol * prob.diameter();
  report.invariants.push_back(
      {"converged", trace.converged, false,
       "max gap " + Fmt(trace.max_gap(trace.last())) + " vs tolerance " +
           Fmt(tol) + " after n = " + std::to_string(trace.last())});
  if (trace.converged) {
    const double worst = DomResidual(prob, trace);
    report.invariants.push_back({"M_equals_Dom_m", worst <= 2 * tol, false,
                                 "H(Dom(m), M) = " + Fmt(worst) +
                                     " (Dom re-evaluated at twice the rays)"});
  }
  if (prob.K() == 2) {
    ZonePair z = TwoSiteZone(prob, trace);
    report.residual_first = z.residual_first;
    report.residual_second = z.residual_second;
    std::vector<double> d = ConvergenceGap(z.first, z.second, prob.norm());
    report.zone_distance = *std::max_element(d.begin(), d.end());
    auto check = [&](const char* name, const std::vector<double>& r) {
      const double worst = *std::max_element(r.begin(), r.end());
      report.invariants.push_back({name, worst <= 2 * tol, false,
                                   "H(T, Dom(T)) = " + Fmt(worst)});
    };
    check("zone_residual_m1_M2", z.residual_first);
    check("zone_residual_M1_m2", z.residual_second);
  }

  if (!config.output.csv.empty()) {
    ExportCsv(trace.inner.back(), config.output.csv);
    ExportCsv(trace.outer.back(), OuterPath(config.output.csv));
  }
  if (!config.output.svg.empty() && prob.dim() == 2) {
    ExportSvg({trace.inner.back(), trace.outer.back()}, prob.sites(),
              prob.box(), config.output.svg, config.svg_style);
  }
}

void RunVoronoi(const RunConfig& config, RunReport& report) {
  Problem prob = config.MakeProblem();
  auto start = std::chrono::steady_clock::now();
  DiagramTuple v = Voronoi(prob);
  report.seconds.push_back(Seconds(std::chrono::steady_clock::now() - start));
  report.outside_guarantees = !prob.norm().strictly_convex();
  size_t rays = 0, endpoints = 0;
  for (const auto& r : v.regions) {
    rays += r.rays.size();
    for (const Ray& ray : r.rays) endpoints += ray.t_end > 0;
  }
  report.rays.push_back(rays);
  report.endpoints.push_back(endpoints);

  if (prob.dim() == 2 && prob.K() <= kMaxGridLabels) {
    GridSpec spec(prob.box(), config.oracle_resolution);
    MembershipGrid raster = RasterizeTuple(v, spec);
    auto oracle = GridDomMap(prob, GridSitesTuple(prob, spec));
    double worst = 0;
    for (int k = 0; k < prob.K(); ++k) {
      double s = SymdiffFraction(raster, k, oracle[k], k);
      report.symdiff.push_back(s);
      worst = std::max(worst, s);
    }
    size_t uncovered = 0;
    for (size_t c = 0; c < spec.cells(); ++c) uncovered += raster.labels(c) == 0;
    report.invariants.push_back(
        {"voronoi_oracle_symdiff", worst < 0.02, false,
         "max symmetric difference " + Fmt(worst)});
    report.invariants.push_back(
        {"voronoi_covers_box", uncovered == 0, false,
         std::to_string(uncovered) + " uncovered cells"});
  }
  if (!config.output.csv.empty()) ExportCsv(v, config.output.csv);
  if (!config.output.svg.empty() && prob.dim() == 2) {
    ExportSvg({v}, prob.sites(), prob.box(), config.output.svg,
              config.svg_style);
  }
}

// Each ray-pipeline Dom step of the trace is compared against the grid Dom
// of the same (rasterized) input tuple.
void RunOracleCompare(const RunConfig& config, RunReport& report) {
  Problem prob = config.MakeProblem();
  if (prob.dim() != 2) {
    throw Error(ErrorCode::kDimension, "oracle-compare is planar");
  }
  prob.mutable_params().monotonicity_resolution = 0;
  IterationTrace trace = Iterate(prob);
  RecordTrace(trace, report);
  GridSpec spec(prob.box(), config.oracle_resolution);
  const int K = prob.K();
  report.symdiff.assign(K, 0);
  auto compare = [&](const DiagramTuple& input, const DiagramTuple& output) {
    MembershipGrid in = RasterizeTuple(input, spec);
    MembershipGrid out = RasterizeTuple(output, spec);
    auto oracle = GridDomMap(prob, std::vector<MembershipGrid>(K, in));
    for (int k = 0; k < K; ++k) {
      report.symdiff[k] =
          std::max(report.symdiff[k], SymdiffFraction(out, k, oracle[k], k));
    }
  };
  compare(trace.inner[0], trace.outer[0]);
  for (int n = 1; n <= trace.last(); ++n) {
    compare(trace.outer[n - 1], trace.inner[n]);
    compare(trace.inner[n], trace.outer[n]);
  }
  const double worst = *std::max_element(report.symdiff.begin(),
                                         report.symdiff.end());
  report.invariants.push_back(
      {"oracle_symdiff", worst < 0.02, prob.norm().strictly_convex(),
       "max per-component symmetric difference " + Fmt(worst) + " at " +
           std::to_string(config.oracle_resolution) + "^2"});
  AddSandwich(trace, prob, config.oracle_resolution, report);
  if (!config.output.csv.empty()) ExportCsv(trace.inner.back(), config.output.csv);
  if (!config.output.svg.empty()) {
    ExportSvg({trace.inner.back(), trace.outer.back()}, prob.sites(),
              prob.box(), config.output.svg, config.svg_style);
  }
}

double FitSlope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx > 0 ? sxy / sxx : 0;
}

}  // namespace

double DomResidual(const Problem& prob, const IterationTrace& trace) {
  IterationParams fine = prob.params();
  fine.ray_count *= 2;
  Problem refined =
      Problem::Create(prob.sites(), prob.box(), prob.norm(), fine);
  std::vector<double> r = ConvergenceGap(
      DomMap(refined, trace.inner.back(), {}), trace.outer.back(), prob.norm());
  return *std::max_element(r.begin(), r.end());
}

int RunReport::exit_code() const {
  for (const auto& inv : invariants) {
    if (inv.hard && !inv.passed) return 1;
  }
  return 0;
}

std::string RunReport::ToJson() const {
  json j;
  j["mode"] = std::string(ToString(mode));
  j["norm"] = norm;
  j["K"] = K;
  j["dim"] = dim;
  j["diameter"] = diameter;
  j["iterations"] = gaps.empty() ? 0 : int(gaps.size()) - 1;
  j["gaps"] = gaps;
  j["seconds"] = seconds;
  j["rays"] = rays;
  j["endpoints"] = endpoints;
  j["converged"] = converged;
  j["outside_guarantees"] = outside_guarantees;
  if (outside_guarantees) {
    j["note"] = "norm is not strictly convex; convergence is not guaranteed";
  }
  if (!residual_first.empty()) {
    j["zone"] = {{"residual_m1_M2", residual_first},
                 {"residual_M1_m2", residual_second},
                 {"distance_between_zones", zone_distance}};
  }
  if (!symdiff.empty()) j["symdiff"] = symdiff;
  if (bench) {
    j["bench"] = {{"site_counts", bench->site_counts},
                  {"sizes", bench->sizes},
                  {"seconds", bench->seconds},
                  {"exponent", bench->exponent},
                  {"speedup_workers", bench->speedup_workers},
                  {"speedup", bench->speedup},
                  {"hardware_threads", bench->hardware_threads}};
  }
  json inv = json::array();
  for (const auto& i : invariants) {
    inv.push_back({{"name", i.name},
                   {"passed", i.passed},
                   {"hard", i.hard},
                   {"detail", i.detail}});
  }
  j["invariants"] = inv;
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

std::vector<std::vector<Vector>> RandomSites(int K, int points_per_site,
                                             const Box& box,
                                             const NormSpec& norm,
                                             uint64_t seed) {
  if (K < 2 || points_per_site < 1) {
    throw Error(ErrorCode::kParameter, "need K >= 2 and points_per_site >= 1");
  }
  const int dim = box.dim();
  const double sep = box.diameter() / (4 * std::sqrt(double(K)));
  const double spread = sep / 10;
  // mt19937_64 output is specified by the standard; the conversion to
  // [0, 1) is done by hand so the sites do not depend on the library.
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return double(gen() >> 11) * 0x1.0p-53; };
  auto in_box = [&](const std::vector<double>& c) {
    for (int i = 0; i < dim; ++i) {
      if (c[i] < box.lo()[i] || c[i] > box.hi()[i]) return false;
    }
    return true;
  };
  std::vector<std::vector<Vector>> sites;
  for (int attempt = 0; int(sites.size()) < K; ++attempt) {
    if (attempt > 100000) {
      throw Error(ErrorCode::kConstruction,
                  "could not place " + std::to_string(K) + " separated sites");
    }
    std::vector<double> center(dim);
    for (int i = 0; i < dim; ++i) {
      center[i] = box.lo()[i] + unit() * (box.hi()[i] - box.lo()[i]);
    }
    std::vector<Vector> pts;
    for (int g = 0; g < points_per_site && pts.size() == size_t(g); ++g) {
      std::vector<double> c = center;
      if (g > 0) {
        for (int i = 0; i < dim; ++i) c[i] += (2 * unit() - 1) * spread;
      }
      if (in_box(c)) pts.push_back(Vector(c));
    }
    if (int(pts.size()) != points_per_site) continue;
    bool ok = true;
    for (const auto& other : sites) {
      for (const Vector& p : pts) {
        if (DistPointToPoints(p, other, norm) < sep) ok = false;
      }
    }
    if (ok) sites.push_back(std::move(pts));
  }
  return sites;
}

BenchResult RunBench(const RunConfig& config) {
  const BenchSpec& spec = config.bench;
  BenchResult result;
  result.speedup_workers = spec.speedup_workers;
  result.hardware_threads = std::thread::hardware_concurrency();

  auto time_once = [&](const std::vector<std::vector<Vector>>& pts,
                       int workers) {
    RunConfig c = config;
    c.sites = pts;
    c.workers = workers;
    c.iteration.ray_count = spec.ray_count;
    c.iteration.adaptive_depth = 0;
    c.iteration.max_iters = 1;
    c.iteration.gap_tol = 1e-9;
    c.iteration.accelerated = false;
    c.iteration.monotonicity_resolution = 0;
    Problem prob = c.MakeProblem();
    // Best of a few repetitions, at least ~0.2 s of total work.
    double best = 1e300, total = 0;
    for (int rep = 0; rep < 7 && (rep < 2 || total < 0.2); ++rep) {
      IterationTrace t = Iterate(prob);
      best = std::min(best, t.seconds.at(1));
      total += t.seconds.at(1);
    }
    return best;
  };

  std::vector<std::vector<Vector>> largest;
  for (size_t i = 0; i < spec.site_counts.size(); ++i) {
    const int K = spec.site_counts[i];
    auto pts = RandomSites(K, spec.points_per_site, config.box, config.norm,
                           config.seed + i);
    result.site_counts.push_back(K);
    result.sizes.push_back(double(spec.points_per_site) * K * spec.ray_count);
    result.seconds.push_back(time_once(pts, 1));
    if (i + 1 == spec.site_counts.size()) largest = std::move(pts);
  }
  result.exponent = FitSlope(result.sizes, result.seconds);
  const double parallel = time_once(largest, spec.speedup_workers);
  result.speedup = result.seconds.back() / parallel;
  return result;
}

RunReport Run(const RunConfig& config) {
  RunReport report;
  report.mode = config.mode;
  report.norm = config.norm.Name();
  report.dim = config.box.dim();
  report.diameter = config.box.diameter();
  report.K = int(config.sites.size());
  switch (config.mode) {
    case Mode::kZone:
      RunZone(config, report);
      break;
    case Mode::kVoronoi:
      RunVoronoi(config, report);
      break;
    case Mode::kOracleCompare:
      RunOracleCompare(config, report);
      break;
    case Mode::kBench: {
      BenchResult b = RunBench(config);
      report.K = b.site_counts.back();
      report.invariants.push_back(
          {"bench_exponent", b.exponent >= 1.7 && b.exponent <= 2.3, false,
           "fitted exponent " + Fmt(b.exponent)});
      report.invariants.push_back(
          {"bench_speedup", b.speedup >= 3, false,
           "speedup " + Fmt(b.speedup) + " on " +
               std::to_string(b.speedup_workers) + " workers, " +
               std::to_string(b.hardware_threads) + " hardware threads"});
      report.bench = std::move(b);
      break;
    }
  }
  if (!config.output.report.empty()) {
    WriteFile(config.output.report, report.ToJson());
  }
  return report;
}

}  // namespace zonelab
