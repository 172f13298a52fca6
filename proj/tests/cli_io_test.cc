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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include "json.hpp"
#include "zonelab/config.h"
#include "zonelab/diagram.h"
#include "zonelab/error.h"
#include "zonelab/export.h"
#include "zonelab/run.h"

namespace zonelab {
namespace {

namespace fs = std::filesystem;

constexpr const char* kMinimal = R"({
  "mode": "zone",
  "box": {"lo": [-5, -5], "hi": [5, 5]},
  "sites": [[[-1, 0]], [[1, 0]]]
})";

ErrorCode CodeOf(auto&& f, std::string* what = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (what) *what = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

fs::path TempDir() {
  fs::path d = fs::temp_directory_path() /
               ("zonelab_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ConfigTest, MinimalDocumentTakesDefaults) {
  RunConfig c = ParseConfig(kMinimal);
  EXPECT_EQ(c.mode, Mode::kZone);
  EXPECT_EQ(c.norm, NormSpec::L2());
  EXPECT_EQ(c.sites.size(), 2u);
  EXPECT_EQ(c.iteration.ray_count, 720);
  EXPECT_EQ(c.iteration.samples_per_ray, 4);
  EXPECT_EQ(c.iteration.max_iters, 8);
  EXPECT_DOUBLE_EQ(c.iteration.gap_tol, 0.01);
  EXPECT_EQ(c.workers, 1);
  EXPECT_EQ(c.oracle_resolution, 256);
  EXPECT_EQ(ParseConfig(kMinimal, Mode::kVoronoi).mode, Mode::kVoronoi);
}

TEST(ConfigTest, FullDocument) {
  RunConfig c = ParseConfig(R"({
    "mode": "oracle-compare", "norm": "lp:3",
    "box": {"lo": [-2, -1], "hi": [2, 1]},
    "sites": [[[-1, 0], [-1, 0.5]], [[1, 0]]],
    "iteration": {"ray_count": 90, "max_iters": 3, "gap_tol": 0.05},
    "seed": 7, "workers": "auto", "oracle_resolution": 128,
    "svg_style": "rays",
    "output": {"svg": "a.svg", "csv": "a.csv", "report": "a.json"},
    "bench": {"site_counts": [2, 3], "ray_count": 16}
  })");
  EXPECT_EQ(c.mode, Mode::kOracleCompare);
  EXPECT_EQ(c.norm, NormSpec::Lp(3));
  EXPECT_EQ(c.sites[0].size(), 2u);
  EXPECT_EQ(c.iteration.ray_count, 90);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.workers, 0);
  EXPECT_EQ(c.svg_style, SvgStyle::kRays);
  EXPECT_EQ(c.output.report, "a.json");
  EXPECT_EQ(c.bench.site_counts, (std::vector<int>{2, 3}));
}

TEST(ConfigTest, Errors) {
  std::string what;
  auto parse = [](std::string text) { return [text] { ParseConfig(text); }; };
  EXPECT_EQ(CodeOf(parse(R"({"mode": "zone", "norm": "lp:0.5",
      "box": {"lo": [-5, -5], "hi": [5, 5]}, "sites": [[[-1, 0]], [[1, 0]]]})")),
            ErrorCode::kParameter);
  EXPECT_EQ(CodeOf(parse(R"({"mode": "zone",
      "box": {"lo": [-5, -5], "hi": [5, 5]}, "sites": [[[1, 0]], [[1, 0]]]})")),
            ErrorCode::kNotSeparated);
  EXPECT_EQ(CodeOf(parse(R"({"mode": "zone",
      "box": {"lo": [-5, -5], "hi": [5, 5]}, "sites": [[[-1, 0]], [[1, 0]]],
      "iteration": {"rays": 10}})"), &what),
            ErrorCode::kParse);
  EXPECT_NE(what.find("iteration.rays"), std::string::npos) << what;
  EXPECT_EQ(CodeOf(parse(R"({"mode": "zone",
      "box": {"lo": [-5, -5], "hi": [5, 5]}, "sites": [[[-1, 0]], [[1, 0]]],
      "iteration": {"ray_count": "many"}})"), &what),
            ErrorCode::kParse);
  EXPECT_NE(what.find("iteration.ray_count"), std::string::npos) << what;
  EXPECT_EQ(CodeOf(parse("{not json")), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(parse(R"({"mode": "zone", "sites": []})")), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { LoadConfig("/nonexistent/zonelab.json"); }),
            ErrorCode::kIo);
}

DiagramTuple TwoRays() {
  RegionRays a, b;
  a.rays.push_back({0, Vector{-1, 0}, Vector{1, 0}, 1});
  a.rays.push_back({0, Vector{-1, 0}, Vector{-1, 0}, 4});
  b.rays.push_back({0, Vector{1, 0}, Vector{-1, 0}, 1});
  b.rays.push_back({0, Vector{1, 0}, Vector{1, 0}, 4});
  return DiagramTuple::FromRegions({a, b}, 1, {TupleLabel::Kind::kLeast, 0});
}

TEST(CsvTest, FormatAndRoundTrip) {
  const std::string text = FormatCsv(TwoRays());
  EXPECT_EQ(text.substr(0, text.find('\n') + 1),
            "component_id,source_x,source_y,dir_x,dir_y,t_end\r\n");
  std::vector<CsvRow> rows = ParseCsv(text);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2].component, 1);
  EXPECT_EQ(rows[2].source, (std::vector<double>{1, 0}));
  EXPECT_EQ(rows[3].t_end, 4);
  EXPECT_EQ(CodeOf([] { ParseCsv("component_id,a,b\r\n0,1\r\n"); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseCsv("x,y\r\n"); }), ErrorCode::kParse);
}

// Mirror-symmetric sites under l2 give mirrored endpoint tables.
TEST(CsvTest, SymmetricVoronoiIsMirrored) {
  Problem p = Problem::Create({Site{0, {Vector{-1, 0}}}, Site{1, {Vector{1, 0}}}},
                              Box::Square(5), NormSpec::L2());
  p.mutable_params().ray_count = 64;
  p.mutable_params().adaptive_depth = 0;
  std::vector<CsvRow> rows = ParseCsv(FormatCsv(Voronoi(p)));
  std::vector<CsvRow> first, second;
  for (const CsvRow& r : rows) (r.component == 0 ? first : second).push_back(r);
  ASSERT_EQ(first.size(), second.size());
  for (const CsvRow& r : first) {
    bool found = false;
    for (const CsvRow& s : second) {
      if (std::abs(s.dir[0] + r.dir[0]) < 1e-9 && std::abs(s.dir[1] - r.dir[1]) < 1e-9) {
        EXPECT_NEAR(s.t_end, r.t_end, 1e-5);
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(SvgTest, DeterministicAndValidated) {
  std::vector<Site> sites = {Site{0, {Vector{-1, 0}}}, Site{1, {Vector{1, 0}}}};
  const std::string a = FormatSvg({TwoRays()}, sites, Box::Square(5), SvgStyle::kRays);
  EXPECT_EQ(a, FormatSvg({TwoRays()}, sites, Box::Square(5), SvgStyle::kRays));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("<line"), std::string::npos);
  EXPECT_EQ(CodeOf([&] { FormatSvg({}, sites, Box::Square(5), SvgStyle::kRays); }),
            ErrorCode::kDomain);
  EXPECT_EQ(CodeOf([&] {
              ExportSvg({TwoRays()}, sites, Box::Square(5),
                        "/nonexistent/dir/out.svg", SvgStyle::kEndpoints);
            }),
            ErrorCode::kIo);
}

TEST(RunTest, ZoneModeWritesOutputsAndReport) {
  fs::path dir = TempDir();
  RunConfig c = ParseConfig(kMinimal);
  c.iteration.ray_count = 180;
  c.oracle_resolution = 128;
  c.output = {(dir / "z.svg").string(), (dir / "z.csv").string(),
              (dir / "z.json").string()};
  RunReport r = zonelab::Run(c);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.residual_first.size(), 2u);
  EXPECT_TRUE(fs::exists(dir / "z.svg"));
  EXPECT_FALSE(ReadCsv((dir / "z.csv").string()).empty());
  EXPECT_FALSE(ReadCsv((dir / "z_outer.csv").string()).empty());
  nlohmann::json j = nlohmann::json::parse(Slurp(dir / "z.json"));
  EXPECT_EQ(j["mode"], "zone");
  EXPECT_EQ(j["K"], 2);
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_TRUE(j.contains("zone"));
  EXPECT_TRUE(j["invariants"].is_array());
  fs::remove_all(dir);
}

TEST(RunTest, OracleCompareReportsSymdiff) {
  RunConfig c = ParseConfig(kMinimal, Mode::kOracleCompare);
  c.iteration.ray_count = 360;
  c.iteration.max_iters = 2;
  c.oracle_resolution = 128;
  RunReport r = zonelab::Run(c);
  ASSERT_EQ(r.symdiff.size(), 2u);
  for (double s : r.symdiff) EXPECT_LT(s, 0.02);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(RunTest, BenchReportFields) {
  RunConfig c;
  c.mode = Mode::kBench;
  c.bench.site_counts = {2, 3};
  c.bench.ray_count = 8;
  c.bench.speedup_workers = 2;
  RunReport r = zonelab::Run(c);
  ASSERT_TRUE(r.bench.has_value());
  EXPECT_EQ(r.bench->seconds.size(), 2u);
  EXPECT_GT(r.bench->seconds[0], 0);
  EXPECT_GT(r.bench->speedup, 0);
  // Bench criteria are soft: never a nonzero exit.
  EXPECT_EQ(r.exit_code(), 0);
  nlohmann::json j = nlohmann::json::parse(r.ToJson());
  EXPECT_TRUE(j["bench"].contains("exponent"));
}

TEST(RandomSitesTest, DeterministicAndSeparated) {
  auto a = RandomSites(5, 3, Box::Square(5), NormSpec::L2(), 42);
  EXPECT_EQ(a, RandomSites(5, 3, Box::Square(5), NormSpec::L2(), 42));
  EXPECT_NE(a, RandomSites(5, 3, Box::Square(5), NormSpec::L2(), 43));
  std::vector<Site> s;
  for (size_t k = 0; k < a.size(); ++k) s.push_back(Site{int(k), a[k]});
  Problem p = Problem::Create(s, Box::Square(5), NormSpec::L2());
  EXPECT_GE(p.min_separation(), p.diameter() / (4 * std::sqrt(5.0)) * 0.79);
}

}  // namespace
}  // namespace zonelab
