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

// zonelab <mode> --config <file> [--svg out.svg] [--csv out.csv]
//         [--report out.json] [--workers N]

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "zonelab/config.h"
#include "zonelab/run.h"

int main(int argc, char** argv) {
  CLI::App app{"Zone diagrams and double zone diagrams under general norms"};
  std::string mode, config_path, svg, csv, report_path, workers;
  app.add_option("mode", mode, "voronoi | zone | oracle-compare | bench")
      ->required()
      ->check(CLI::IsMember({"voronoi", "zone", "oracle-compare", "bench"}));
  app.add_option("--config", config_path, "JSON configuration file")
      ->required();
  app.add_option("--svg", svg, "SVG figure output");
  app.add_option("--csv", csv, "CSV endpoint table output");
  app.add_option("--report", report_path, "JSON run report output");
  app.add_option("--workers", workers, "worker threads, or \"auto\"");
  CLI11_PARSE(app, argc, argv);

  try {
    zonelab::RunConfig config =
        zonelab::LoadConfig(config_path, zonelab::ParseMode(mode));
    if (!svg.empty()) config.output.svg = svg;
    if (!csv.empty()) config.output.csv = csv;
    if (!report_path.empty()) config.output.report = report_path;
    if (workers == "auto") {
      config.workers = 0;
    } else if (!workers.empty()) {
      config.workers = std::stoi(workers);
      if (config.workers < 1) throw std::invalid_argument(workers);
    }
    zonelab::RunReport report = zonelab::Run(config);
    for (const auto& inv : report.invariants) {
      std::cerr << (inv.passed ? "ok   " : (inv.hard ? "FAIL " : "warn "))
                << inv.name << ": " << inv.detail << "\n";
    }
    if (report_path.empty() && config.output.report.empty()) {
      std::cout << report.ToJson();
    }
    return report.exit_code();
  } catch (const zonelab::Error& e) {
    std::cerr << "zonelab: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error&) {
    std::cerr << "zonelab: --workers expects a positive integer or \"auto\"\n";
    return 2;
  }
}
