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

#ifndef ZONELAB_EXPORT_H_
#define ZONELAB_EXPORT_H_

#include <string>
#include <vector>

#include "zonelab/config.h"
#include "zonelab/problem.h"

namespace zonelab {

// SVG 1.1 figure of planar tuples. Sites are filled dots; component k uses
// palette color k. Inner tuples are drawn opaque, outer ones as a translucent
// overlay, so an I(n)/O(n) pair shows the band between them. Output depends
// only on the inputs (fixed number formatting, no timestamps).
std::string FormatSvg(const std::vector<DiagramTuple>& tuples,
                      const std::vector<Site>& sites, const Box& box,
                      SvgStyle style);
void ExportSvg(const std::vector<DiagramTuple>& tuples,
               const std::vector<Site>& sites, const Box& box,
               const std::string& path, SvgStyle style);

// RFC 4180 table, one row per ray:
//   component_id,source_x,source_y,dir_x,dir_y,t_end
// (source_z/dir_z in 3D, source_<i>/dir_<i> above). Numbers carry 12
// significant digits; rows follow (component, source, direction) order.
std::string FormatCsv(const DiagramTuple& tuple);
void ExportCsv(const DiagramTuple& tuple, const std::string& path);

struct CsvRow {
  int component = 0;
  std::vector<double> source;
  std::vector<double> dir;
  double t_end = 0;
};

// Reads a table written by ExportCsv.
std::vector<CsvRow> ParseCsv(const std::string& text);
std::vector<CsvRow> ReadCsv(const std::string& path);

// Writes `text` to `path`, throwing kIo with the path on failure.
void WriteFile(const std::string& path, const std::string& text);

}  // namespace zonelab

#endif  // ZONELAB_EXPORT_H_
