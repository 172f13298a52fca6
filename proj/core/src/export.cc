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

#include "zonelab/export.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace zonelab {

namespace {

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string Num(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

bool IsOuter(const DiagramTuple& t) {
  return t.label.kind == TupleLabel::Kind::kOuter ||
         t.label.kind == TupleLabel::Kind::kGreatest;
}

}  // namespace

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

std::string FormatSvg(const std::vector<DiagramTuple>& tuples,
                      const std::vector<Site>& sites, const Box& box,
                      SvgStyle style) {
  if (tuples.empty()) throw Error(ErrorCode::kDomain, "no tuples to draw");
  if (box.dim() != 2) throw Error(ErrorCode::kDimension, "SVG export is planar");
  const double width = 800;
  const double sx = width / (box.hi()[0] - box.lo()[0]);
  const double height = sx * (box.hi()[1] - box.lo()[1]);
  auto X = [&](double x) { return Fixed((x - box.lo()[0]) * sx); };
  auto Y = [&](double y) { return Fixed((box.hi()[1] - y) * sx); };
  const double dot = std::max(0.6, width / 1000);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << Fixed(width) << "\" height=\"" << Fixed(height) << "\" viewBox=\"0 0 "
     << Fixed(width) << ' ' << Fixed(height) << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << Fixed(width) << "\" height=\""
     << Fixed(height) << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const DiagramTuple& t : tuples) {
    const bool outer = IsOuter(t);
    os << "<g id=\"" << t.label.ToString() << "\" opacity=\""
       << (outer ? "0.35" : "1") << "\">\n";
    for (size_t k = 0; k < t.regions.size(); ++k) {
      const char* color = kPalette[k % kPaletteSize];
      os << "<g fill=\"" << color << "\" stroke=\"" << color
         << "\" stroke-width=\"0.5\">\n";
      for (const Ray& r : t.regions[k].rays) {
        if (r.t_end <= 0) continue;
        Vector e = r.endpoint();
        if (style == SvgStyle::kRays) {
          os << "<line x1=\"" << X(r.source[0]) << "\" y1=\"" << Y(r.source[1])
             << "\" x2=\"" << X(e[0]) << "\" y2=\"" << Y(e[1]) << "\"/>\n";
        } else {
          os << "<circle cx=\"" << X(e[0]) << "\" cy=\"" << Y(e[1])
             << "\" r=\"" << Fixed(dot) << "\" stroke=\"none\"/>\n";
        }
      }
      os << "</g>\n";
    }
    os << "</g>\n";
  }
  os << "<g id=\"sites\" stroke=\"black\">\n";
  for (size_t k = 0; k < sites.size(); ++k) {
    for (const Vector& p : sites[k].points) {
      os << "<circle cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1]) << "\" r=\""
         << Fixed(4 * dot) << "\" fill=\"" << kPalette[k % kPaletteSize]
         << "\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void ExportSvg(const std::vector<DiagramTuple>& tuples,
               const std::vector<Site>& sites, const Box& box,
               const std::string& path, SvgStyle style) {
  WriteFile(path, FormatSvg(tuples, sites, box, style));
}

std::string FormatCsv(const DiagramTuple& tuple) {
  int dim = 0;
  for (const auto& r : tuple.regions) dim = std::max(dim, r.dim());
  if (dim == 0) throw Error(ErrorCode::kDomain, "tuple has no rays");
  auto axis = [dim](int c) -> std::string {
    if (dim <= 3) return std::string(1, "xyz"[c]);
    return std::to_string(c);
  };
  std::ostringstream os;
  os << "component_id";
  for (int c = 0; c < dim; ++c) os << ",source_" << axis(c);
  for (int c = 0; c < dim; ++c) os << ",dir_" << axis(c);
  os << ",t_end\r\n";
  for (size_t k = 0; k < tuple.regions.size(); ++k) {
    for (const Ray& r : tuple.regions[k].rays) {
      os << k;
      for (int c = 0; c < dim; ++c) os << ',' << Num(r.source[c], 12);
      for (int c = 0; c < dim; ++c) os << ',' << Num(r.dir[c], 12);
      os << ',' << Num(r.t_end, 12) << "\r\n";
    }
  }
  return os.str();
}

void ExportCsv(const DiagramTuple& tuple, const std::string& path) {
  WriteFile(path, FormatCsv(tuple));
}

std::vector<CsvRow> ParseCsv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  int dim = -1;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (dim < 0) {
      if (fields.empty() || fields[0] != "component_id" || fields.size() % 2) {
        throw Error(ErrorCode::kParse, "bad CSV header");
      }
      dim = int(fields.size() - 2) / 2;
      continue;
    }
    if (int(fields.size()) != 2 + 2 * dim) {
      throw Error(ErrorCode::kParse,
                  "CSV line " + std::to_string(line_no) + ": wrong field count");
    }
    try {
      CsvRow row;
      row.component = std::stoi(fields[0]);
      for (int c = 0; c < dim; ++c) row.source.push_back(std::stod(fields[1 + c]));
      for (int c = 0; c < dim; ++c) row.dir.push_back(std::stod(fields[1 + dim + c]));
      row.t_end = std::stod(fields[1 + 2 * dim]);
      rows.push_back(std::move(row));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParse,
                  "CSV line " + std::to_string(line_no) + ": bad number");
    }
  }
  return rows;
}

std::vector<CsvRow> ReadCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCsv(ss.str());
}

}  // namespace zonelab
