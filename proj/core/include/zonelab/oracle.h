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

// Brute-force grid reference for planar problems. Cells are classified at
// their centers with an exact d(x,P) <= d(x,A) comparison; there is no
// tolerance anywhere, so the only error is the cell size itself. One cell
// diagonal is the slack unit used by the property tests.

#ifndef ZONELAB_ORACLE_H_
#define ZONELAB_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "zonelab/problem.h"

namespace zonelab {

class GridSpec {
 public:
  // Planar boxes only; resolution >= 32 cells per axis.
  GridSpec(Box box, int resolution);

  const Box& box() const { return box_; }
  int resolution() const { return res_; }
  size_t cells() const { return size_t(res_) * res_; }
  double cell_width() const { return hx_; }
  double cell_height() const { return hy_; }
  double cell_diagonal() const { return std::hypot(hx_, hy_); }
  double cell_area() const { return hx_ * hy_; }

  // Cell (i, j) has flat index j * resolution + i.
  Vector center(int i, int j) const {
    return Vector{box_.lo()[0] + (i + 0.5) * hx_, box_.lo()[1] + (j + 0.5) * hy_};
  }
  Vector center(size_t cell) const { return center(int(cell % res_), int(cell / res_)); }
  // Cell containing p (clamped to the grid).
  size_t CellOf(const double* p) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.res_ == b.res_ && a.box_.lo() == b.box_.lo() &&
           a.box_.hi() == b.box_.hi();
  }

 private:
  Box box_;
  int res_;
  double hx_, hy_;
};

// Per-cell set of component labels (bit k set = center lies in region k).
class MembershipGrid {
 public:
  explicit MembershipGrid(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  bool Has(size_t cell, int k) const { return (labels_[cell] >> k) & 1u; }
  void Set(size_t cell, int k) { labels_[cell] |= uint64_t{1} << k; }
  uint64_t labels(size_t cell) const { return labels_[cell]; }
  int LabelCount(size_t cell) const;

  size_t Count(int k) const;
  double Fraction(int k) const { return double(Count(k)) / spec_.cells(); }

  // Centers of all cells labeled k.
  PointCloud Centers(int k) const;

  // Writes a binary PGM (P5), one byte per cell holding the label count,
  // scaled to 0..255. Row 0 of the image is the top of the box.
  void WritePgm(const std::string& path) const;

 private:
  GridSpec spec_;
  std::vector<uint64_t> labels_;
};

inline constexpr int kMaxGridLabels = 64;

// Labels (with bit `label`) every cell whose center x has d(x,P) <= d(x,A).
MembershipGrid GridDom(const PointCloud& site, const PointCloud& others,
                       const GridSpec& spec, const NormSpec& norm,
                       int label = 0, int workers = 1);

// One application of Dom on grid tuples. Component j enters the union as its
// site points plus the centers of its labeled cells. Output grid k carries
// label k.
std::vector<MembershipGrid> GridDomMap(const Problem& prob,
                                       const std::vector<MembershipGrid>& tuple);

// The site tuple on the grid: component k labels the cells holding P_k.
std::vector<MembershipGrid> GridSitesTuple(const Problem& prob,
                                           const GridSpec& spec);

struct GridTrace {
  std::vector<std::vector<MembershipGrid>> inner;  // I(0)..I(n)
  std::vector<std::vector<MembershipGrid>> outer;  // O(0)..O(n)
};

// I/O iteration carried out entirely on the grid, up to I(n_max), O(n_max).
GridTrace GridIterate(const Problem& prob, const GridSpec& spec, int n_max);

// Exact Hausdorff distance by exhaustive pairwise comparison.
double Hausdorff(const PointCloud& a, const PointCloud& b, const NormSpec& norm);

// |cells labeled k in exactly one of a, b| / cells.
double SymdiffFraction(const MembershipGrid& a, const MembershipGrid& b,
                       int k);
// Same with label ka in a and kb in b.
double SymdiffFraction(const MembershipGrid& a, int ka,
                       const MembershipGrid& b, int kb);

struct BisectorReport {
  bool pass = false;
  size_t strict_in = 0;
  size_t equality = 0;
  size_t strict_out = 0;
  double equality_band_fraction = 0;
  size_t boundary_cells = 0;
  size_t boundary_cells_off_bisector = 0;
  size_t deep_equality_cells = 0;  // equality cells surrounded by equality
};

// Compares the boundary of the rasterized dom(P, A) with the equidistant set
// {d(x,P) = d(x,A)}. Cells are strict-in / equality / strict-out at their
// centers (equality means |d(x,P) - d(x,A)| <= 1e-9 * diameter). PASS iff
// every boundary cell is within one cell of a cell whose closure meets the
// equidistant set, and the equality cells have no interior.
BisectorReport BoundaryBisectorCheck(const PointCloud& site,
                                     const PointCloud& others,
                                     const GridSpec& spec,
                                     const NormSpec& norm, int workers = 1);

}  // namespace zonelab

#endif  // ZONELAB_ORACLE_H_
