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

#include "zonelab/oracle.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>

#include "zonelab/parallel.h"

namespace zonelab {

GridSpec::GridSpec(Box box, int resolution) : box_(std::move(box)), res_(resolution) {
  if (box_.dim() != 2) {
    throw Error(ErrorCode::kDimension, "grids are planar");
  }
  if (resolution < 32) {
    throw Error(ErrorCode::kParameter, "grid resolution must be >= 32");
  }
  hx_ = (box_.hi()[0] - box_.lo()[0]) / res_;
  hy_ = (box_.hi()[1] - box_.lo()[1]) / res_;
}

size_t GridSpec::CellOf(const double* p) const {
  int i = std::clamp(int(std::floor((p[0] - box_.lo()[0]) / hx_)), 0, res_ - 1);
  int j = std::clamp(int(std::floor((p[1] - box_.lo()[1]) / hy_)), 0, res_ - 1);
  return size_t(j) * res_ + i;
}

MembershipGrid::MembershipGrid(GridSpec spec)
    : spec_(std::move(spec)), labels_(spec_.cells(), 0) {}

int MembershipGrid::LabelCount(size_t cell) const {
  return std::popcount(labels_[cell]);
}

size_t MembershipGrid::Count(int k) const {
  size_t n = 0;
  for (uint64_t l : labels_) n += (l >> k) & 1u;
  return n;
}

PointCloud MembershipGrid::Centers(int k) const {
  PointCloud c(2);
  for (size_t cell = 0; cell < labels_.size(); ++cell) {
    if (Has(cell, k)) c.Add(spec_.center(cell));
  }
  return c;
}

void MembershipGrid::WritePgm(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path);
  const int res = spec_.resolution();
  int max_count = 1;
  for (size_t c = 0; c < labels_.size(); ++c) {
    max_count = std::max(max_count, LabelCount(c));
  }
  out << "P5\n" << res << ' ' << res << "\n255\n";
  std::vector<char> row(res);
  for (int j = res - 1; j >= 0; --j) {
    for (int i = 0; i < res; ++i) {
      row[i] = char(LabelCount(size_t(j) * res + i) * 255 / max_count);
    }
    out.write(row.data(), res);
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

MembershipGrid GridDom(const PointCloud& site, const PointCloud& others,
                       const GridSpec& spec, const NormSpec& norm, int label,
                       int workers) {
  if (site.empty() || others.empty()) {
    throw Error(ErrorCode::kDomain, "grid dom needs nonempty clouds");
  }
  if (label < 0 || label >= kMaxGridLabels) {
    throw Error(ErrorCode::kParameter, "label out of range");
  }
  NearestIndex near_site(site, norm);
  NearestIndex near_others(others, norm);
  MembershipGrid grid(spec);
  const int res = spec.resolution();
  std::vector<uint8_t> in(spec.cells(), 0);
  ParallelFor(size_t(res), workers, [&](size_t j) {
    for (int i = 0; i < res; ++i) {
      Vector x = spec.center(i, int(j));
      double dp = near_site.Nearest(x.data());
      in[j * res + i] = !near_others.AnyCloserThan(x.data(), dp);
    }
  });
  for (size_t c = 0; c < in.size(); ++c) {
    if (in[c]) grid.Set(c, label);
  }
  return grid;
}

namespace {

void CheckTuple(const Problem& prob, const std::vector<MembershipGrid>& tuple) {
  if (prob.K() < 2) throw Error(ErrorCode::kDomain, "need K >= 2");
  if (int(tuple.size()) != prob.K()) {
    throw Error(ErrorCode::kDomain, "grid tuple has wrong length");
  }
  for (const auto& g : tuple) {
    if (!(g.spec() == tuple.front().spec())) {
      throw Error(ErrorCode::kDomain, "grid tuple specs differ");
    }
  }
  if (prob.K() > kMaxGridLabels) {
    throw Error(ErrorCode::kParameter, "too many components for a grid");
  }
}

}  // namespace

std::vector<MembershipGrid> GridDomMap(const Problem& prob,
                                       const std::vector<MembershipGrid>& tuple) {
  if (tuple.size() < 2) {
    throw Error(ErrorCode::kDomain, "grid Dom needs at least two components");
  }
  CheckTuple(prob, tuple);
  const int K = prob.K();
  std::vector<PointCloud> clouds;
  for (int j = 0; j < K; ++j) {
    PointCloud c = prob.site(j).cloud();
    c.Append(tuple[j].Centers(j));
    clouds.push_back(std::move(c));
  }
  std::vector<MembershipGrid> out;
  for (int k = 0; k < K; ++k) {
    PointCloud others(2);
    for (int j = 0; j < K; ++j) {
      if (j != k) others.Append(clouds[j]);
    }
    out.push_back(GridDom(prob.site(k).cloud(), others, tuple.front().spec(),
                          prob.norm(), k, prob.params().workers));
  }
  return out;
}

std::vector<MembershipGrid> GridSitesTuple(const Problem& prob,
                                           const GridSpec& spec) {
  std::vector<MembershipGrid> tuple;
  for (int k = 0; k < prob.K(); ++k) {
    MembershipGrid g(spec);
    for (const auto& p : prob.site(k).points) g.Set(spec.CellOf(p.data()), k);
    tuple.push_back(std::move(g));
  }
  return tuple;
}

GridTrace GridIterate(const Problem& prob, const GridSpec& spec, int n_max) {
  GridTrace trace;
  trace.inner.push_back(GridSitesTuple(prob, spec));
  trace.outer.push_back(GridDomMap(prob, trace.inner.back()));
  for (int n = 1; n <= n_max; ++n) {
    trace.inner.push_back(GridDomMap(prob, trace.outer.back()));
    trace.outer.push_back(GridDomMap(prob, trace.inner.back()));
  }
  return trace;
}

double Hausdorff(const PointCloud& a, const PointCloud& b,
                 const NormSpec& norm) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kDomain, "Hausdorff distance of an empty cloud");
  }
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimension, "cloud dims differ");
  norm.CheckDim(a.dim());
  return Visit(norm, [&](const auto& f) {
    const int d = a.dim();
    auto directed = [&](const PointCloud& from, const PointCloud& to) {
      double worst = 0;
      double diff[kMaxDim];
      for (size_t i = 0; i < from.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < to.size(); ++j) {
          for (int c = 0; c < d; ++c) diff[c] = from.at(i)[c] - to.at(j)[c];
          best = std::min(best, f(diff, d));
        }
        worst = std::max(worst, best);
      }
      return worst;
    };
    return std::max(directed(a, b), directed(b, a));
  });
}

double SymdiffFraction(const MembershipGrid& a, int ka, const MembershipGrid& b,
                       int kb) {
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorCode::kDomain, "grid specs differ");
  }
  size_t diff = 0;
  for (size_t c = 0; c < a.spec().cells(); ++c) {
    diff += a.Has(c, ka) != b.Has(c, kb);
  }
  return double(diff) / a.spec().cells();
}

double SymdiffFraction(const MembershipGrid& a, const MembershipGrid& b,
                       int k) {
  return SymdiffFraction(a, k, b, k);
}

BisectorReport BoundaryBisectorCheck(const PointCloud& site,
                                     const PointCloud& others,
                                     const GridSpec& spec, const NormSpec& norm,
                                     int workers) {
  NearestIndex near_site(site, norm);
  NearestIndex near_others(others, norm);
  const int res = spec.resolution();
  const double tau = 1e-9 * spec.box().diameter();
  auto f = [&](double x, double y) {
    double p[2] = {x, y};
    return near_site.Nearest(p) - near_others.Nearest(p);
  };
  // Signed gap at centers and at cell corners.
  std::vector<double> center(spec.cells());
  std::vector<double> corner(size_t(res + 1) * (res + 1));
  const double x0 = spec.box().lo()[0], y0 = spec.box().lo()[1];
  const double hx = spec.cell_width(), hy = spec.cell_height();
  ParallelFor(size_t(res + 1), workers, [&](size_t j) {
    for (int i = 0; i <= res; ++i) {
      corner[j * (res + 1) + i] = f(x0 + i * hx, y0 + j * hy);
      if (int(j) < res && i < res) {
        center[j * res + i] = f(x0 + (i + 0.5) * hx, y0 + (j + 0.5) * hy);
      }
    }
  });

  BisectorReport r;
  std::vector<uint8_t> eq(spec.cells(), 0), on_bisector(spec.cells(), 0);
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      size_t c = size_t(j) * res + i;
      double v = center[c];
      if (v < -tau) {
        ++r.strict_in;
      } else if (v > tau) {
        ++r.strict_out;
      } else {
        ++r.equality;
        eq[c] = 1;
      }
      double lo = v, hi = v;
      for (int dj = 0; dj <= 1; ++dj) {
        for (int di = 0; di <= 1; ++di) {
          double w = corner[size_t(j + dj) * (res + 1) + i + di];
          lo = std::min(lo, w);
          hi = std::max(hi, w);
        }
      }
      on_bisector[c] = lo <= tau && hi >= -tau;
    }
  }
  r.equality_band_fraction = double(r.equality) / spec.cells();

  auto in_dom = [&](int i, int j) { return center[size_t(j) * res + i] <= 0; };
  auto near_bisector = [&](int i, int j) {
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        int a = i + di, b = j + dj;
        if (a < 0 || b < 0 || a >= res || b >= res) continue;
        if (on_bisector[size_t(b) * res + a]) return true;
      }
    }
    return false;
  };
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      size_t c = size_t(j) * res + i;
      if (in_dom(i, j)) {
        bool boundary = (i > 0 && !in_dom(i - 1, j)) ||
                        (i + 1 < res && !in_dom(i + 1, j)) ||
                        (j > 0 && !in_dom(i, j - 1)) ||
                        (j + 1 < res && !in_dom(i, j + 1));
        if (boundary) {
          ++r.boundary_cells;
          if (!near_bisector(i, j)) ++r.boundary_cells_off_bisector;
        }
      }
      if (eq[c] && i > 0 && j > 0 && i + 1 < res && j + 1 < res) {
        bool deep = true;
        for (int dj = -1; dj <= 1 && deep; ++dj) {
          for (int di = -1; di <= 1 && deep; ++di) {
            deep = eq[size_t(j + dj) * res + i + di];
          }
        }
        r.deep_equality_cells += deep;
      }
    }
  }
  r.pass = r.boundary_cells_off_bisector == 0 && r.deep_equality_cells == 0;
  return r;
}

}  // namespace zonelab
