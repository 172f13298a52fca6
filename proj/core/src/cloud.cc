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

#include "zonelab/cloud.h"

#include <algorithm>
#include <limits>

namespace zonelab {

PointCloud::PointCloud(int dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim < 2 || dim > kMaxDim || coords_.size() % dim != 0) {
    throw Error(ErrorCode::kDimension, "flat coordinates do not match dim");
  }
}

PointCloud PointCloud::FromPoints(std::span<const Vector> points) {
  if (points.empty()) return PointCloud();
  PointCloud c(points.front().dim());
  for (const auto& p : points) c.Add(p);
  return c;
}

void PointCloud::Add(const Vector& p) {
  if (dim_ == 0) dim_ = p.dim();
  if (p.dim() != dim_) {
    throw Error(ErrorCode::kDimension, "point dimension differs from cloud");
  }
  Add(p.data());
}

void PointCloud::Add(const double* p) { coords_.insert(coords_.end(), p, p + dim_); }

void PointCloud::Append(const PointCloud& other) {
  if (other.empty()) return;
  if (dim_ == 0) dim_ = other.dim_;
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::kDimension, "cloud dimensions differ");
  }
  coords_.insert(coords_.end(), other.coords_.begin(), other.coords_.end());
}

PointCloud Union(std::span<const PointCloud* const> parts) {
  PointCloud out;
  for (const auto* p : parts) out.Append(*p);
  return out;
}

namespace {

constexpr int kMaxBuckets = 1024;
constexpr int64_t kLeafCount = 12;

}  // namespace

NearestIndex::NearestIndex(const PointCloud& cloud, const NormSpec& norm,
                           bool accelerated)
    : norm_(norm),
      dim_(cloud.dim()),
      n_(cloud.size()),
      accelerated_(accelerated && cloud.dim() == 2 && cloud.size() > kLeafCount),
      lower_bound_(norm.EuclideanLowerBound(std::max(cloud.dim(), 2))) {
  if (cloud.empty()) {
    throw Error(ErrorCode::kDomain, "nearest-point index over an empty cloud");
  }
  norm.CheckDim(dim_);
  if (!accelerated_) {
    coords_ = cloud.coords();
    return;
  }
  double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;
  x0_ = y0_ = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n_; ++i) {
    const double* p = cloud.at(i);
    x0_ = std::min(x0_, p[0]);
    x1 = std::max(x1, p[0]);
    y0_ = std::min(y0_, p[1]);
    y1 = std::max(y1, p[1]);
  }
  double wx = std::max(x1 - x0_, 1e-12);
  double wy = std::max(y1 - y0_, 1e-12);
  // About two points per bucket, buckets roughly square.
  double cell = std::sqrt(wx * wy * 2 / double(n_));
  gx_ = std::clamp(int(std::ceil(wx / cell)), 1, kMaxBuckets);
  gy_ = std::clamp(int(std::ceil(wy / cell)), 1, kMaxBuckets);
  hx_ = wx / gx_;
  hy_ = wy / gy_;

  std::vector<uint32_t> bucket(n_);
  start_.assign(size_t(gx_) * gy_ + 1, 0);
  for (size_t i = 0; i < n_; ++i) {
    const double* p = cloud.at(i);
    int bi = std::min(gx_ - 1, int((p[0] - x0_) / hx_));
    int bj = std::min(gy_ - 1, int((p[1] - y0_) / hy_));
    bucket[i] = uint32_t(bj * gx_ + bi);
    ++start_[bucket[i] + 1];
  }
  for (size_t b = 1; b < start_.size(); ++b) start_[b] += start_[b - 1];
  std::vector<uint32_t> fill(start_.begin(), start_.end() - 1);
  coords_.resize(n_ * 2);
  for (size_t i = 0; i < n_; ++i) {
    uint32_t slot = fill[bucket[i]]++;
    coords_[2 * slot] = cloud.at(i)[0];
    coords_[2 * slot + 1] = cloud.at(i)[1];
  }
  sat_.assign(size_t(gx_ + 1) * (gy_ + 1), 0);
  for (int j = 0; j < gy_; ++j) {
    for (int i = 0; i < gx_; ++i) {
      int64_t c = start_[j * gx_ + i + 1] - start_[j * gx_ + i];
      sat_[(j + 1) * (gx_ + 1) + (i + 1)] = c + sat_[j * (gx_ + 1) + (i + 1)] +
                                            sat_[(j + 1) * (gx_ + 1) + i] -
                                            sat_[j * (gx_ + 1) + i];
    }
  }
}

int64_t NearestIndex::BlockCount(int i0, int i1, int j0, int j1) const {
  const int w = gx_ + 1;
  return sat_[j1 * w + i1] - sat_[j0 * w + i1] - sat_[j1 * w + i0] +
         sat_[j0 * w + i0];
}

template <class Norm, class Visit>
void NearestIndex::Descend(const Norm& norm, const double* x, double& bound,
                           Visit& visit, int i0, int i1, int j0, int j1) const {
  if (bound < 0) return;
  int64_t count = BlockCount(i0, i1, j0, j1);
  if (count == 0) return;
  const double rx0 = x0_ + i0 * hx_, rx1 = x0_ + i1 * hx_;
  const double ry0 = y0_ + j0 * hy_, ry1 = y0_ + j1 * hy_;
  const double dx = std::max({rx0 - x[0], 0.0, x[0] - rx1});
  const double dy = std::max({ry0 - x[1], 0.0, x[1] - ry1});
  // Bucket membership was computed with rounding, so shave a hair off the
  // Euclidean gap before turning it into a norm lower bound.
  double gap = std::hypot(dx, dy) - 1e-9 * (hx_ + hy_);
  if (gap > 0 && gap * lower_bound_ >= bound) return;
  if (count <= kLeafCount || (i1 - i0 == 1 && j1 - j0 == 1)) {
    double diff[2];
    for (int j = j0; j < j1; ++j) {
      for (uint32_t s = start_[j * gx_ + i0]; s < start_[j * gx_ + i1]; ++s) {
        diff[0] = x[0] - coords_[2 * s];
        diff[1] = x[1] - coords_[2 * s + 1];
        if (!visit(norm(diff, 2))) return;
      }
    }
    return;
  }
  // Split the longer side, nearer half first.
  if ((i1 - i0) * hx_ >= (j1 - j0) * hy_ && i1 - i0 > 1) {
    int im = (i0 + i1) / 2;
    bool left_first = x[0] < x0_ + im * hx_;
    if (left_first) {
      Descend(norm, x, bound, visit, i0, im, j0, j1);
      Descend(norm, x, bound, visit, im, i1, j0, j1);
    } else {
      Descend(norm, x, bound, visit, im, i1, j0, j1);
      Descend(norm, x, bound, visit, i0, im, j0, j1);
    }
  } else {
    int jm = (j0 + j1) / 2;
    bool low_first = x[1] < y0_ + jm * hy_;
    if (low_first) {
      Descend(norm, x, bound, visit, i0, i1, j0, jm);
      Descend(norm, x, bound, visit, i0, i1, jm, j1);
    } else {
      Descend(norm, x, bound, visit, i0, i1, jm, j1);
      Descend(norm, x, bound, visit, i0, i1, j0, jm);
    }
  }
}

template <class Norm>
double NearestIndex::NearestImpl(const Norm& norm, const double* x) const {
  double best = std::numeric_limits<double>::infinity();
  if (!accelerated_) {
    double diff[kMaxDim];
    for (size_t s = 0; s < n_; ++s) {
      const double* p = coords_.data() + s * dim_;
      for (int c = 0; c < dim_; ++c) diff[c] = x[c] - p[c];
      best = std::min(best, norm(diff, dim_));
    }
    return best;
  }
  auto visit = [&best](double d) {
    if (d < best) best = d;
    return true;
  };
  Descend(norm, x, best, visit, 0, gx_, 0, gy_);
  return best;
}

template <class Norm>
bool NearestIndex::AnyCloserImpl(const Norm& norm, const double* x,
                                 double r) const {
  if (!accelerated_) return NearestImpl(norm, x) < r;
  bool found = false;
  double bound = r;
  auto visit = [&](double d) {
    if (d < r) {
      found = true;
      bound = -1;  // prunes every remaining block
      return false;
    }
    return true;
  };
  Descend(norm, x, bound, visit, 0, gx_, 0, gy_);
  return found;
}

double NearestIndex::Nearest(const double* x) const {
  return Visit(norm_, [&](const auto& norm) { return NearestImpl(norm, x); });
}

bool NearestIndex::AnyCloserThan(const double* x, double r) const {
  return Visit(norm_,
               [&](const auto& norm) { return AnyCloserImpl(norm, x, r); });
}

}  // namespace zonelab
