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

#ifndef ZONELAB_RASTER_H_
#define ZONELAB_RASTER_H_

#include "zonelab/oracle.h"

namespace zonelab {

// Marks with label `k` every cell whose center lies in the star polygon of
// some source: the fan of triangles (source, e_i, e_{i+1}) over angularly
// adjacent endpoints. Sectors of pi or more (very sparse bundles) fall back
// to linear interpolation of the radius in angle. Cells holding a source are
// always marked.
void RasterizeRegion(const RegionRays& region, int k, MembershipGrid& grid);

// Component k of the tuple goes to label k.
MembershipGrid RasterizeTuple(const DiagramTuple& tuple, const GridSpec& spec);

// Cells of label `k` in `a` that have no cell of label `k` of `b` within one
// cell (8-neighbourhood included), i.e. a minus the one-cell dilation of b.
size_t InclusionViolations(const MembershipGrid& a, const MembershipGrid& b,
                           int k);

}  // namespace zonelab

#endif  // ZONELAB_RASTER_H_
