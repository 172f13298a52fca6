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

#ifndef ZONELAB_NORM_H_
#define ZONELAB_NORM_H_

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "zonelab/vector.h"

namespace zonelab {

// The norm used for every distance in a problem instance.
//
//   kLp       ||x||_p, 1 <= p <= inf (p = inf is the max norm)
//   kStrange  delta*sqrt(alpha^2 x1^2 + x2^2) + (1 - delta*alpha)|x1|
//             + (1 - delta)|x2| on R^2. Strictly convex, not smooth, and
//             admits two distinct zone diagrams for two vertically aligned
//             point sites.
class NormSpec {
 public:
  enum class Kind { kLp, kStrange };

  static NormSpec Lp(double p);
  static NormSpec L1() { return Lp(1); }
  static NormSpec L2() { return Lp(2); }
  static NormSpec Linf() { return Lp(std::numeric_limits<double>::infinity()); }
  static NormSpec Strange(double alpha = 0.1, double delta = 0.1);

  // Accepts "l1", "l2", "linf", "lp:<p>", "strange", "strange:<a>:<d>".
  static NormSpec Parse(std::string_view name);
  // Inverse of Parse (round-trips exactly for the forms above).
  std::string Name() const;

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  double alpha() const { return alpha_; }
  double delta() const { return delta_; }

  // Strictly convex norms are inside the convergence guarantees.
  bool strictly_convex() const {
    return kind_ == Kind::kStrange || (p_ > 1 && std::isfinite(p_));
  }

  // c with c*|v|_2 <= ||v|| for all v in R^dim. Used to prune spatial
  // searches, so it must never overestimate.
  double EuclideanLowerBound(int dim) const;

  // Rejects dimensions the norm is not defined on.
  void CheckDim(int dim) const;

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

 private:
  Kind kind_ = Kind::kLp;
  double p_ = 2;
  double alpha_ = 0;
  double delta_ = 0;
};

namespace norms {

// Concrete norm functors. `Visit` hands one of these to a generic lambda so
// hot loops are instantiated per norm instead of branching per call.
struct L1 {
  double operator()(const double* v, int d) const {
    double s = 0;
    for (int i = 0; i < d; ++i) s += std::abs(v[i]);
    return s;
  }
};

struct L2 {
  double operator()(const double* v, int d) const {
    double s = 0;
    for (int i = 0; i < d; ++i) s += v[i] * v[i];
    return std::sqrt(s);
  }
};

struct Linf {
  double operator()(const double* v, int d) const {
    double s = 0;
    for (int i = 0; i < d; ++i) s = std::max(s, std::abs(v[i]));
    return s;
  }
};

struct Lp {
  double p;
  double operator()(const double* v, int d) const {
    // Scale by the max coordinate so pow() cannot overflow or underflow.
    double m = Linf{}(v, d);
    if (m == 0) return 0;
    double s = 0;
    for (int i = 0; i < d; ++i) s += std::pow(std::abs(v[i]) / m, p);
    return m * std::pow(s, 1.0 / p);
  }
};

struct Strange {
  double alpha;
  double delta;
  double operator()(const double* v, int /*d*/) const {
    double a = std::abs(v[0]);
    double b = std::abs(v[1]);
    return delta * std::hypot(alpha * a, b) + (1 - delta * alpha) * a +
           (1 - delta) * b;
  }
};

}  // namespace norms

template <class F>
decltype(auto) Visit(const NormSpec& n, F&& f) {
  if (n.kind() == NormSpec::Kind::kStrange) {
    return f(norms::Strange{n.alpha(), n.delta()});
  }
  if (n.p() == 1) return f(norms::L1{});
  if (n.p() == 2) return f(norms::L2{});
  if (std::isinf(n.p())) return f(norms::Linf{});
  return f(norms::Lp{n.p()});
}

// ||v|| under `n`.
double NormEval(const NormSpec& n, const Vector& v);

// ||a - b|| under `n`.
double Distance(const NormSpec& n, const Vector& a, const Vector& b);

}  // namespace zonelab

#endif  // ZONELAB_NORM_H_
