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

#include "zonelab/norm.h"

#include <charconv>
#include <sstream>
#include <vector>

namespace zonelab {

NormSpec NormSpec::Lp(double p) {
  if (std::isnan(p) || p < 1) {
    throw Error(ErrorCode::kParameter, "lp norm needs p >= 1");
  }
  NormSpec n;
  n.kind_ = Kind::kLp;
  n.p_ = p;
  return n;
}

NormSpec NormSpec::Strange(double alpha, double delta) {
  if (!(alpha > 0) || !(delta > 0) || !(delta * alpha < 1) || !(delta < 1) ||
      !std::isfinite(alpha)) {
    throw Error(ErrorCode::kParameter,
                "strange norm needs alpha > 0, 0 < delta < 1, delta*alpha < 1");
  }
  NormSpec n;
  n.kind_ = Kind::kStrange;
  n.p_ = 0;
  n.alpha_ = alpha;
  n.delta_ = delta;
  return n;
}

namespace {

double ParseNumber(std::string_view s, std::string_view what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse,
                "bad number '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> SplitColon(std::string_view s) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(':', start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string FormatNumber(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

NormSpec NormSpec::Parse(std::string_view name) {
  auto parts = SplitColon(name);
  const std::string_view head = parts[0];
  if (parts.size() == 1) {
    if (head == "l1") return L1();
    if (head == "l2") return L2();
    if (head == "linf") return Linf();
    if (head == "strange") return Strange();
  }
  if (head == "lp" && parts.size() == 2) {
    if (parts[1] == "inf") return Linf();
    return Lp(ParseNumber(parts[1], "lp norm"));
  }
  if (head == "strange" && parts.size() == 3) {
    return Strange(ParseNumber(parts[1], "strange norm alpha"),
                   ParseNumber(parts[2], "strange norm delta"));
  }
  throw Error(ErrorCode::kParse, "unknown norm '" + std::string(name) + "'");
}

std::string NormSpec::Name() const {
  if (kind_ == Kind::kStrange) {
    return "strange:" + FormatNumber(alpha_) + ":" + FormatNumber(delta_);
  }
  if (p_ == 1) return "l1";
  if (p_ == 2) return "l2";
  if (std::isinf(p_)) return "linf";
  return "lp:" + FormatNumber(p_);
}

void NormSpec::CheckDim(int dim) const {
  if (kind_ == Kind::kStrange && dim != 2) {
    throw Error(ErrorCode::kDimension, "strange norm is defined on R^2 only");
  }
}

double NormSpec::EuclideanLowerBound(int dim) const {
  if (kind_ == Kind::kStrange) {
    // sqrt(a^2 + b^2) >= (a + b)/sqrt(2) and |x|_1 >= |x|_2 give a linear
    // lower bound coefficient per axis.
    const double s = 1 / std::sqrt(2.0);
    double c1 = 1 - delta_ * alpha_ + delta_ * alpha_ * s;
    double c2 = 1 - delta_ + delta_ * s;
    return std::min(c1, c2);
  }
  if (p_ <= 2) return 1;
  // |x|_p >= d^(1/p - 1/2) |x|_2 for p >= 2.
  double inv_p = std::isinf(p_) ? 0 : 1 / p_;
  // The small factor absorbs pow() rounding.
  return std::pow(double(dim), inv_p - 0.5) * (1 - 1e-12);
}

double NormEval(const NormSpec& n, const Vector& v) {
  n.CheckDim(v.dim());
  return Visit(n, [&](auto norm) { return norm(v.data(), v.dim()); });
}

double Distance(const NormSpec& n, const Vector& a, const Vector& b) {
  return NormEval(n, a - b);
}

}  // namespace zonelab
