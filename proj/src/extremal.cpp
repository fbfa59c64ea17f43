// Copyright 2026 The posmap Authors
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

#include "posmap/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "posmap/certify.hpp"

namespace posmap {

Complex ExtremalParams::t() const {
  const double b_ = b();
  if (b_ <= 0.0) return 0.0;
  const Complex root = std::sqrt(-4.0 * b_ * y * std::conj(z));
  return t_branch == TBranch::kPlus ? root : -root;
}

void ExtremalParams::validate(double tol) const {
  if (!std::isfinite(u) || !is_finite(y) || !is_finite(z))
    throw NonFiniteError("extremal parameters");
  if (u < -tol || u > 1.0 + tol)
    throw InvalidParams("b>=0,u>=0,b+u=1", "u must lie in [0, 1]");
  const double ay = std::abs(y), az = std::abs(z);
  if (b() > tol) {
    const double dev = std::abs(ay + az - std::sqrt(std::max(u, 0.0)));
    if (dev > tol)
      throw InvalidParams("|y|+|z|=sqrt(u)",
                          "|y| + |z| differs from sqrt(u) by " +
                              std::to_string(dev));
  } else {
    if (std::abs(ay - 1.0) > tol && std::abs(az - 1.0) > tol)
      throw InvalidParams("|y|=1 or |z|=1",
                          "b = 0 requires |y| = 1 or |z| = 1");
    if (ay + az > 1.0 + tol)
      throw InvalidParams("(|y|+|z|)^2<=au", "|y| + |z| exceeds 1");
  }
}

ChoiMatrix build_extremal(const ExtremalParams& p) {
  p.validate();
  const Complex t = p.t();
  const double b = std::max(p.b(), 0.0);
  return ChoiMatrix(Mat4{
      {1.0, 0.0, 0.0, p.y},
      {0.0, b, std::conj(p.z), t},
      {0.0, p.z, 0.0, 0.0},
      {std::conj(p.y), std::conj(t), 0.0, p.u},
  });
}

ExtremalParams example_params(double s) {
  if (!(s > 0.0 && s < 1.0)) throw RangeError("example family needs 0 < s < 1");
  ExtremalParams p;
  p.u = s * s;
  p.y = s / 2.0;
  p.z = s / 2.0;
  p.t_branch = TBranch::kPlus;
  return p;
}

ChoiMatrix example_family(double s) {
  if (!(s > 0.0 && s < 1.0)) throw RangeError("example family needs 0 < s < 1");
  const double root = std::sqrt(1.0 - s * s);
  const Complex t{0.0, s * root};
  return ChoiMatrix(Mat4{
      {1.0, 0.0, 0.0, s / 2.0},
      {0.0, 1.0 - s * s, s / 2.0, t},
      {0.0, s / 2.0, 0.0, 0.0},
      {s / 2.0, std::conj(t), 0.0, s * s},
  });
}

ChoiMatrix degenerate_case(DegenerateKind kind, Complex param) {
  ExtremalParams p;
  switch (kind) {
    case DegenerateKind::kUZero:
      p.u = 0.0;
      p.y = 0.0;
      p.z = 0.0;
      break;
    case DegenerateKind::kYZero:
      if (!(std::abs(param) < 1.0)) throw RangeError("need |z| < 1");
      p.u = std::norm(param);
      p.y = 0.0;
      p.z = param;
      break;
    case DegenerateKind::kZZero:
      if (!(std::abs(param) < 1.0)) throw RangeError("need |y| < 1");
      p.u = std::norm(param);
      p.y = param;
      p.z = 0.0;
      break;
  }
  return build_extremal(p);
}

Certificate validate_extremal(const ChoiMatrix& h, double tol) {
  const CanonicalEntries e = read_canonical(h);
  const double ay = std::abs(e.y), az = std::abs(e.z);
  std::vector<Condition> conds{
      {"a=1", -std::abs(e.a - 1.0)},
      {"c=0", -std::abs(e.c)},
      {"b>=0", e.b},
      {"u>=0", e.u},
      {"b+u=1", -std::abs(e.b + e.u - 1.0)},
  };
  if (e.b > tol) {
    const double rhs = 2.0 * e.b * (e.u - ay * ay - az * az);
    conds.push_back({"|t|^2=2b(u-|y|^2-|z|^2)", -std::abs(std::norm(e.t) - rhs)});
    conds.push_back({"|y|+|z|=sqrt(u)",
                     -std::abs(ay + az - std::sqrt(std::max(e.u, 0.0)))});
    conds.push_back({"t^2=-4b*y*conj(z)",
                     -std::abs(e.t * e.t + 4.0 * e.b * e.y * std::conj(e.z))});
  } else {
    conds.push_back(
        {"|y|=1 or |z|=1", -std::min(std::abs(ay - 1.0), std::abs(az - 1.0))});
    conds.push_back({"|t|^2<=bu", e.b * e.u - std::norm(e.t)});
    conds.push_back({"(|y|+|z|)^2<=au", e.a * e.u - (ay + az) * (ay + az)});
  }
  return certificate_from_conditions(std::move(conds), tol);
}

ExtremalParams random_extremal_params(std::mt19937_64& rng, double u_lo,
                                      double u_hi, double modulus_floor) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ExtremalParams p;
  p.u = u_lo + (u_hi - u_lo) * unit(rng);
  const double root = std::sqrt(p.u);
  const double span = std::max(root - 2.0 * modulus_floor, 0.0);
  const double ay = modulus_floor + span * unit(rng);
  const double az = root - ay;
  p.y = std::polar(ay, 2.0 * std::numbers::pi * unit(rng));
  p.z = std::polar(az, 2.0 * std::numbers::pi * unit(rng));
  p.t_branch = unit(rng) < 0.5 ? TBranch::kPlus : TBranch::kMinus;
  return p;
}

const char* to_string(DegenerateKind kind) {
  switch (kind) {
    case DegenerateKind::kUZero:
      return "u_zero";
    case DegenerateKind::kYZero:
      return "y_zero";
    case DegenerateKind::kZZero:
      return "z_zero";
  }
  return "?";
}

DegenerateKind degenerate_kind_from_string(const std::string& name) {
  if (name == "u_zero") return DegenerateKind::kUZero;
  if (name == "y_zero") return DegenerateKind::kYZero;
  if (name == "z_zero") return DegenerateKind::kZZero;
  throw RangeError("unknown degenerate kind '" + name + "'");
}

}  // namespace posmap
