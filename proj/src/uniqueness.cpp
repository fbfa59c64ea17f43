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

#include "posmap/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "posmap/certify.hpp"
#include "posmap/decompose.hpp"

namespace posmap {

namespace {

constexpr std::size_t kDims = 7;
constexpr std::size_t kConstraints = 14;

constexpr std::array<const char*, kConstraints> kConstraintNames{
    "H1:|y|^2<=a1*u1", "H1:|t1|^2<=b1*u1", "H1:|c|^2<=a1*b1", "H1:det3>=0",
    "H2:|z|^2<=a2*u2", "H2:|t2|^2<=b2*u2", "H2:|c|^2<=a2*b2", "H2:det3>=0",
    "a1>=0",           "b1>=0",            "u1>=0",           "a2>=0",
    "b2>=0",           "u2>=0"};

// Below this a coefficient counts as exactly zero (degenerate case).
constexpr double kZeroFloor = 1e-12;
// Minimum |y|, |z|, u for the closed-form reference.
constexpr double kSearchFloor = 1e-3;

std::array<double, kConstraints> slacks(const SplitTarget& g,
                                        const SplitCandidate& x) {
  const double a2 = 1.0 - x.a1;
  const double b2 = (1.0 - g.u) - x.b1;
  const double u2 = g.u - x.u1;
  const Complex t2 = g.t - x.t1;
  const double y2 = std::norm(g.y), z2 = std::norm(g.z), c2 = std::norm(x.c);
  const double t1n = std::norm(x.t1), t2n = std::norm(t2);
  return {
      x.a1 * x.u1 - y2,
      x.b1 * x.u1 - t1n,
      x.a1 * x.b1 - c2,
      x.b1 * (x.a1 * x.u1 - y2) + 2.0 * (x.c * x.t1 * std::conj(g.y)).real() -
          x.a1 * t1n - x.u1 * c2,
      a2 * u2 - z2,
      b2 * u2 - t2n,
      a2 * b2 - c2,
      b2 * (a2 * u2 - z2) - 2.0 * (x.c * std::conj(t2) * std::conj(g.z)).real() -
          a2 * t2n - u2 * c2,
      x.a1,
      x.b1,
      x.u1,
      a2,
      b2,
      u2,
  };
}

SplitCandidate reference_candidate(const SplitTarget& g, std::string& label) {
  const double ay = std::abs(g.y), az = std::abs(g.z);
  const double b = 1.0 - g.u;
  if (g.u > kSearchFloor && ay > kSearchFloor && az > kSearchFloor &&
      b > kSearchFloor) {
    const double s = std::sqrt(g.u);
    label = "closed-form decomposition";
    return {ay / s, az * b / s, ay * s, 0.5 * g.t, -g.z * g.t / (2.0 * az * s)};
  }
  if (ay <= kZeroFloor && g.u > kZeroFloor) {
    label = "trivial split: H completely copositive";
    return {0.0, 0.0, 0.0, 0.0, 0.0};
  }
  if (g.u <= kZeroFloor || az <= kZeroFloor) {
    label = "trivial split: H completely positive";
    return {1.0, b, g.u, g.t, 0.0};
  }
  if (g.u <= kSearchFloor) throw HypothesisViolated("u = 0");
  if (ay <= kSearchFloor) throw HypothesisViolated("y = 0");
  if (az <= kSearchFloor) throw HypothesisViolated("z = 0");
  throw HypothesisViolated("u = 1");
}

class Cloud {
 public:
  Cloud(const SplitCandidate& origin, double alternate_threshold)
      : origin_(origin), x0_(origin.coords()), threshold_(alternate_threshold) {
    lo_ = hi_ = x0_;
  }

  void add(const SplitCandidate& cand) {
    const auto x = cand.coords();
    double d = 0.0;
    for (std::size_t k = 0; k < kDims; ++k) {
      lo_[k] = std::min(lo_[k], x[k]);
      hi_[k] = std::max(hi_[k], x[k]);
      d = std::max(d, std::abs(x[k] - x0_[k]));
    }
    ++count_;
    max_distance_ = std::max(max_distance_, d);
    if (d > threshold_) alternates_.push_back({cand, d});
  }

  void finish(FeasibilityReport& r, std::size_t cap) {
    r.feasible_points = count_;
    r.max_distance = max_distance_;
    r.cloud_diameter = 0.0;
    for (std::size_t k = 0; k < kDims; ++k)
      r.cloud_diameter = std::max(r.cloud_diameter, hi_[k] - lo_[k]);
    r.alternate_count = alternates_.size();
    std::sort(alternates_.begin(), alternates_.end(),
              [](const Alternate& a, const Alternate& b) {
                if (a.distance != b.distance) return a.distance > b.distance;
                return a.candidate.coords() < b.candidate.coords();
              });
    if (alternates_.size() > cap) alternates_.resize(cap);
    r.alternates_found = std::move(alternates_);
  }

 private:
  SplitCandidate origin_;
  SplitCandidate::Coords x0_, lo_{}, hi_{};
  double threshold_;
  std::size_t count_ = 0;
  double max_distance_ = 0.0;
  std::vector<Alternate> alternates_;
};

SplitCandidate::Coords along(const SplitCandidate::Coords& x0,
                             const SplitCandidate::Coords& dir, double s) {
  SplitCandidate::Coords x;
  for (std::size_t k = 0; k < kDims; ++k) x[k] = x0[k] + s * dir[k];
  return x;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (hi - lo <= 0.0 || n <= 1) return {lo};
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

}  // namespace

SplitCandidate::Coords SplitCandidate::coords() const {
  return {a1, b1, u1, t1.real(), t1.imag(), c.real(), c.imag()};
}

SplitCandidate SplitCandidate::from_coords(const Coords& x) {
  return {x[0], x[1], x[2], {x[3], x[4]}, {x[5], x[6]}};
}

double distance(const SplitCandidate& a, const SplitCandidate& b) {
  const auto x = a.coords(), y = b.coords();
  double d = 0.0;
  for (std::size_t k = 0; k < kDims; ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

SplitTarget SplitTarget::from_choi(const ChoiMatrix& h, double tol) {
  CanonicalEntries e;
  try {
    e = read_canonical(h);
  } catch (const NotCanonicalForm& err) {
    throw NotExtremal(err.what());
  }
  const Certificate valid = validate_extremal(h, tol);
  if (!valid.passed()) throw NotExtremal(valid.detail);
  return {e.u, e.y, e.z, e.t};
}

std::pair<ChoiMatrix, ChoiMatrix> split_matrices(const SplitTarget& g,
                                                 const SplitCandidate& x) {
  const Complex t2 = g.t - x.t1;
  ChoiMatrix h1(Mat4{
      {x.a1, x.c, 0.0, g.y},
      {std::conj(x.c), x.b1, 0.0, x.t1},
      {0.0, 0.0, 0.0, 0.0},
      {std::conj(g.y), std::conj(x.t1), 0.0, x.u1},
  });
  ChoiMatrix h2(Mat4{
      {1.0 - x.a1, -x.c, 0.0, 0.0},
      {-std::conj(x.c), 1.0 - g.u - x.b1, std::conj(g.z), t2},
      {0.0, g.z, 0.0, 0.0},
      {0.0, std::conj(t2), 0.0, g.u - x.u1},
  });
  return {h1, h2};
}

Certificate feasibility(const ChoiMatrix& h, const SplitCandidate& cand,
                        double tol) {
  const SplitTarget g = SplitTarget::from_choi(h);
  const auto s = slacks(g, cand);
  std::vector<Condition> conds;
  conds.reserve(kConstraints);
  for (std::size_t k = 0; k < kConstraints; ++k)
    conds.push_back({kConstraintNames[k], s[k]});
  return certificate_from_conditions(std::move(conds), tol);
}

bool is_feasible(const SplitTarget& target, const SplitCandidate& cand,
                 double tol) {
  const auto s = slacks(target, cand);
  return std::all_of(s.begin(), s.end(), [&](double v) { return v >= -tol; });
}

FeasibilityReport uniqueness_search(const ChoiMatrix& h,
                                    const SearchOptions& opt) {
  if (!(opt.resolution > 0.0) || !(opt.radius > 0.0))
    throw RangeError("radius and resolution must be positive");
  const SplitTarget g = SplitTarget::from_choi(h);

  FeasibilityReport report;
  report.canonical = reference_candidate(g, report.reference);
  report.search_meta.options = opt;
  const auto x0 = report.canonical.coords();
  Cloud cloud(report.canonical, 10.0 * opt.resolution);
  std::size_t evals = 0;

  auto feasible_at = [&](const SplitCandidate::Coords& x) {
    ++evals;
    return is_feasible(g, SplitCandidate::from_coords(x), opt.tol);
  };

  if (!feasible_at(x0))
    throw NotExtremal("reference split is infeasible at tol " +
                      std::to_string(opt.tol));
  cloud.add(report.canonical);

  // March outward in resolution-sized steps, then bisect the first
  // infeasible step down to resolution / 1024.
  auto scan_ray = [&](const SplitCandidate::Coords& dir) {
    double good = 0.0, bad = -1.0;
    const auto steps =
        static_cast<std::size_t>(std::ceil(opt.radius / opt.resolution - 1e-12));
    for (std::size_t k = 1; k <= steps; ++k) {
      const double s = std::min(static_cast<double>(k) * opt.resolution, opt.radius);
      if (feasible_at(along(x0, dir, s))) {
        good = s;
      } else {
        bad = s;
        break;
      }
    }
    if (bad > 0.0) {
      const double floor_step = opt.resolution / 1024.0;
      while (bad - good > floor_step) {
        const double mid = 0.5 * (good + bad);
        (feasible_at(along(x0, dir, mid)) ? good : bad) = mid;
      }
    }
    if (good > 0.0)
      cloud.add(SplitCandidate::from_coords(along(x0, dir, good)));
  };

  // Coarse direction grid {-1, 0, 1}^7 \ {0}.
  std::size_t combos = 1;
  for (std::size_t k = 0; k < kDims; ++k) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    SplitCandidate::Coords dir;
    std::size_t rest = code;
    bool zero = true;
    for (std::size_t k = 0; k < kDims; ++k) {
      dir[k] = static_cast<double>(rest % 3) - 1.0;
      zero = zero && dir[k] == 0.0;
      rest /= 3;
    }
    if (zero) continue;
    scan_ray(dir);
    ++report.search_meta.grid_rays;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  for (std::size_t n = 0; n < opt.samples; ++n) {
    SplitCandidate::Coords dir;
    double span = 0.0;
    for (auto& d : dir) {
      d = sym(rng);
      span = std::max(span, std::abs(d));
    }
    if (span == 0.0) continue;
    const auto point = along(x0, dir, opt.radius);
    if (feasible_at(point)) cloud.add(SplitCandidate::from_coords(point));
    for (auto& d : dir) d /= span;
    scan_ray(dir);
    ++report.search_meta.random_rays;
  }

  const double b = 1.0 - g.u, tt = 2.0 * std::abs(g.t);
  const std::array<std::vector<double>, kDims> axes{
      linspace(0.0, 1.0, opt.global_grid),
      linspace(0.0, std::max(b, 0.0), opt.global_grid),
      linspace(0.0, std::max(g.u, 0.0), opt.global_grid),
      linspace(-tt, tt, opt.global_grid),
      linspace(-tt, tt, opt.global_grid),
      linspace(-1.0, 1.0, opt.global_grid),
      linspace(-1.0, 1.0, opt.global_grid)};
  std::array<std::size_t, kDims> idx{};
  while (true) {
    SplitCandidate::Coords x;
    for (std::size_t k = 0; k < kDims; ++k) x[k] = axes[k][idx[k]];
    if (feasible_at(x)) cloud.add(SplitCandidate::from_coords(x));
    ++report.search_meta.global_points;
    std::size_t k = 0;
    while (k < kDims && ++idx[k] == axes[k].size()) idx[k++] = 0;
    if (k == kDims) break;
  }

  report.search_meta.evaluations = evals;
  cloud.finish(report, opt.max_alternates);
  return report;
}

EpsilonSplit epsilon_family(const ChoiMatrix& h, double eps) {
  if (!(eps > 0.0)) throw RangeError("epsilon must be positive");
  const SplitTarget g = SplitTarget::from_choi(h);

  EpsilonSplit out;
  if (g.u <= kZeroFloor)
    out.kind = DegenerateKind::kUZero;
  else if (std::abs(g.y) <= kZeroFloor)
    out.kind = DegenerateKind::kYZero;
  else if (std::abs(g.z) <= kZeroFloor)
    out.kind = DegenerateKind::kZZero;
  else
    throw RangeError("matrix satisfies the uniqueness hypotheses (u, y, z != 0)");

  Mat4 a;
  a(1, 1) = eps;
  out.perturbation = ChoiMatrix(a);
  out.remainder = h - out.perturbation;
  out.remainder_cp = cp_check(out.remainder);
  out.remainder_ccp = ccp_check(out.remainder);
  out.perturbation_cp = cp_check(out.perturbation);
  out.perturbation_ccp = ccp_check(out.perturbation);

  const bool need_cp = out.kind != DegenerateKind::kYZero;
  const bool need_ccp = out.kind != DegenerateKind::kZZero;
  if (need_cp && !out.remainder_cp.passed())
    throw EpsilonTooLarge(eps, "H - A_eps is not completely positive");
  if (need_ccp && !out.remainder_ccp.passed())
    throw EpsilonTooLarge(eps, "H - A_eps is not completely copositive");
  return out;
}

PincerScan scalar_pincer_scan(double p, int grid, double threshold) {
  PincerScan out;
  for (int i = 0; i < grid; ++i) {
    const double q = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double r = (j + 0.5) / grid;
      if (p * p <= q * r && (1.0 - p) * (1.0 - p) <= (1.0 - q) * (1.0 - r)) {
        ++out.feasible;
        const double spread = std::abs(q - p) + std::abs(r - p);
        out.max_spread = std::max(out.max_spread, spread);
        if (spread > threshold) ++out.far_feasible;
      }
    }
  }
  return out;
}

}  // namespace posmap
