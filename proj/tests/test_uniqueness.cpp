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

#include <doctest.h>

#include "posmap/certify.hpp"
#include "posmap/decompose.hpp"
#include "posmap/extremal.hpp"
#include "posmap/uniqueness.hpp"
#include "support.hpp"

using namespace posmap;

namespace {

// Eigenvalue route to feasibility, independent of the slack formulas.
bool feasible_by_eigen(const SplitTarget& g, const SplitCandidate& x, double tol) {
  const auto [h1, h2] = split_matrices(g, x);
  return hermitian_eigen(h1.flat()).values[0] >= -tol &&
         hermitian_eigen(partial_transpose(h2).flat()).values[0] >= -tol;
}

SplitCandidate perturbed(const SplitCandidate& x, std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> d(-r, r);
  auto c = x.coords();
  for (auto& v : c) v += d(rng);
  return SplitCandidate::from_coords(c);
}

}  // namespace

TEST_CASE("feasibility: canonical candidate of the example passes at the boundary") {
  const ChoiMatrix h = example_family(0.5);
  const DecompositionPair d = decompose_extremal(h);
  const SplitCandidate x{d.h1(0, 0).real(), d.h1(1, 1).real(), d.h1(3, 3).real(), d.h1(1, 3), d.c};
  CHECK(x.a1 == doctest::Approx(0.5));
  CHECK(x.b1 == doctest::Approx(0.375));
  CHECK(x.u1 == doctest::Approx(0.125));
  const Certificate c = feasibility(h, x);
  CHECK(c.passed());
  int tight = 0;
  for (const auto& cond : c.conditions) {
    CHECK(cond.margin >= -1e-12);
    tight += std::abs(cond.margin) < 1e-12;
  }
  CHECK(tight >= 4);
  CHECK(c.conditions.size() == 14);
}

TEST_CASE("feasibility: shifting u1 breaks a named constraint") {
  const ChoiMatrix h = example_family(0.5);
  const FeasibilityReport r = uniqueness_search(h, {0.2, 1e-2, 0, 0, 1e-9, 1, 1});
  SplitCandidate x = r.canonical;
  x.u1 += 0.05;
  const Certificate c = feasibility(h, x);
  CHECK_FALSE(c.passed());
  CHECK(c.detail.rfind("H", 0) == 0);
  REQUIRE(c.witness);
  CHECK(c.witness->minor == c.detail);
}

TEST_CASE("feasibility slacks agree with the eigenvalue test") {
  std::mt19937_64 rng(51);
  int agree = 0;
  for (int k = 0; k < 20; ++k) {
    const ChoiMatrix h = build_extremal(random_extremal_params(rng));
    const SplitTarget g = SplitTarget::from_choi(h);
    const FeasibilityReport r = uniqueness_search(h, {0.2, 1e-2, 0, 0, 1e-9, 1, 1});
    for (int j = 0; j < 200; ++j) {
      const SplitCandidate x = perturbed(r.canonical, rng, j < 100 ? 1e-3 : 0.2);
      const bool a = is_feasible(g, x, 1e-9);
      const bool b = feasible_by_eigen(g, x, 1e-9);
      agree += a == b;
    }
  }
  CHECK(agree == 4000);
}

TEST_CASE("uniqueness_search: example has a collapsed feasible cloud") {
  const ChoiMatrix h = example_family(0.5);
  SearchOptions opt;
  opt.samples = 20000;
  const FeasibilityReport r = uniqueness_search(h, opt);
  CHECK(r.reference == "closed-form decomposition");
  CHECK(r.alternates_found.empty());
  CHECK(r.alternate_count == 0);
  CHECK(r.cloud_diameter <= 1e-3);
  CHECK(r.search_meta.grid_rays == 2186);
  CHECK(r.search_meta.random_rays == 20000);
}

TEST_CASE("uniqueness_search: brute-force box oracle around the example") {
  const ChoiMatrix h = example_family(0.5);
  const SplitTarget g = SplitTarget::from_choi(h);
  const FeasibilityReport r = uniqueness_search(h, {0.2, 1e-2, 100, 0, 1e-9, 1, 1});
  std::mt19937_64 rng(53);
  double far = 0.0;
  for (int k = 0; k < 200000; ++k) {
    const SplitCandidate x = perturbed(r.canonical, rng, k % 2 ? 0.05 : 2e-3);
    if (feasible_by_eigen(g, x, 1e-9)) far = std::max(far, distance(x, r.canonical));
  }
  CHECK(far <= 1e-3);
}

TEST_CASE("uniqueness_search: random extremal instances") {
  std::mt19937_64 rng(55);
  SearchOptions opt;
  opt.samples = 2000;
  for (int k = 0; k < 10; ++k) {
    ExtremalParams p = random_extremal_params(rng, 0.1, 0.9, 0.05);
    const FeasibilityReport r = uniqueness_search(build_extremal(p), opt);
    CHECK(r.alternate_count == 0);
    CHECK(r.cloud_diameter <= 1e-3);
  }
}

TEST_CASE("uniqueness_search: degenerate maps admit far alternates") {
  SearchOptions opt;
  opt.samples = 2000;
  const std::pair<DegenerateKind, Complex> cases[] = {
      {DegenerateKind::kUZero, 0.0}, {DegenerateKind::kYZero, 0.5}, {DegenerateKind::kZZero, 0.5}};
  for (const auto& [kind, param] : cases) {
    CAPTURE(to_string(kind));
    const ChoiMatrix h = degenerate_case(kind, param);
    const FeasibilityReport r = uniqueness_search(h, opt);
    CHECK(r.reference.rfind("trivial split", 0) == 0);
    REQUIRE(r.alternate_count > 0);
    CHECK(r.alternates_found.front().distance >= 5e-3);
    const SplitTarget g = SplitTarget::from_choi(h);
    for (const auto& a : r.alternates_found) {
      CHECK(is_feasible(g, a.candidate, 1e-9));
      CHECK(feasible_by_eigen(g, a.candidate, 1e-9));
    }
  }
}

TEST_CASE("uniqueness_search: deterministic and validated") {
  const ChoiMatrix h = degenerate_case(DegenerateKind::kZZero, 0.5);
  SearchOptions opt;
  opt.samples = 500;
  opt.seed = 17;
  const FeasibilityReport a = uniqueness_search(h, opt), b = uniqueness_search(h, opt);
  CHECK(a.alternate_count == b.alternate_count);
  CHECK(a.cloud_diameter == b.cloud_diameter);
  REQUIRE(a.alternates_found.size() == b.alternates_found.size());
  for (std::size_t k = 0; k < a.alternates_found.size(); ++k)
    CHECK(distance(a.alternates_found[k].candidate, b.alternates_found[k].candidate) == 0.0);

  opt.resolution = 0.0;
  CHECK_THROWS_AS(uniqueness_search(h, opt), RangeError);
  opt.resolution = 1e-2;
  opt.radius = -1.0;
  CHECK_THROWS_AS(uniqueness_search(h, opt), RangeError);
  CHECK_THROWS_AS(uniqueness_search(ChoiMatrix(Mat4::identity())), NotExtremal);
}

TEST_CASE("epsilon_family: degenerate cases split off a CP and co-CP piece") {
  const std::pair<DegenerateKind, Complex> cases[] = {
      {DegenerateKind::kUZero, 0.0}, {DegenerateKind::kYZero, 0.5}, {DegenerateKind::kZZero, 0.5}};
  for (const auto& [kind, param] : cases) {
    CAPTURE(to_string(kind));
    const ChoiMatrix h = degenerate_case(kind, param);
    const EpsilonSplit s = epsilon_family(h, 0.01);
    CHECK(s.kind == kind);
    CHECK(max_abs_diff((s.remainder + s.perturbation).flat(), h.flat()) < 1e-15);
    CHECK(s.perturbation_cp.passed());
    CHECK(s.perturbation_ccp.passed());
    if (kind != DegenerateKind::kYZero) CHECK(s.remainder_cp.passed());
    if (kind != DegenerateKind::kZZero) CHECK(s.remainder_ccp.passed());
  }
  CHECK_THROWS_AS(epsilon_family(degenerate_case(DegenerateKind::kZZero, 0.5), 0.9), EpsilonTooLarge);
  CHECK_THROWS_AS(epsilon_family(example_family(0.5), 0.01), RangeError);
  CHECK_THROWS_AS(epsilon_family(degenerate_case(DegenerateKind::kUZero), 0.0), RangeError);
}

TEST_CASE("scalar_pincer_scan: only the diagonal point survives") {
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  for (int k = 0; k < 20; ++k) {
    const PincerScan s = scalar_pincer_scan(unit(rng), 1000);
    CHECK(s.far_feasible == 0);
    CHECK(s.max_spread <= 2e-3);
  }
  // p on a grid node: the scan does see the diagonal point.
  CHECK(scalar_pincer_scan(0.5005, 1000).feasible >= 1);
}
