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
#include "posmap/extremal.hpp"
#include "support.hpp"

using namespace posmap;

TEST_CASE("build_extremal: example parameters give the example matrix") {
  ExtremalParams p;
  p.u = 0.25;
  p.y = 0.25;
  p.z = 0.25;
  const ChoiMatrix h = build_extremal(p);
  const double r3 = std::sqrt(3.0);
  const Mat4 want{{1.0, 0.0, 0.0, 0.25},
                  {0.0, 0.75, 0.25, Complex(0, r3 / 4)},
                  {0.0, 0.25, 0.0, 0.0},
                  {0.25, Complex(0, -r3 / 4), 0.0, 0.25}};
  CHECK(max_abs_diff(h.flat(), want) < 1e-15);
  CHECK(max_abs_diff(example_family(0.5).flat(), want) < 1e-15);
}

TEST_CASE("build_extremal: identity map at u = 1") {
  const ChoiMatrix h = build_extremal(ExtremalParams{});
  CHECK(h == choi_from_action([](const Mat2& a) { return a; }));
}

TEST_CASE("build_extremal: t satisfies its quadratic relation on both branches") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const ExtremalParams p = random_extremal_params(rng);
    const Complex t = p.t();
    CHECK(std::abs(t * t + 4.0 * p.b() * p.y * std::conj(p.z)) < 1e-14);
    ExtremalParams q = p;
    q.t_branch = p.t_branch == TBranch::kPlus ? TBranch::kMinus : TBranch::kPlus;
    CHECK(std::abs(q.t() + t) < 1e-15);
  }
}

TEST_CASE("build_extremal: invalid parameters name the violated relation") {
  ExtremalParams p;
  p.u = 1.2;
  CHECK_THROWS_AS(build_extremal(p), InvalidParams);
  p.u = 0.25;
  p.y = 0.3;
  p.z = 0.3;
  try {
    build_extremal(p);
    FAIL("expected InvalidParams");
  } catch (const InvalidParams& e) {
    CHECK(e.condition() == "|y|+|z|=sqrt(u)");
  }
  p.u = 1.0;
  p.y = 0.5;
  p.z = 0.5;
  try {
    build_extremal(p);
    FAIL("expected InvalidParams");
  } catch (const InvalidParams& e) {
    CHECK(e.condition() == "|y|=1 or |z|=1");
  }
  p.y = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(build_extremal(p), NonFiniteError);
}

TEST_CASE("example_family: range and agreement with build_extremal") {
  CHECK_THROWS_AS(example_family(0.0), RangeError);
  CHECK_THROWS_AS(example_family(1.0), RangeError);
  CHECK_THROWS_AS(example_family(-0.5), RangeError);
  for (double s : {0.05, 0.1, 0.3, 0.5, 0.77, 0.9, 0.99}) {
    const ExtremalParams p = example_params(s);
    CHECK(p.u == doctest::Approx(s * s));
    CHECK(std::abs(p.t() - Complex(0, s * std::sqrt(1 - s * s))) < 1e-15);
    CHECK(max_abs_diff(example_family(s).flat(), build_extremal(p).flat()) < 1e-15);
  }
}

TEST_CASE("degenerate_case: class of each degenerate map") {
  const ChoiMatrix u0 = degenerate_case(DegenerateKind::kUZero);
  CHECK(u0.flat() == Mat4::diagonal({1.0, 1.0, 0.0, 0.0}));
  CHECK(validate_extremal(u0).passed());

  const ChoiMatrix y0 = degenerate_case(DegenerateKind::kYZero, 0.5);
  CHECK(y0(2, 1) == 0.5);
  CHECK(y0(0, 3) == 0.0);
  CHECK(validate_extremal(y0).passed());

  const ChoiMatrix z0 = degenerate_case(DegenerateKind::kZZero, 0.5);
  CHECK(z0(0, 3) == 0.5);
  CHECK(validate_extremal(z0).passed());

  CHECK_THROWS_AS(degenerate_case(DegenerateKind::kZZero, 1.5), RangeError);
  CHECK(degenerate_kind_from_string(to_string(DegenerateKind::kYZero)) == DegenerateKind::kYZero);
  CHECK_THROWS(degenerate_kind_from_string("x_zero"));
}

TEST_CASE("validate_extremal: examples") {
  const Certificate c = validate_extremal(example_family(0.5));
  CHECK(c.passed());
  CHECK(c.margin >= -1e-15);

  // Unitality broken.
  Mat4 m = example_family(0.5).flat();
  m = m + Mat4::outer(basis_vector<4>(3), basis_vector<4>(3)) * Complex(0.1);
  const Certificate bad = validate_extremal(ChoiMatrix(m));
  CHECK_FALSE(bad.passed());
  CHECK(bad.detail == "b+u=1");

  // Correct pattern and moduli but t off its branch.
  ExtremalParams p = example_params(0.5);
  Mat4 n = build_extremal(p).flat();
  const Complex t = n(1, 3) * std::polar(1.0, 0.3);
  n = Mat4{{n(0, 0), n(0, 1), n(0, 2), n(0, 3)},
           {n(1, 0), n(1, 1), n(1, 2), t},
           {n(2, 0), n(2, 1), n(2, 2), n(2, 3)},
           {n(3, 0), std::conj(t), n(3, 2), n(3, 3)}};
  const Certificate rot = validate_extremal(ChoiMatrix(n));
  CHECK_FALSE(rot.passed());
  CHECK(rot.detail == "t^2=-4b*y*conj(z)");

  CHECK_THROWS_AS(validate_extremal(ChoiMatrix(Mat4::identity())), NotCanonicalForm);
}

TEST_CASE("random extremal instances are positive, unital and extremal-consistent") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 100; ++k) {
    const ExtremalParams p = random_extremal_params(rng);
    CHECK(p.u > 0.05);
    CHECK(p.u < 0.95);
    CHECK(std::abs(p.y) >= 1e-3);
    CHECK(std::abs(p.z) >= 1e-3 - 1e-15);
    const ChoiMatrix h = build_extremal(p);
    CHECK(validate_extremal(h).passed());
    CHECK(block_positive(h).passed());
    CHECK(max_abs_diff(apply_map(h, Mat2::identity()), Mat2::identity()) < 1e-15);
    const double t2 = std::norm(p.t());
    const double rhs = 2 * p.b() * (p.u - std::norm(p.y) - std::norm(p.z));
    CHECK(std::abs(t2 - rhs) < 1e-12);
  }
}

TEST_CASE("random_extremal_params: deterministic for a fixed seed") {
  std::mt19937_64 a(99), b(99);
  for (int k = 0; k < 10; ++k) {
    const ExtremalParams p = random_extremal_params(a), q = random_extremal_params(b);
    CHECK(p.u == q.u);
    CHECK(p.y == q.y);
    CHECK(p.z == q.z);
    CHECK(p.t_branch == q.t_branch);
  }
}
