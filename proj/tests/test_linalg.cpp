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

#include "posmap/linalg.hpp"
#include "support.hpp"

using namespace posmap;
using posmap::test::random_hermitian;

TEST_CASE("psd_check: identity passes with margin one") {
  const Certificate c = psd_check(Mat4::identity());
  CHECK(c.passed());
  CHECK(c.margin == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(c.witness);
}

TEST_CASE("psd_check: negative diagonal entry yields the basis witness") {
  const Mat4 m = Mat4::diagonal({1.0, 1.0, 0.0, -0.5});
  const Certificate c = psd_check(m);
  REQUIRE_FALSE(c.passed());
  CHECK(c.margin == doctest::Approx(-0.5));
  REQUIRE(c.witness);
  const auto& w = c.witness->vector;
  REQUIRE(w.size() == 4);
  CHECK(std::abs(w[3]) == doctest::Approx(1.0));
  CHECK(std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]) < 1e-12);
}

TEST_CASE("psd_check: rejects non-Hermitian input") {
  Mat4 m = Mat4::identity();
  m = m + Mat4::outer(basis_vector<4>(0), basis_vector<4>(1)) * Complex(1e-3);
  CHECK_THROWS_AS(psd_check(m), NotHermitian);
}

TEST_CASE("psd_check: witness reaches the minimum eigenvalue") {
  std::mt19937_64 rng(7);
  int fails = 0;
  for (int k = 0; k < 200; ++k) {
    const Mat4 m = random_hermitian<4>(rng);
    const Certificate c = psd_check(m);
    if (c.passed()) continue;
    ++fails;
    REQUIRE(c.witness);
    Vec4 w;
    std::copy(c.witness->vector.begin(), c.witness->vector.end(), w.begin());
    CHECK(norm(w) == doctest::Approx(1.0).epsilon(1e-12));
    const double q = inner(w, m * w).real();
    CHECK(q == doctest::Approx(c.margin).epsilon(1e-9));
    CHECK(q <= -defaults::kPsdTol);
  }
  CHECK(fails > 50);
}

TEST_CASE("psd_check: verdict is invariant under unitary conjugation") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Mat4 m = random_hermitian<4>(rng);
    // Unitary from the eigenvectors of an unrelated Hermitian matrix.
    const Mat4 u = hermitian_eigen(random_hermitian<4>(rng)).vectors;
    REQUIRE(u.is_unitary(1e-10));
    CHECK(psd_check(m).passed() == psd_check(u.adjoint() * m * u).passed());
  }
}

TEST_CASE("hermitian_eigen: reconstructs the input") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Mat4 m = random_hermitian<4>(rng);
    const auto e = hermitian_eigen(m);
    CHECK(e.vectors.is_unitary(1e-12));
    const Mat4 d = Mat4::diagonal({e.values[0], e.values[1], e.values[2], e.values[3]});
    CHECK(max_abs_diff(e.vectors * d * e.vectors.adjoint(), m) < 1e-12);
    for (int i = 0; i < 3; ++i) CHECK(e.values[i] <= e.values[i + 1]);
  }
}

TEST_CASE("singular_values: match eigenvalue moduli on Hermitian input") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Mat4 m = random_hermitian<4>(rng);
    auto ev = hermitian_eigen(m).values;
    std::array<double, 4> mod;
    for (int i = 0; i < 4; ++i) mod[i] = std::abs(ev[i]);
    std::sort(mod.rbegin(), mod.rend());
    const auto sv = singular_values(m);
    for (int i = 0; i < 4; ++i) CHECK(sv[i] == doctest::Approx(mod[i]).epsilon(1e-12));
  }
}

TEST_CASE("rank_estimate: trivial cases") {
  CHECK(rank_estimate(Mat4{}) == 0);
  CHECK(rank_estimate(Mat4::identity()) == 4);
  const Vec4 a{1.0, Complex(0, 2), 0.5, -1.0};
  CHECK(rank_estimate(Mat4::outer(a, a)) == 1);
  CHECK(rank_estimate(Mat2::identity()) == 2);
}

TEST_CASE("complete_to_unitary: basis vectors give the identity") {
  CHECK(max_abs_diff(complete_to_unitary({0.0, 1.0}, ColumnPosition::kSecond), Mat2::identity()) < 1e-15);
  CHECK(max_abs_diff(complete_to_unitary({1.0, 0.0}, ColumnPosition::kFirst), Mat2::identity()) < 1e-15);
}

TEST_CASE("complete_to_unitary: places v in the requested column") {
  const double r = 1.0 / std::sqrt(2.0);
  const Vec2 v{r, Complex(0, r)};
  const Mat2 u = complete_to_unitary(v, ColumnPosition::kSecond);
  CHECK((u.adjoint() * u - Mat2::identity()).max_abs() < 1e-12);
  CHECK((u * u.adjoint() - Mat2::identity()).max_abs() < 1e-12);
  CHECK(std::abs(u(0, 1) - v[0]) < 1e-15);
  CHECK(std::abs(u(1, 1) - v[1]) < 1e-15);

  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const Vec2 w = normalized(Vec2{test::random_complex(rng), test::random_complex(rng)});
    for (auto pos : {ColumnPosition::kFirst, ColumnPosition::kSecond}) {
      const Mat2 q = complete_to_unitary(w, pos);
      CHECK(q.unitarity_residual() < 1e-12);
      const Vec2 col = q.column(pos == ColumnPosition::kFirst ? 0 : 1);
      CHECK(std::abs(col[0] - w[0]) + std::abs(col[1] - w[1]) < 1e-15);
    }
  }
}

TEST_CASE("complete_to_unitary: rejects non-unit vectors") {
  CHECK_THROWS_AS(complete_to_unitary({1.0, 1.0}, ColumnPosition::kFirst), NotUnitVector);
  CHECK_THROWS_AS(complete_to_unitary({1.0 + 1e-9, 0.0}, ColumnPosition::kFirst), NotUnitVector);
}

TEST_CASE("matrix constructors reject non-finite entries") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS((Mat2{{nan, 0.0}, {0.0, 1.0}}), NonFiniteError);
  std::array<Complex, 16> e{};
  e[5] = Complex(0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(static_cast<void>(Mat4(e)), NonFiniteError);
}
