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

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "posmap/choi.hpp"
#include "posmap/linalg.hpp"
#include "posmap/matrix.hpp"

namespace posmap::test {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng)};
}

template <std::size_t N>
Matrix<N> random_matrix(std::mt19937_64& rng, double scale = 1.0) {
  std::array<Complex, N * N> e;
  for (auto& x : e) x = random_complex(rng, scale);
  return Matrix<N>(e);
}

template <std::size_t N>
Matrix<N> random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
  const Matrix<N> g = random_matrix<N>(rng, scale);
  return (g + g.adjoint()) * Complex(0.5);
}

inline Mat2 random_unitary(std::mt19937_64& rng) {
  Vec2 a{random_complex(rng), random_complex(rng)};
  a = normalized(a);
  const Complex phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * M_PI)(rng));
  return Mat2{{a[0], -std::conj(a[1]) * phase}, {a[1], std::conj(a[0]) * phase}};
}

// Random CP map: sum of k Kraus terms.
inline ChoiMatrix random_cp(std::mt19937_64& rng, int k = 2) {
  Mat4 acc;
  for (int i = 0; i < k; ++i) {
    const Mat2 kr = random_matrix<2>(rng);
    acc = acc + choi_from_action([&](const Mat2& a) { return kr * a * kr.adjoint(); }).flat();
  }
  return ChoiMatrix(acc);
}

inline ChoiMatrix random_ccp(std::mt19937_64& rng, int k = 2) {
  return partial_transpose(random_cp(rng, k));
}

inline double lambda_min(const Mat4& m) {
  return hermitian_eigen(m).values[0];
}

inline ChoiMatrix canonical(double a, double b, double u, Complex c, Complex y, Complex z, Complex t) {
  return ChoiMatrix(Mat4{{a, c, 0.0, y},
                         {std::conj(c), b, std::conj(z), t},
                         {0.0, z, 0.0, 0.0},
                         {std::conj(y), std::conj(t), 0.0, u}});
}

// Mixed-class generator over the canonical pattern: PSD cores give CP
// instances, their mirror images give co-CP, the rest are generic.
inline ChoiMatrix random_canonical(std::mt19937_64& rng, int kind) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (kind == 0 || kind == 1) {
    // Gram matrix on the indices {0, 1, 3}.
    Vec4 g0{}, g1{}, g3{};
    for (int r = 0; r < 3; ++r) {
      const Complex p = random_complex(rng), q = random_complex(rng),
                    s = random_complex(rng);
      g0[r] = p;
      g1[r] = q;
      g3[r] = s;
    }
    const double a = inner(g0, g0).real(), b = inner(g1, g1).real(), u = inner(g3, g3).real();
    const Complex c = inner(g0, g1), w = inner(g0, g3), t = inner(g1, g3);
    const ChoiMatrix h = canonical(a, b, u, c, w, 0.0, t);
    return kind == 0 ? h : partial_transpose(h);
  }
  const double a = unit(rng), b = unit(rng), u = unit(rng);
  const double scale = 0.6 * unit(rng);
  return canonical(a, b, u, random_complex(rng, scale),
                   random_complex(rng, scale),
                   kind == 2 ? Complex(0.0) : random_complex(rng, scale),
                   random_complex(rng, scale));
}

}  // namespace posmap::test
