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

#include <utility>

#include "posmap/certificate.hpp"
#include "posmap/choi.hpp"
#include "posmap/extremal.hpp"

namespace posmap {

namespace defaults {
inline constexpr double kHypothesisFloor = 1e-8;
}  // namespace defaults

/// phi = phi1 + phi2 with phi1 completely positive (Choi matrix h1) and
/// phi2 completely copositive (Choi matrix h2). The Kraus forms are
/// phi1(A) = K1 A K1* and phi2(A) = K2 A^T K2*.
struct DecompositionPair {
  ChoiMatrix h1;
  ChoiMatrix h2;
  Mat2 kraus1;
  Mat2 kraus2;
  Complex c{};   // (0,1) entry of h1; h2 carries -c
  Complex y1{};  // principal square root of y
  Complex z1{};  // z1^2 = z, fixed by t = 2i sqrt(1-u) y1 conj(z1)
};

/// Closed-form split of an extremal unital positive map given in its
/// canonical frame. With s = sqrt(u):
///
///   h1 = [ |y|/s       c             | 0  y   ]
///        [ c*          |z|(1-u)/s    | 0  t/2 ]
///        [ 0           0             | 0  0   ]
///        [ y*          t*/2          | 0  |y|s ]
///
///   h2 = [ |z|/s       -c            | 0   0   ]
///        [ -c*         |y|(1-u)/s    | z*  t/2 ]
///        [ 0           z             | 0   0   ]
///        [ 0           t*/2          | 0   |z|s ]
///
/// with c = -z t / (2 |z| s). Both parts are rank one.
///
/// Throws NotExtremal if validate_extremal fails and HypothesisViolated
/// ("u = 0", "y = 0", "z = 0" or "u = 1") when a quantity is <= floor.
DecompositionPair decompose_extremal(
    const ChoiMatrix& h, double tol = 1e-10,
    double floor = defaults::kHypothesisFloor);

struct KrausPair {
  Mat2 kraus1;
  Mat2 kraus2;
};

/// Kraus operators from u and the square roots y1, z1:
///   K1 = [[y1 u^-1/4, 0], [i conj(z1) sqrt(1-u) u^-1/4, conj(y1) u^1/4]]
///   K2 = [[z1 u^-1/4, 0], [-i conj(y1) sqrt(1-u) u^-1/4, conj(z1) u^1/4]]
KrausPair kraus_operators(double u, Complex y1, Complex z1);

/// Same, deriving y1 and z1 from the parameters; requires u, y, z != 0
/// and u < 1.
KrausPair kraus_operators(const ExtremalParams& params);

/// Square roots (y1, z1) with y1 principal and t = 2i sqrt(1-u) y1 conj(z1).
std::pair<Complex, Complex> square_roots(double u, Complex y, Complex t);

/// PASS iff h1 + h2 = h, h1 is PSD, h2^tau is PSD and both parts lie in
/// the face of (xi, eta) = (e2, e1), each within tol. Never throws on
/// malformed pairs; a non-Hermitian part is reported as a failure.
Certificate verify_decomposition(const ChoiMatrix& h,
                                 const DecompositionPair& pair,
                                 double tol = 1e-9);

}  // namespace posmap
