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

#include "posmap/certificate.hpp"
#include "posmap/choi.hpp"

namespace posmap {

namespace defaults {
inline constexpr double kPatternTol = 1e-9;
}  // namespace defaults

/// Search resolution for block_positive. The unit sphere of C^2 (modulo
/// phase) is sampled as v = (cos(theta/2), e^{i phi} sin(theta/2)).
struct BlochGrid {
  int polar = 96;
  int azimuthal = 192;
  int starts = 8;  // best grid points handed to local refinement
  int refine_iterations = 200;
};

/// [<v, H_ij v>]_ij for a unit vector v.
Mat2 reduced_matrix(const ChoiMatrix& h, const Vec2& v);

/// Numeric block-positivity test: minimizes lambda_min of the reduced
/// matrix over the Bloch sphere. A FAIL carries an explicit violating v
/// and is exact; a PASS is only as good as the grid and refinement.
/// Deterministic: grid order and refinement are fixed, ties resolve to the
/// lowest grid index. Throws NotHermitian.
Certificate block_positive(const ChoiMatrix& h, const BlochGrid& grid = {},
                           double tol = defaults::kPsdTol);

/// Choi matrix positive semidefinite.
Certificate cp_check(const ChoiMatrix& h, double tol = defaults::kPsdTol);

/// Partially transposed Choi matrix positive semidefinite.
Certificate ccp_check(const ChoiMatrix& h, double tol = defaults::kPsdTol);

/// PASS iff ||phi(P_xi) eta|| <= tol; the margin is that norm.
Certificate face_membership(const ChoiMatrix& h, const Vec2& xi,
                            const Vec2& eta, double tol = 1e-9);

/// Coefficients of the canonical face form
///
///   [ a     c    | 0   y ]
///   [ c*    b    | z*  t ]
///   [ 0     z    | 0   0 ]
///   [ y*    t*   | 0   u ]
struct CanonicalEntries {
  double a = 0.0;
  double b = 0.0;
  double u = 0.0;
  Complex c{};
  Complex y{};
  Complex z{};
  Complex t{};
};

/// Reads the canonical coefficients; throws NotCanonicalForm when an
/// off-pattern entry or the Hermitian mismatch exceeds pattern_tol.
CanonicalEntries read_canonical(const ChoiMatrix& h,
                                double pattern_tol = defaults::kPatternTol);

/// Minor conditions for complete positivity of a canonical-form matrix.
Certificate canonical_cp_conditions(const ChoiMatrix& h, double tol = 1e-9);

/// Minor conditions for complete copositivity of a canonical-form matrix.
Certificate canonical_ccp_conditions(const ChoiMatrix& h, double tol = 1e-9);

/// Necessary conditions for positivity in canonical form:
/// |c|^2 <= ab, |t|^2 <= bu and (|y| + |z|)^2 <= au.
Certificate face_form_inequalities(const ChoiMatrix& h, double tol = 1e-9);

}  // namespace posmap
