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

#include <random>
#include <string>

#include "posmap/certificate.hpp"
#include "posmap/choi.hpp"

namespace posmap {

enum class TBranch { kPlus, kMinus };

/// Parameters of an extremal unital positive map in its canonical frame:
///
///   [ 1    0    | 0   y ]
///   [ 0    b    | z*  t ]       b = 1 - u
///   [ 0    z    | 0   0 ]       t^2 = -4 b y conj(z)
///   [ y*   t*   | 0   u ]
///
/// For b > 0 the moduli satisfy |y| + |z| = sqrt(u); for b = 0 one of
/// |y|, |z| equals 1 and t = 0.
struct ExtremalParams {
  double u = 1.0;
  Complex y{1.0, 0.0};
  Complex z{};
  TBranch t_branch = TBranch::kPlus;

  double b() const { return 1.0 - u; }

  /// Branch-selected square root of -4(1-u) y conj(z); zero when b = 0.
  Complex t() const;

  /// Throws InvalidParams naming the first violated relation.
  void validate(double tol = 1e-10) const;
};

/// Choi matrix of the canonical extremal map. Throws InvalidParams.
ChoiMatrix build_extremal(const ExtremalParams& params);

/// Parameter image of the one-parameter example family, 0 < s < 1:
/// u = s^2, y = z = s/2, t = i s sqrt(1 - s^2).
ExtremalParams example_params(double s);

/// Choi matrix of the example family. Throws RangeError outside (0, 1).
ChoiMatrix example_family(double s);

enum class DegenerateKind { kUZero, kYZero, kZZero };

/// Extremal maps outside the decomposition hypotheses:
///   kUZero            diag(1, 1, 0, 0)
///   kYZero (param z)  y = 0, u = |z|^2   (completely copositive)
///   kZZero (param y)  z = 0, u = |y|^2   (completely positive)
/// The parameter must lie in the open unit disc.
ChoiMatrix degenerate_case(DegenerateKind kind, Complex param = {});

/// PASS iff H has the canonical extremal pattern and the coefficient
/// relations hold within tol. Throws NotCanonicalForm when the face
/// pattern itself is broken.
Certificate validate_extremal(const ChoiMatrix& h, double tol = 1e-10);

/// Random valid parameters: u ~ U(u_lo, u_hi), |y| ~ U(0, sqrt(u)) with
/// both |y| and |z| floored at modulus_floor, uniform phases, random branch.
ExtremalParams random_extremal_params(std::mt19937_64& rng,
                                      double u_lo = 0.05, double u_hi = 0.95,
                                      double modulus_floor = 1e-3);

const char* to_string(DegenerateKind kind);
DegenerateKind degenerate_kind_from_string(const std::string& name);

}  // namespace posmap
