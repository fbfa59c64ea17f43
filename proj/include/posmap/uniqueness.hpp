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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "posmap/certificate.hpp"
#include "posmap/choi.hpp"
#include "posmap/extremal.hpp"

namespace posmap {

/// A candidate split H = H1 + H2 inside the face of (e2, e1):
///
///   H1 = [ a1   c    | 0  y  ]     H2 = [ a2   -c   | 0   0  ]
///        [ c*   b1   | 0  t1 ]          [ -c*  b2   | z*  t2 ]
///        [ 0    0    | 0  0  ]          [ 0    z    | 0   0  ]
///        [ y*   t1*  | 0  u1 ]          [ 0    t2*  | 0   u2 ]
///
/// Only the seven real degrees of freedom are stored; the H2 entries are
/// always recomputed from H (a2 = 1 - a1, b2 = 1 - u - b1, u2 = u - u1,
/// t2 = t - t1).
struct SplitCandidate {
  double a1 = 0.0;
  double b1 = 0.0;
  double u1 = 0.0;
  Complex t1{};
  Complex c{};

  using Coords = std::array<double, 7>;
  Coords coords() const;
  static SplitCandidate from_coords(const Coords& x);
};

/// L-infinity distance over the seven real coordinates.
double distance(const SplitCandidate& a, const SplitCandidate& b);

/// The fixed entries of the extremal matrix being split.
struct SplitTarget {
  double u = 0.0;
  Complex y{};
  Complex z{};
  Complex t{};

  /// Reads u, y, z, t; throws NotExtremal unless validate_extremal passes.
  static SplitTarget from_choi(const ChoiMatrix& h, double tol = 1e-10);
};

/// Choi matrices of both parts of a candidate.
std::pair<ChoiMatrix, ChoiMatrix> split_matrices(const SplitTarget& target,
                                                 const SplitCandidate& cand);

/// All minor and sign constraints; PASS iff every slack >= -tol.
/// The detail names the first violated constraint. Throws NotExtremal.
Certificate feasibility(const ChoiMatrix& h, const SplitCandidate& cand,
                        double tol = 1e-9);

/// Allocation-free form of feasibility() used by the search.
bool is_feasible(const SplitTarget& target, const SplitCandidate& cand,
                 double tol);

struct SearchOptions {
  double radius = 0.2;
  double resolution = 1e-2;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int global_grid = 7;  // points per axis of the coarse global scan
  std::size_t max_alternates = 100;
};

struct Alternate {
  SplitCandidate candidate;
  double distance = 0.0;
};

struct SearchMeta {
  SearchOptions options;
  std::size_t grid_rays = 0;
  std::size_t random_rays = 0;
  std::size_t global_points = 0;
  std::size_t evaluations = 0;
};

struct FeasibilityReport {
  /// Reference split: the closed-form decomposition when the hypotheses
  /// hold, otherwise the trivial split that assigns H to its own class.
  SplitCandidate canonical;
  std::string reference;
  std::vector<Alternate> alternates_found;  // farthest first, capped
  std::size_t alternate_count = 0;          // before capping
  std::size_t feasible_points = 0;
  double max_distance = 0.0;    // farthest feasible point from canonical
  double cloud_diameter = 0.0;  // L-infinity diameter of feasible points
  SearchMeta search_meta;
};

/// Scans the candidate space for feasible splits other than the reference.
///
/// Three probes feed one feasible cloud: rays from the reference along the
/// 3^7 - 1 directions of {-1, 0, 1}^7, one ray per seeded uniform sample
/// in the L-infinity box of the given radius (the sample point itself is
/// tested too), and a coarse grid over the global box 0 <= a1 <= 1,
/// 0 <= b1 <= 1 - u, 0 <= u1 <= u, |Re t1|, |Im t1| <= 2|t|,
/// |Re c|, |Im c| <= 1. Rays march in steps of `resolution` and bisect the
/// first infeasible step. Points farther than 10 * resolution from the
/// reference are alternates.
///
/// Accepts matrices satisfying the decomposition hypotheses with
/// u, |y|, |z| > 1e-3, and the exactly degenerate ones (u, y or z zero);
/// anything in between throws HypothesisViolated.
FeasibilityReport uniqueness_search(const ChoiMatrix& h,
                                    const SearchOptions& options = {});

/// H - A_eps and A_eps where A_eps = eps * E_22 of the 4x4 matrix (the
/// (1,1) entry, zero based).
struct EpsilonSplit {
  DegenerateKind kind = DegenerateKind::kUZero;
  ChoiMatrix remainder;     // H - A_eps, keeps the class of H
  ChoiMatrix perturbation;  // A_eps, both CP and co-CP
  Certificate remainder_cp;
  Certificate remainder_ccp;
  Certificate perturbation_cp;
  Certificate perturbation_ccp;
};

/// Non-unique split of a degenerate extremal matrix. Throws RangeError if
/// H is not degenerate or eps <= 0, EpsilonTooLarge if a required class
/// check fails.
EpsilonSplit epsilon_family(const ChoiMatrix& h, double eps);

/// Scalar reduction of the uniqueness argument: with p fixed, the
/// inequalities p^2 <= q r and (1-p)^2 <= (1-q)(1-r) admit only q = r = p.
struct PincerScan {
  std::size_t feasible = 0;
  std::size_t far_feasible = 0;  // |q - p| + |r - p| > threshold
  double max_spread = 0.0;
};

PincerScan scalar_pincer_scan(double p, int grid, double threshold = 2e-3);

}  // namespace posmap
