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

#include "posmap/certificate.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

namespace defaults {
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kRankTol = 1e-9;  // relative to the largest value
inline constexpr double kUnitVectorTol = 1e-12;
inline constexpr double kEigenConvergence = 1e-13;
inline constexpr int kEigenMaxSweeps = 64;
}  // namespace defaults

template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};  // ascending
  Matrix<N> vectors;               // column k pairs with values[k]
};

/// Cyclic complex Jacobi eigensolver. Only the Hermitian part of `m` is
/// used; iterates until the off-diagonal Frobenius norm falls below
/// kEigenConvergence relative to ||m||_F or the sweep cap is hit.
template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const Matrix<N>& m);

/// Singular values in descending order (one-sided Jacobi).
template <std::size_t N>
std::array<double, N> singular_values(const Matrix<N>& m);

/// PASS iff lambda_min(m) >= -tol. Margin is lambda_min; on FAIL the
/// witness is the unit eigenvector of lambda_min.
/// Throws NotHermitian when max|m - m*| > tol.
template <std::size_t N>
Certificate psd_check(const Matrix<N>& m, double tol = defaults::kPsdTol);

/// Number of singular values above tol * sigma_max.
template <std::size_t N>
int rank_estimate(const Matrix<N>& m, double tol = defaults::kRankTol);

template <std::size_t N>
bool is_psd(const Matrix<N>& m, double tol = defaults::kPsdTol) {
  return psd_check(m, tol).passed();
}

enum class ColumnPosition { kFirst, kSecond };

/// Unitary U whose designated column is v. The other column is
/// (-conj(v2), conj(v1)) rotated so that its first nonzero entry is real
/// positive. Throws NotUnitVector unless |‖v‖ - 1| <= 1e-12.
Mat2 complete_to_unitary(const Vec2& v, ColumnPosition position);

extern template HermitianEigen<2> hermitian_eigen(const Matrix<2>&);
extern template HermitianEigen<4> hermitian_eigen(const Matrix<4>&);
extern template std::array<double, 2> singular_values(const Matrix<2>&);
extern template std::array<double, 4> singular_values(const Matrix<4>&);
extern template Certificate psd_check(const Matrix<2>&, double);
extern template Certificate psd_check(const Matrix<4>&, double);
extern template int rank_estimate(const Matrix<2>&, double);
extern template int rank_estimate(const Matrix<4>&, double);

}  // namespace posmap
