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

#include "posmap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace posmap {

namespace {

// Plane rotation parameter t = tan(theta) for the smaller rotation angle
// that annihilates an off-diagonal coupling; zeta = (a_qq - a_pp)/(2|a_pq|).
double rotation_tangent(double zeta) {
  if (std::abs(zeta) > 1e150) return 0.5 / zeta;
  const double sign = zeta >= 0.0 ? 1.0 : -1.0;
  return sign / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
}

template <std::size_t N>
void fix_phase(Vector<N>& v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (std::abs(v[i]) > std::abs(v[k]) * (1.0 + 1e-12)) k = i;
  const double mag = std::abs(v[k]);
  if (mag == 0.0) return;
  const Complex phase = std::conj(v[k]) / mag;
  for (auto& x : v) x *= phase;
  v[k] = mag;
}

}  // namespace

template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const Matrix<N>& m) {
  Matrix<N> a = (m + m.adjoint()) * 0.5;
  Matrix<N> v = Matrix<N>::identity();
  const double scale = a.frobenius();

  for (int sweep = 0; sweep < defaults::kEigenMaxSweeps && scale > 0.0;
       ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= defaults::kEigenConvergence * scale) break;

    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex e = a(p, q) / mag;
        const double t =
            rotation_tangent((a(q, q).real() - a(p, p).real()) / (2.0 * mag));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, conj(e)) * [[c, s], [-s, c]] on the (p, q) plane.
        const Complex gpp = c, gpq = s;
        const Complex gqp = -s * std::conj(e), gqq = c * std::conj(e);

        for (std::size_t k = 0; k < N; ++k) {  // a <- a G
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < N; ++k) {  // a <- G* a
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < N; ++k) {  // v <- v G
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    Vector<N> col = v.column(order[k]);
    fix_phase(col);
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = col[r];
  }
  return out;
}

template <std::size_t N>
std::array<double, N> singular_values(const Matrix<N>& m) {
  // One-sided Jacobi: orthogonalize columns; their norms are the singular
  // values. Column phases are absorbed so each rotation is real.
  std::array<Vector<N>, N> col;
  for (std::size_t j = 0; j < N; ++j) col[j] = m.column(j);

  for (int sweep = 0; sweep < defaults::kEigenMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double alpha = std::norm(norm(col[p]));
        const double beta = std::norm(norm(col[q]));
        const Complex gamma = inner(col[p], col[q]);
        const double mag = std::abs(gamma);
        if (mag == 0.0 || mag <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex e = gamma / mag;
        const double t = rotation_tangent((beta - alpha) / (2.0 * mag));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const Complex xp = col[p][k];
          const Complex xq = col[q][k] * std::conj(e);
          col[p][k] = c * xp - s * xq;
          col[q][k] = s * xp + c * xq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, N> sv;
  for (std::size_t j = 0; j < N; ++j) sv[j] = norm(col[j]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

template <std::size_t N>
Certificate psd_check(const Matrix<N>& m, double tol) {
  const double herm = m.hermiticity_residual();
  if (herm > tol) throw NotHermitian(herm);

  const auto eig = hermitian_eigen(m);
  Certificate cert;
  cert.margin = eig.values[0];
  cert.conditions.push_back({"lambda_min>=0", eig.values[0], eig.values[0] >= -tol});
  if (eig.values[0] >= -tol) {
    cert.verdict = Verdict::kPass;
    return cert;
  }
  cert.verdict = Verdict::kFail;
  cert.detail = "negative eigenvalue";
  Witness w;
  const auto v = eig.vectors.column(0);
  w.vector.assign(v.begin(), v.end());
  cert.witness = std::move(w);
  return cert;
}

template <std::size_t N>
int rank_estimate(const Matrix<N>& m, double tol) {
  const auto sv = singular_values(m);
  if (sv[0] == 0.0) return 0;
  return static_cast<int>(std::count_if(
      sv.begin(), sv.end(), [&](double s) { return s > tol * sv[0]; }));
}

Mat2 complete_to_unitary(const Vec2& v, ColumnPosition position) {
  const double dev = std::abs(norm(v) - 1.0);
  if (!is_finite(v[0]) || !is_finite(v[1])) throw NonFiniteError("vector");
  if (dev > defaults::kUnitVectorTol) throw NotUnitVector(dev);

  Vec2 other{-std::conj(v[1]), std::conj(v[0])};
  const std::size_t lead = std::abs(other[0]) > 1e-14 ? 0 : 1;
  const Complex phase = std::conj(other[lead]) / std::abs(other[lead]);
  for (auto& x : other) x *= phase;
  other[lead] = other[lead].real();

  const Vec2& first = position == ColumnPosition::kFirst ? v : other;
  const Vec2& second = position == ColumnPosition::kFirst ? other : v;
  return Mat2{{first[0], second[0]}, {first[1], second[1]}};
}

Certificate certificate_from_conditions(std::vector<Condition> conditions,
                                        double tol) {
  Certificate cert;
  double smallest = conditions.empty() ? 0.0 : conditions.front().margin;
  const Condition* failed = nullptr;
  for (auto& c : conditions) {
    c.holds = c.margin >= -tol;
    smallest = std::min(smallest, c.margin);
    if (!c.holds && failed == nullptr) failed = &c;
  }
  if (failed != nullptr) {
    cert.verdict = Verdict::kFail;
    cert.margin = failed->margin;
    cert.detail = failed->name;
    cert.witness = Witness{{}, std::nullopt, failed->name};
  } else {
    cert.verdict = Verdict::kPass;
    cert.margin = smallest;
  }
  cert.conditions = std::move(conditions);
  return cert;
}

template HermitianEigen<2> hermitian_eigen(const Matrix<2>&);
template HermitianEigen<4> hermitian_eigen(const Matrix<4>&);
template std::array<double, 2> singular_values(const Matrix<2>&);
template std::array<double, 4> singular_values(const Matrix<4>&);
template Certificate psd_check(const Matrix<2>&, double);
template Certificate psd_check(const Matrix<4>&, double);
template int rank_estimate(const Matrix<2>&, double);
template int rank_estimate(const Matrix<4>&, double);

}  // namespace posmap
