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

#include "posmap/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace posmap {

namespace {

Vec2 bloch_vector(double theta, double phi) {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

// Smallest eigenvalue of a 2x2 Hermitian matrix.
double lambda_min2(const Mat2& m) {
  const double p = m(0, 0).real(), q = m(1, 1).real();
  const double half = 0.5 * (p - q);
  return 0.5 * (p + q) - std::hypot(half, std::abs(m(0, 1)));
}

struct Probe {
  double value;
  double theta;
  double phi;
};

}  // namespace

Mat2 reduced_matrix(const ChoiMatrix& h, const Vec2& v) {
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = inner(v, h.block(i, j) * v);
  return m;
}

Certificate block_positive(const ChoiMatrix& h, const BlochGrid& grid,
                           double tol) {
  if (const double r = h.flat().hermiticity_residual(); r > tol)
    throw NotHermitian(r);
  if (grid.polar < 2 || grid.azimuthal < 1 || grid.starts < 1)
    throw RangeError("Bloch grid too coarse");

  std::array<Mat2, 4> blocks{h.block(0, 0), h.block(0, 1), h.block(1, 0),
                             h.block(1, 1)};
  auto objective = [&](double theta, double phi) {
    const Vec2 v = bloch_vector(theta, phi);
    Mat2 m;
    for (std::size_t k = 0; k < 4; ++k) m(k / 2, k % 2) = inner(v, blocks[k] * v);
    return lambda_min2(m);
  };

  const double d_theta = std::numbers::pi / (grid.polar - 1);
  const double d_phi = 2.0 * std::numbers::pi / grid.azimuthal;

  std::vector<Probe> probes;
  probes.reserve(static_cast<std::size_t>(grid.polar) * grid.azimuthal);
  for (int i = 0; i < grid.polar; ++i)
    for (int j = 0; j < grid.azimuthal; ++j) {
      const double theta = i * d_theta, phi = j * d_phi;
      probes.push_back({objective(theta, phi), theta, phi});
    }
  const auto starts =
      std::min<std::size_t>(static_cast<std::size_t>(grid.starts), probes.size());
  // stable: equal values keep grid order
  std::stable_sort(probes.begin(), probes.end(),
                   [](const Probe& a, const Probe& b) { return a.value < b.value; });

  Probe best = probes.front();
  for (std::size_t s = 0; s < starts; ++s) {
    Probe cur = probes[s];
    double ht = d_theta, hp = d_phi;
    for (int it = 0; it < grid.refine_iterations; ++it) {
      const std::array<std::array<double, 2>, 4> moves{
          {{ht, 0.0}, {-ht, 0.0}, {0.0, hp}, {0.0, -hp}}};
      Probe step = cur;
      for (const auto& mv : moves) {
        const double th = cur.theta + mv[0], ph = cur.phi + mv[1];
        const double val = objective(th, ph);
        if (val < step.value) step = {val, th, ph};
      }
      if (step.value < cur.value) {
        cur = step;
      } else {
        ht *= 0.5;
        hp *= 0.5;
      }
    }
    if (cur.value < best.value) best = cur;
  }

  Certificate cert;
  cert.margin = best.value;
  cert.conditions.push_back({"min_v lambda_min(M(v))>=0", best.value,
                             best.value >= -tol});
  const Vec2 v = bloch_vector(best.theta, best.phi);
  if (best.value >= -tol) {
    cert.verdict = Verdict::kPass;
    return cert;
  }
  cert.verdict = Verdict::kFail;
  cert.detail = "reduced matrix not positive";
  cert.witness = Witness{{v.begin(), v.end()}, reduced_matrix(h, v), ""};
  return cert;
}

Certificate cp_check(const ChoiMatrix& h, double tol) {
  Certificate cert = psd_check(h.flat(), tol);
  if (!cert.passed()) cert.detail = "Choi matrix has a negative eigenvalue";
  return cert;
}

Certificate ccp_check(const ChoiMatrix& h, double tol) {
  Certificate cert = psd_check(partial_transpose(h).flat(), tol);
  if (!cert.passed())
    cert.detail = "partial transpose has a negative eigenvalue";
  return cert;
}

Certificate face_membership(const ChoiMatrix& h, const Vec2& xi,
                            const Vec2& eta, double tol) {
  const Vec2 image = apply_map(h, projector(xi)) * normalized(eta);
  const double residual = norm(image);
  Certificate cert;
  cert.margin = residual;
  cert.conditions.push_back({"phi(P_xi)eta=0", -residual, residual <= tol});
  if (residual <= tol) return cert;
  cert.verdict = Verdict::kFail;
  cert.detail = "phi(P_xi)eta != 0";
  const Vec2 w = normalized(image);
  cert.witness = Witness{{w.begin(), w.end()}, std::nullopt, ""};
  return cert;
}

CanonicalEntries read_canonical(const ChoiMatrix& h, double pattern_tol) {
  const Mat4& m = h.flat();
  if (const double r = m.hermiticity_residual(); r > pattern_tol)
    throw NotCanonicalForm("not Hermitian", r);
  constexpr std::array<std::array<std::size_t, 2>, 3> kZeros{
      {{0, 2}, {2, 2}, {2, 3}}};
  for (const auto& [r, c] : kZeros)
    if (const double v = std::abs(m(r, c)); v > pattern_tol)
      throw NotCanonicalForm(
          "entry (" + std::to_string(r) + "," + std::to_string(c) + ") != 0", v);

  CanonicalEntries e;
  e.a = m(0, 0).real();
  e.b = m(1, 1).real();
  e.u = m(3, 3).real();
  e.c = m(0, 1);
  e.y = m(0, 3);
  e.z = m(2, 1);
  e.t = m(1, 3);
  return e;
}

Certificate canonical_cp_conditions(const ChoiMatrix& h, double tol) {
  const CanonicalEntries e = read_canonical(h);
  const double y2 = std::norm(e.y), t2 = std::norm(e.t), c2 = std::norm(e.c);
  const double det3 = e.b * (e.a * e.u - y2) +
                      2.0 * (e.c * e.t * std::conj(e.y)).real() - e.a * t2 -
                      e.u * c2;
  return certificate_from_conditions(
      {
          {"z=0", -std::abs(e.z)},
          {"|y|^2<=au", e.a * e.u - y2},
          {"|t|^2<=bu", e.b * e.u - t2},
          {"|c|^2<=ab", e.a * e.b - c2},
          {"det3>=0", det3},
          {"a>=0", e.a},
          {"b>=0", e.b},
          {"u>=0", e.u},
      },
      tol);
}

Certificate canonical_ccp_conditions(const ChoiMatrix& h, double tol) {
  const CanonicalEntries e = read_canonical(h);
  const double z2 = std::norm(e.z), t2 = std::norm(e.t), c2 = std::norm(e.c);
  const double det3 = e.b * (e.a * e.u - z2) +
                      2.0 * (e.c * std::conj(e.t) * std::conj(e.z)).real() -
                      e.a * t2 - e.u * c2;
  return certificate_from_conditions(
      {
          {"y=0", -std::abs(e.y)},
          {"|z|^2<=au", e.a * e.u - z2},
          {"|t|^2<=bu", e.b * e.u - t2},
          {"|c|^2<=ab", e.a * e.b - c2},
          {"det3>=0", det3},
          {"a>=0", e.a},
          {"b>=0", e.b},
          {"u>=0", e.u},
      },
      tol);
}

Certificate face_form_inequalities(const ChoiMatrix& h, double tol) {
  const CanonicalEntries e = read_canonical(h);
  const double yz = std::abs(e.y) + std::abs(e.z);
  return certificate_from_conditions(
      {
          {"|c|^2<=ab", e.a * e.b - std::norm(e.c)},
          {"|t|^2<=bu", e.b * e.u - std::norm(e.t)},
          {"(|y|+|z|)^2<=au", e.a * e.u - yz * yz},
      },
      tol);
}

}  // namespace posmap
