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

#include "posmap/decompose.hpp"

#include <cmath>
#include <tuple>

#include "posmap/certify.hpp"

namespace posmap {

namespace {

void check_hypotheses(const CanonicalEntries& e, double floor) {
  if (e.u <= floor) throw HypothesisViolated("u = 0");
  if (std::abs(e.y) <= floor) throw HypothesisViolated("y = 0");
  if (std::abs(e.z) <= floor) throw HypothesisViolated("z = 0");
  if (1.0 - e.u <= floor) throw HypothesisViolated("u = 1");
}

}  // namespace

std::pair<Complex, Complex> square_roots(double u, Complex y, Complex t) {
  const Complex y1 = std::sqrt(y);
  const Complex z1_bar = t / (2.0 * kI * std::sqrt(1.0 - u) * y1);
  return {y1, std::conj(z1_bar)};
}

KrausPair kraus_operators(double u, Complex y1, Complex z1) {
  const double q = std::pow(u, 0.25);
  const double r = std::sqrt(1.0 - u);
  KrausPair k;
  k.kraus1 = Mat2{{y1 / q, 0.0}, {kI * std::conj(z1) * r / q, std::conj(y1) * q}};
  k.kraus2 = Mat2{{z1 / q, 0.0}, {-kI * std::conj(y1) * r / q, std::conj(z1) * q}};
  return k;
}

KrausPair kraus_operators(const ExtremalParams& params) {
  params.validate();
  const CanonicalEntries e{1.0,        params.b(), params.u, 0.0,
                           params.y,   params.z,   params.t()};
  check_hypotheses(e, defaults::kHypothesisFloor);
  const auto [y1, z1] = square_roots(params.u, params.y, params.t());
  return kraus_operators(params.u, y1, z1);
}

DecompositionPair decompose_extremal(const ChoiMatrix& h, double tol,
                                     double floor) {
  CanonicalEntries e;
  try {
    e = read_canonical(h);
  } catch (const NotCanonicalForm& err) {
    throw NotExtremal(err.what());
  }
  const Certificate valid = validate_extremal(h, tol);
  if (!valid.passed()) throw NotExtremal(valid.detail);
  check_hypotheses(e, floor);

  const double u = e.u, b = 1.0 - u, s = std::sqrt(u);
  const double ay = std::abs(e.y), az = std::abs(e.z);
  const Complex y = e.y, z = e.z, t = e.t;
  const Complex c = -z * t / (2.0 * az * s);
  const Complex half_t = 0.5 * t;

  DecompositionPair pair;
  pair.c = c;
  pair.h1 = ChoiMatrix(Mat4{
      {ay / s, c, 0.0, y},
      {std::conj(c), az * b / s, 0.0, half_t},
      {0.0, 0.0, 0.0, 0.0},
      {std::conj(y), std::conj(half_t), 0.0, ay * s},
  });
  pair.h2 = ChoiMatrix(Mat4{
      {az / s, -c, 0.0, 0.0},
      {-std::conj(c), ay * b / s, std::conj(z), half_t},
      {0.0, z, 0.0, 0.0},
      {0.0, std::conj(half_t), 0.0, az * s},
  });
  std::tie(pair.y1, pair.z1) = square_roots(u, y, t);
  const KrausPair k = kraus_operators(u, pair.y1, pair.z1);
  pair.kraus1 = k.kraus1;
  pair.kraus2 = k.kraus2;
  return pair;
}

Certificate verify_decomposition(const ChoiMatrix& h,
                                 const DecompositionPair& pair, double tol) {
  const Vec2 xi{0.0, 1.0}, eta{1.0, 0.0};
  std::optional<Witness> psd_witness;

  auto psd_margin = [&](const Mat4& m) {
    if (const double r = m.hermiticity_residual(); r > tol) return -r;
    Certificate c = psd_check(m, tol);
    if (!c.passed() && !psd_witness) psd_witness = c.witness;
    return c.margin;
  };

  const double sum = max_abs_diff(pair.h1.flat() + pair.h2.flat(), h.flat());
  std::vector<Condition> conds{
      {"h1+h2=h", -sum},
      {"h1 completely positive", psd_margin(pair.h1.flat())},
      {"h2 completely copositive", psd_margin(partial_transpose(pair.h2).flat())},
      {"h1 in face", -face_residual(pair.h1, xi, eta)},
      {"h2 in face", -face_residual(pair.h2, xi, eta)},
  };
  Certificate cert = certificate_from_conditions(std::move(conds), tol);
  if (!cert.passed() && psd_witness &&
      (cert.detail == "h1 completely positive" ||
       cert.detail == "h2 completely copositive")) {
    psd_witness->minor = cert.detail;
    cert.witness = psd_witness;
  }
  return cert;
}

}  // namespace posmap
