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

#include "posmap/choi.hpp"

namespace posmap {

Mat2 matrix_unit(std::size_t i, std::size_t j) {
  Mat2 e;
  e(i, j) = 1.0;
  return e;
}

Mat2 projector(const Vec2& xi) {
  const Vec2 n = normalized(xi);
  return Mat2::outer(n, n);
}

ChoiMatrix ChoiMatrix::from_blocks(const Mat2& b00, const Mat2& b01,
                                   const Mat2& b10, const Mat2& b11) {
  return choi_from_units({b00, b01, b10, b11});
}

Mat2 ChoiMatrix::block(std::size_t i, std::size_t j) const {
  Mat2 b;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) b(r, c) = flat_(2 * i + r, 2 * j + c);
  return b;
}

ChoiMatrix choi_from_units(const std::array<Mat2, 4>& images) {
  Mat4 flat;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Mat2& b = images[2 * i + j];
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) flat(2 * i + r, 2 * j + c) = b(r, c);
    }
  return ChoiMatrix(flat);
}

ChoiMatrix choi_from_action(const MapAction& phi) {
  return choi_from_units({phi(matrix_unit(0, 0)), phi(matrix_unit(0, 1)),
                          phi(matrix_unit(1, 0)), phi(matrix_unit(1, 1))});
}

Mat2 apply_map(const ChoiMatrix& h, const Mat2& a) {
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          out(r, c) += aij * h(2 * i + r, 2 * j + c);
    }
  return out;
}

ChoiMatrix partial_transpose(const ChoiMatrix& h) {
  return ChoiMatrix::from_blocks(h.block(0, 0), h.block(1, 0), h.block(0, 1),
                                 h.block(1, 1));
}

ChoiMatrix conjugate(const ChoiMatrix& h, const Mat2& v, const Mat2& w,
                     double tol) {
  if (const double r = v.unitarity_residual(); r > tol) throw NotUnitary(r);
  if (const double r = w.unitarity_residual(); r > tol) throw NotUnitary(r);

  // Block (i, j) is V* phi(w_i w_j*) V with w_i the columns of W.
  const Mat2 vd = v.adjoint();
  std::array<Mat2, 4> images;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Mat2 rotated = Mat2::outer(w.column(i), w.column(j));
      images[2 * i + j] = vd * apply_map(h, rotated) * v;
    }
  return choi_from_units(images);
}

double face_residual(const ChoiMatrix& h, const Vec2& xi, const Vec2& eta) {
  return norm(apply_map(h, projector(xi)) * normalized(eta));
}

FaceFrame make_face_frame(const Vec2& xi, const Vec2& eta) {
  FaceFrame frame;
  frame.xi = normalized(xi);
  frame.eta = normalized(eta);
  frame.w = complete_to_unitary(frame.xi, ColumnPosition::kSecond);
  frame.v = complete_to_unitary(frame.eta, ColumnPosition::kFirst);
  return frame;
}

Canonicalized canonicalize(const ChoiMatrix& h, const Vec2& xi,
                           const Vec2& eta, double tol) {
  if (const double r = face_residual(h, xi, eta); r > tol) throw NotInFace(r);
  FaceFrame frame = make_face_frame(xi, eta);
  return {conjugate(h, frame.v, frame.w), frame};
}

}  // namespace posmap
