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
#include <functional>

#include "posmap/linalg.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

/// Matrix unit E_ij of M_2.
Mat2 matrix_unit(std::size_t i, std::size_t j);

/// Orthogonal projection onto span{xi}; xi need not be normalized.
Mat2 projector(const Vec2& xi);

/// Choi matrix [phi(E_ij)] of a linear map M_2 -> M_2, stored as one 4x4
/// matrix. Block (i, j) occupies rows 2i..2i+1 and columns 2j..2j+1.
class ChoiMatrix {
 public:
  ChoiMatrix() = default;
  explicit ChoiMatrix(const Mat4& flat) : flat_(flat) {}

  static ChoiMatrix from_blocks(const Mat2& b00, const Mat2& b01,
                                const Mat2& b10, const Mat2& b11);

  const Mat4& flat() const { return flat_; }
  Mat2 block(std::size_t i, std::size_t j) const;
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return flat_(r, c);
  }

  friend ChoiMatrix operator+(const ChoiMatrix& a, const ChoiMatrix& b) {
    return ChoiMatrix(a.flat_ + b.flat_);
  }
  friend ChoiMatrix operator-(const ChoiMatrix& a, const ChoiMatrix& b) {
    return ChoiMatrix(a.flat_ - b.flat_);
  }
  friend bool operator==(const ChoiMatrix&, const ChoiMatrix&) = default;

 private:
  Mat4 flat_;
};

using MapAction = std::function<Mat2(const Mat2&)>;

/// Choi matrix from the images of the four matrix units, ordered
/// phi(E_11), phi(E_12), phi(E_21), phi(E_22).
ChoiMatrix choi_from_units(const std::array<Mat2, 4>& images);

/// Choi matrix of an arbitrary linear action.
ChoiMatrix choi_from_action(const MapAction& phi);

/// phi(A) = sum_ij A_ij phi(E_ij).
Mat2 apply_map(const ChoiMatrix& h, const Mat2& a);

/// Block-index swap [H_ij] -> [H_ji].
ChoiMatrix partial_transpose(const ChoiMatrix& h);

/// Choi matrix of A -> V* phi(W A W*) V. Throws NotUnitary.
ChoiMatrix conjugate(const ChoiMatrix& h, const Mat2& v, const Mat2& w,
                     double tol = defaults::kUnitaryTol);

/// ||phi(P_xi) eta|| for normalized xi and eta.
double face_residual(const ChoiMatrix& h, const Vec2& xi, const Vec2& eta);

/// Unitaries with W e2 = xi and V e1 = eta.
struct FaceFrame {
  Vec2 xi{};
  Vec2 eta{};
  Mat2 w;
  Mat2 v;
};

FaceFrame make_face_frame(const Vec2& xi, const Vec2& eta);

struct Canonicalized {
  ChoiMatrix choi;
  FaceFrame frame;
};

/// Conjugates a map of the face F_{xi,eta} into the frame where
/// phi(E_22) = u E_22 and the (0,2) entry vanishes. xi and eta are
/// normalized first. Throws NotInFace when face_residual > tol.
Canonicalized canonicalize(const ChoiMatrix& h, const Vec2& xi,
                           const Vec2& eta, double tol = 1e-9);

}  // namespace posmap
