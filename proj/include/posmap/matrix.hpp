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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>

#include "posmap/errors.hpp"

namespace posmap {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
using Vector = std::array<Complex, N>;

using Vec2 = Vector<2>;
using Vec4 = Vector<4>;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z) {
  if (!is_finite(z)) throw NonFiniteError("non-finite complex entry");
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

/// <a, b> with the conjugate on the left argument.
template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
Vector<N> normalized(const Vector<N>& v) {
  const double n = norm(v);
  if (n == 0.0) throw NotUnitVector(1.0);
  Vector<N> out = v;
  for (auto& x : out) x /= n;
  return out;
}

template <std::size_t N>
Vector<N> basis_vector(std::size_t k) {
  Vector<N> e{};
  e[k] = 1.0;
  return e;
}

/// Dense N x N complex matrix stored row-major.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t kSize = N;

  Matrix() = default;

  /// Row-major entries; rejects NaN and infinities.
  explicit Matrix(const std::array<Complex, N * N>& entries) : a_(entries) {
    for (const auto& z : a_) require_finite(z);
  }

  Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() != N) throw RangeError("wrong number of rows");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw RangeError("wrong number of columns");
      std::size_t c = 0;
      for (const auto& z : row) {
        require_finite(z);
        a_[r * N + c++] = z;
      }
      ++r;
    }
  }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// |a><b|
  static Matrix outer(const Vector<N>& a, const Vector<N>& b) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = a[i] * std::conj(b[j]);
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a_[r * N + c];
  }

  const std::array<Complex, N * N>& entries() const { return a_; }

  Vector<N> column(std::size_t c) const {
    Vector<N> v;
    for (std::size_t r = 0; r < N; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  Complex trace() const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> out{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_hermitian(double tol) const { return hermiticity_residual() <= tol; }

  bool is_unitary(double tol) const { return unitarity_residual() <= tol; }

  /// max |M - M*|
  double hermiticity_residual() const {
    double r = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  /// max(|U*U - I|, |UU* - I|)
  double unitarity_residual() const {
    const Matrix id = identity();
    return std::max((adjoint() * *this - id).max_abs(),
                    (*this * adjoint() - id).max_abs());
  }

 private:
  std::array<Complex, N * N> a_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).max_abs();
}

template <std::size_t N>
std::ostream& operator<<(std::ostream& os, const Matrix<N>& m) {
  for (std::size_t i = 0; i < N; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < N; ++j) {
      os << m(i, j) << (j + 1 < N ? ", " : "");
    }
    os << (i + 1 < N ? "\n" : "]");
  }
  return os;
}

}  // namespace posmap
