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

#include <stdexcept>
#include <string>
#include <utility>

namespace posmap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A NaN or infinite value reached a public constructor.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Errors that carry the offending residual magnitude.
class ResidualError : public Error {
 public:
  ResidualError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotHermitian : public ResidualError {
 public:
  explicit NotHermitian(double residual)
      : ResidualError("matrix is not Hermitian", residual) {}
};

class NotUnitary : public ResidualError {
 public:
  explicit NotUnitary(double residual)
      : ResidualError("matrix is not unitary", residual) {}
};

class NotUnitVector : public ResidualError {
 public:
  explicit NotUnitVector(double residual)
      : ResidualError("vector is not of unit norm", residual) {}
};

class NotInFace : public ResidualError {
 public:
  explicit NotInFace(double residual)
      : ResidualError("map does not annihilate eta on P_xi", residual) {}
};

class NotCanonicalForm : public ResidualError {
 public:
  NotCanonicalForm(const std::string& where, double residual)
      : ResidualError("matrix is not in canonical face form: " + where,
                      residual) {}
};

/// Extremal parameters violate one of their defining relations.
class InvalidParams : public Error {
 public:
  InvalidParams(std::string condition, const std::string& what)
      : Error("invalid extremal parameters: " + what),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (JSON documents, complex literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The decomposition hypotheses (u > 0, y != 0, z != 0, b > 0) fail.
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(std::string reason)
      : Error("decomposition hypothesis violated: " + reason),
        reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

class NotExtremal : public Error {
 public:
  explicit NotExtremal(const std::string& detail)
      : Error("matrix is not an extremal unital positive map: " + detail) {}
};

class EpsilonTooLarge : public Error {
 public:
  EpsilonTooLarge(double eps, const std::string& detail)
      : Error("epsilon " + std::to_string(eps) + " too large: " + detail) {}
};

}  // namespace posmap
