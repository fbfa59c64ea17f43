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

#include <optional>
#include <string>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

enum class Verdict { kPass, kFail };

inline const char* to_string(Verdict v) {
  return v == Verdict::kPass ? "PASS" : "FAIL";
}

/// Signed slack of one inequality: rhs - lhs, negative when violated.
struct Condition {
  std::string name;
  double margin = 0.0;
  bool holds = true;
};

/// Evidence attached to a failed test: a unit vector, the reduced 2x2
/// matrix it produces, and/or the name of a violated minor.
struct Witness {
  std::vector<Complex> vector;
  std::optional<Mat2> reduced;
  std::string minor;
};

struct Certificate {
  Verdict verdict = Verdict::kPass;
  double margin = 0.0;
  std::optional<Witness> witness;
  std::string detail;
  std::vector<Condition> conditions;

  bool passed() const noexcept { return verdict == Verdict::kPass; }

  const Condition* condition(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Folds a list of slack conditions into a certificate. The margin is the
/// slack of the first violated condition, or the smallest slack on PASS.
Certificate certificate_from_conditions(std::vector<Condition> conditions,
                                        double tol);

}  // namespace posmap
