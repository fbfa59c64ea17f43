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

// JSON encodings shared by the CLI and the Python bindings.
//
//   complex   [re, im]
//   matrix    {"rows": [[[re, im], ...], ...]}   2x2 or 4x4, row-major
//   params    {"u": real, "y": [re, im], "z": [re, im], "t_branch": "+"|"-"}
//
// Doubles are written in shortest round-trip form, so parsing an emitted
// matrix reproduces it bit for bit.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "posmap/certificate.hpp"
#include "posmap/choi.hpp"
#include "posmap/decompose.hpp"
#include "posmap/extremal.hpp"
#include "posmap/uniqueness.hpp"

namespace posmap::json_io {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

template <std::size_t N>
Json to_json(const Matrix<N>& m);

/// Throws ParseError on ragged, wrongly sized or non-finite input.
template <std::size_t N>
Matrix<N> matrix_from_json(const Json& j);

Json to_json(const ChoiMatrix& h);

/// Accepts a bare matrix object, {"matrix": ...}, or a run report whose
/// result carries a "matrix" member.
ChoiMatrix choi_from_document(const Json& doc);

Json to_json(const ExtremalParams& p);
ExtremalParams params_from_json(const Json& j);

Json to_json(const Certificate& c);
Json to_json(const DecompositionPair& pair);
Json to_json(const SplitCandidate& cand);
Json to_json(const FeasibilityReport& report);
Json to_json(const EpsilonSplit& split);

/// "1", "-0.5", "2i", "1+0i", "0.3-0.2i", "i", "-i".
Complex parse_complex(std::string_view text);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::string_view bytes);

extern template Json to_json(const Matrix<2>&);
extern template Json to_json(const Matrix<4>&);
extern template Matrix<2> matrix_from_json(const Json&);
extern template Matrix<4> matrix_from_json(const Json&);

}  // namespace posmap::json_io
