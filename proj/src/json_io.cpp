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

#include "posmap/json_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace posmap::json_io {

namespace {

double parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("malformed number '" + std::string(s) + "'");
  return v;
}

double finite_number(const Json& j) {
  if (!j.is_number()) throw ParseError("expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError("non-finite number");
  return v;
}

Json vector_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return finite_number(j);
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex numbers are [re, im] pairs");
  return {finite_number(j[0]), finite_number(j[1])};
}

template <std::size_t N>
Json to_json(const Matrix<N>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < N; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

template <std::size_t N>
Matrix<N> matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows"))
    throw ParseError("matrix object needs a \"rows\" member");
  const Json& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != N)
    throw ParseError("expected " + std::to_string(N) + " rows");
  std::array<Complex, N * N> entries;
  for (std::size_t r = 0; r < N; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != N)
      throw ParseError("row " + std::to_string(r) + " must have " +
                       std::to_string(N) + " entries");
    for (std::size_t c = 0; c < N; ++c) entries[r * N + c] = complex_from_json(row[c]);
  }
  return Matrix<N>(entries);
}

Json to_json(const ChoiMatrix& h) { return to_json(h.flat()); }

ChoiMatrix choi_from_document(const Json& doc) {
  if (doc.is_object()) {
    if (doc.contains("rows")) return ChoiMatrix(matrix_from_json<4>(doc));
    if (doc.contains("matrix")) return ChoiMatrix(matrix_from_json<4>(doc.at("matrix")));
    if (doc.contains("result") && doc.at("result").is_object() &&
        doc.at("result").contains("matrix"))
      return ChoiMatrix(matrix_from_json<4>(doc.at("result").at("matrix")));
  }
  throw ParseError("no 4x4 matrix found in document");
}

Json to_json(const ExtremalParams& p) {
  return Json{{"u", p.u},
              {"y", to_json(p.y)},
              {"z", to_json(p.z)},
              {"t_branch", p.t_branch == TBranch::kPlus ? "+" : "-"}};
}

ExtremalParams params_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("params must be an object");
  ExtremalParams p;
  try {
    p.u = finite_number(j.at("u"));
    p.y = complex_from_json(j.at("y"));
    p.z = complex_from_json(j.at("z"));
  } catch (const Json::out_of_range&) {
    throw ParseError("params need u, y and z");
  }
  const std::string branch = j.value("t_branch", "+");
  if (branch != "+" && branch != "-") throw ParseError("t_branch must be + or -");
  p.t_branch = branch == "+" ? TBranch::kPlus : TBranch::kMinus;
  return p;
}

Json to_json(const Certificate& c) {
  Json out{{"verdict", to_string(c.verdict)}, {"margin", c.margin}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  if (!c.conditions.empty()) {
    Json conds = Json::array();
    for (const auto& cond : c.conditions)
      conds.push_back({{"name", cond.name}, {"margin", cond.margin}, {"holds", cond.holds}});
    out["conditions"] = std::move(conds);
  }
  if (c.witness) {
    Json w = Json::object();
    if (!c.witness->vector.empty()) w["vector"] = vector_to_json(c.witness->vector);
    if (c.witness->reduced) w["matrix"] = to_json(*c.witness->reduced);
    if (!c.witness->minor.empty()) w["minor"] = c.witness->minor;
    out["witness"] = std::move(w);
  }
  return out;
}

Json to_json(const DecompositionPair& pair) {
  return Json{{"H1", to_json(pair.h1)},  {"H2", to_json(pair.h2)},
              {"U1", to_json(pair.kraus1)}, {"U2", to_json(pair.kraus2)},
              {"c", to_json(pair.c)},    {"y1", to_json(pair.y1)},
              {"z1", to_json(pair.z1)}};
}

Json to_json(const SplitCandidate& cand) {
  return Json{{"a1", cand.a1},
              {"b1", cand.b1},
              {"u1", cand.u1},
              {"t1", to_json(cand.t1)},
              {"c", to_json(cand.c)}};
}

Json to_json(const FeasibilityReport& r) {
  Json alts = Json::array();
  for (const auto& a : r.alternates_found)
    alts.push_back({{"candidate", to_json(a.candidate)}, {"distance", a.distance}});
  const auto& o = r.search_meta.options;
  return Json{
      {"canonical", to_json(r.canonical)},
      {"reference", r.reference},
      {"alternates_found", std::move(alts)},
      {"alternate_count", r.alternate_count},
      {"feasible_points", r.feasible_points},
      {"max_distance", r.max_distance},
      {"cloud_diameter", r.cloud_diameter},
      {"search_meta",
       {{"radius", o.radius},
        {"resolution", o.resolution},
        {"samples", o.samples},
        {"seed", o.seed},
        {"tol", o.tol},
        {"global_grid", o.global_grid},
        {"grid_rays", r.search_meta.grid_rays},
        {"random_rays", r.search_meta.random_rays},
        {"global_points", r.search_meta.global_points},
        {"evaluations", r.search_meta.evaluations}}},
  };
}

Json to_json(const EpsilonSplit& s) {
  return Json{{"kind", to_string(s.kind)},
              {"remainder", to_json(s.remainder)},
              {"perturbation", to_json(s.perturbation)},
              {"remainder_cp", to_json(s.remainder_cp)},
              {"remainder_ccp", to_json(s.remainder_ccp)},
              {"perturbation_cp", to_json(s.perturbation_cp)},
              {"perturbation_ccp", to_json(s.perturbation_ccp)}};
}

Complex parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i' && text.back() != 'j') return parse_real(text);

  text.remove_suffix(1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' &&
        text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(text)};
  return {parse_real(text.substr(0, split)), imag_part(text.substr(split))};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

template Json to_json(const Matrix<2>&);
template Json to_json(const Matrix<4>&);
template Matrix<2> matrix_from_json(const Json&);
template Matrix<4> matrix_from_json(const Json&);

}  // namespace posmap::json_io
