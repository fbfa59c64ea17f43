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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posmap/certify.hpp"
#include "posmap/decompose.hpp"
#include "posmap/extremal.hpp"
#include "posmap/json_io.hpp"
#include "posmap/uniqueness.hpp"

namespace py = pybind11;
using namespace posmap;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

template <std::size_t N>
ComplexArray to_array(const Matrix<N>& m) {
  ComplexArray out({N, N});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) v(r, c) = m(r, c);
  return out;
}

template <std::size_t N>
Matrix<N> from_array(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != static_cast<py::ssize_t>(N) ||
      a.shape(1) != static_cast<py::ssize_t>(N))
    throw py::value_error("expected a " + std::to_string(N) + "x" + std::to_string(N) + " array");
  auto v = a.unchecked<2>();
  std::array<Complex, N * N> e;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) e[r * N + c] = v(r, c);
  return Matrix<N>(e);
}

ChoiMatrix choi(const ComplexArray& a) { return ChoiMatrix(from_array<4>(a)); }

Vec2 vec2(const std::vector<Complex>& v) {
  if (v.size() != 2) throw py::value_error("expected a vector of length 2");
  return {v[0], v[1]};
}

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["vector"] = w.vector;
  d["matrix"] = w.reduced ? py::object(to_array(*w.reduced)) : py::object(py::none());
  d["minor"] = w.minor;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Positive maps on 2x2 matrices: certificates, extremal maps, decompositions";
  m.attr("__version__") = POSMAP_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated", base.ptr());
  py::register_exception<NotExtremal>(m, "NotExtremal", base.ptr());
  py::register_exception<InvalidParams>(m, "InvalidParams", base.ptr());

  py::class_<Condition>(m, "Condition")
      .def_readonly("name", &Condition::name)
      .def_readonly("margin", &Condition::margin)
      .def_readonly("holds", &Condition::holds)
      .def("__repr__", [](const Condition& c) {
        return "<Condition " + c.name + " margin=" + std::to_string(c.margin) + ">";
      });

  py::class_<Certificate>(m, "Certificate")
      .def_property_readonly("verdict", [](const Certificate& c) { return std::string(to_string(c.verdict)); })
      .def_property_readonly("passed", &Certificate::passed)
      .def_readonly("margin", &Certificate::margin)
      .def_readonly("detail", &Certificate::detail)
      .def_readonly("conditions", &Certificate::conditions)
      .def_property_readonly("witness", [](const Certificate& c) -> py::object {
        if (!c.witness) return py::none();
        return witness_dict(*c.witness);
      })
      .def("__bool__", &Certificate::passed)
      .def("__repr__", [](const Certificate& c) {
        return std::string("<Certificate ") + to_string(c.verdict) + " margin=" + std::to_string(c.margin) + ">";
      });

  py::enum_<TBranch>(m, "TBranch").value("PLUS", TBranch::kPlus).value("MINUS", TBranch::kMinus);

  py::class_<ExtremalParams>(m, "ExtremalParams")
      .def(py::init([](double u, Complex y, Complex z, TBranch branch) {
             return ExtremalParams{u, y, z, branch};
           }),
           py::arg("u"), py::arg("y"), py::arg("z"), py::arg("t_branch") = TBranch::kPlus)
      .def_readwrite("u", &ExtremalParams::u)
      .def_readwrite("y", &ExtremalParams::y)
      .def_readwrite("z", &ExtremalParams::z)
      .def_readwrite("t_branch", &ExtremalParams::t_branch)
      .def_property_readonly("b", &ExtremalParams::b)
      .def_property_readonly("t", &ExtremalParams::t)
      .def("validate", &ExtremalParams::validate, py::arg("tol") = 1e-10);

  m.def("build_extremal", [](const ExtremalParams& p) { return to_array(build_extremal(p).flat()); });
  m.def("example_family", [](double s) { return to_array(example_family(s).flat()); }, py::arg("s"));
  m.def("example_params", &example_params, py::arg("s"));
  m.def(
      "degenerate_case",
      [](const std::string& kind, Complex param) {
        return to_array(degenerate_case(degenerate_kind_from_string(kind), param).flat());
      },
      py::arg("kind"), py::arg("param") = Complex{});
  m.def(
      "random_extremal_params",
      [](std::uint64_t seed, double u_lo, double u_hi, double floor) {
        std::mt19937_64 rng(seed);
        return random_extremal_params(rng, u_lo, u_hi, floor);
      },
      py::arg("seed"), py::arg("u_lo") = 0.05, py::arg("u_hi") = 0.95, py::arg("floor") = 1e-3);

  m.def("apply_map", [](const ComplexArray& h, const ComplexArray& a) {
    return to_array(apply_map(choi(h), from_array<2>(a)));
  });
  m.def("partial_transpose", [](const ComplexArray& h) { return to_array(partial_transpose(choi(h)).flat()); });
  m.def(
      "psd_check", [](const ComplexArray& a, double tol) { return psd_check(from_array<4>(a), tol); },
      py::arg("m"), py::arg("tol") = defaults::kPsdTol);
  m.def(
      "rank_estimate", [](const ComplexArray& a, double tol) { return rank_estimate(from_array<4>(a), tol); },
      py::arg("m"), py::arg("tol") = defaults::kRankTol);

  m.def(
      "block_positive",
      [](const ComplexArray& h, int polar, int azimuthal, double tol) {
        BlochGrid g;
        g.polar = polar;
        g.azimuthal = azimuthal;
        return block_positive(choi(h), g, tol);
      },
      py::arg("h"), py::arg("polar") = 96, py::arg("azimuthal") = 192, py::arg("tol") = defaults::kPsdTol);
  m.def("cp_check", [](const ComplexArray& h, double tol) { return cp_check(choi(h), tol); },
        py::arg("h"), py::arg("tol") = defaults::kPsdTol);
  m.def("ccp_check", [](const ComplexArray& h, double tol) { return ccp_check(choi(h), tol); },
        py::arg("h"), py::arg("tol") = defaults::kPsdTol);
  m.def(
      "face_membership",
      [](const ComplexArray& h, const std::vector<Complex>& xi, const std::vector<Complex>& eta, double tol) {
        return face_membership(choi(h), vec2(xi), vec2(eta), tol);
      },
      py::arg("h"), py::arg("xi"), py::arg("eta"), py::arg("tol") = 1e-9);
  m.def("canonical_cp_conditions", [](const ComplexArray& h, double tol) { return canonical_cp_conditions(choi(h), tol); },
        py::arg("h"), py::arg("tol") = 1e-9);
  m.def("canonical_ccp_conditions", [](const ComplexArray& h, double tol) { return canonical_ccp_conditions(choi(h), tol); },
        py::arg("h"), py::arg("tol") = 1e-9);
  m.def("face_form_inequalities", [](const ComplexArray& h, double tol) { return face_form_inequalities(choi(h), tol); },
        py::arg("h"), py::arg("tol") = 1e-9);
  m.def("validate_extremal", [](const ComplexArray& h, double tol) { return validate_extremal(choi(h), tol); },
        py::arg("h"), py::arg("tol") = 1e-10);

  m.def(
      "decompose_extremal",
      [](const ComplexArray& h) {
        const DecompositionPair p = decompose_extremal(choi(h));
        py::dict d;
        d["h1"] = to_array(p.h1.flat());
        d["h2"] = to_array(p.h2.flat());
        d["kraus1"] = to_array(p.kraus1);
        d["kraus2"] = to_array(p.kraus2);
        d["c"] = p.c;
        d["y1"] = p.y1;
        d["z1"] = p.z1;
        return d;
      },
      py::arg("h"));
  m.def(
      "verify_decomposition",
      [](const ComplexArray& h, const ComplexArray& h1, const ComplexArray& h2, double tol) {
        DecompositionPair p;
        p.h1 = choi(h1);
        p.h2 = choi(h2);
        return verify_decomposition(choi(h), p, tol);
      },
      py::arg("h"), py::arg("h1"), py::arg("h2"), py::arg("tol") = 1e-9);

  m.def(
      "uniqueness_search",
      [](const ComplexArray& h, double radius, double resolution, std::size_t samples,
         std::uint64_t seed, double tol, int global_grid) {
        SearchOptions o;
        o.radius = radius;
        o.resolution = resolution;
        o.samples = samples;
        o.seed = seed;
        o.tol = tol;
        o.global_grid = global_grid;
        const FeasibilityReport r = uniqueness_search(choi(h), o);
        return py::module_::import("json").attr("loads")(json_io::to_json(r).dump());
      },
      py::arg("h"), py::arg("radius") = 0.2, py::arg("resolution") = 1e-2, py::arg("samples") = 100000,
      py::arg("seed") = 0, py::arg("tol") = 1e-9, py::arg("global_grid") = 7);
  m.def(
      "epsilon_family",
      [](const ComplexArray& h, double eps) {
        const EpsilonSplit s = epsilon_family(choi(h), eps);
        py::dict d;
        d["kind"] = std::string(to_string(s.kind));
        d["remainder"] = to_array(s.remainder.flat());
        d["perturbation"] = to_array(s.perturbation.flat());
        d["remainder_cp"] = s.remainder_cp;
        d["remainder_ccp"] = s.remainder_ccp;
        d["perturbation_cp"] = s.perturbation_cp;
        d["perturbation_ccp"] = s.perturbation_ccp;
        return d;
      },
      py::arg("h"), py::arg("eps"));
}
