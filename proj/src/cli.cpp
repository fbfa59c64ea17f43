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

#include "posmap/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "posmap/certify.hpp"
#include "posmap/decompose.hpp"
#include "posmap/extremal.hpp"
#include "posmap/json_io.hpp"
#include "posmap/uniqueness.hpp"

#ifndef POSMAP_VERSION
#define POSMAP_VERSION "0.0.0"
#endif

namespace posmap::cli {

namespace {

using json_io::Json;
using json_io::to_json;

struct GlobalOptions {
  std::optional<double> tol;
  std::uint64_t seed = 0;
  bool pretty = false;
  std::string out_file;
};

struct GenerateOptions {
  std::optional<double> example_s;
  std::optional<double> u;
  std::string y = "0";
  std::string z = "0";
  std::string t_branch = "+";
  std::string degenerate;
  bool random = false;
};

struct CertifyOptions {
  std::string matrix;
  bool positive = false, cp = false, ccp = false, face = false;
  bool cp_conditions = false, ccp_conditions = false, face_form = false;
  bool extremal = false, all = false;
  std::string xi = "0,1", eta = "1,0";
  int grid_polar = 96, grid_azimuthal = 192;
};

struct DecomposeOptions {
  std::string matrix;
  bool random = false;
};

struct ExploreOptions {
  std::string matrix;
  double radius = 0.2;
  double resolution = 1e-2;
  std::size_t samples = 100000;
  double eps = 0.01;
  int global_grid = 7;
  std::size_t max_alternates = 100;
};

/// Outcome of one subcommand: the result payload, its exit code, and the
/// bytes that identify the input for hashing.
struct Outcome {
  Json result;
  int exit_code = kExitPass;
  std::string input_bytes;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ChoiMatrix load_matrix(const std::string& path, std::string& bytes) {
  const std::string text = read_input(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  ChoiMatrix h = json_io::choi_from_document(doc);
  bytes = to_json(h).dump();
  return h;
}

Vec2 parse_vec2(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("vector needs two comma-separated entries");
  return {json_io::parse_complex(text.substr(0, comma)),
          json_io::parse_complex(text.substr(comma + 1))};
}

int verdict_code(bool all_pass) { return all_pass ? kExitPass : kExitFail; }

Outcome cmd_generate(const GenerateOptions& o, const GlobalOptions& g) {
  const int modes = (o.example_s ? 1 : 0) + (o.u ? 1 : 0) +
                    (!o.degenerate.empty() ? 1 : 0) + (o.random ? 1 : 0);
  if (modes != 1)
    throw RangeError("choose exactly one of --example-s, --u, --degenerate, --random");

  Json result;
  ChoiMatrix h;
  if (o.example_s) {
    result["mode"] = "example";
    result["s"] = *o.example_s;
    result["params"] = to_json(example_params(*o.example_s));
    h = example_family(*o.example_s);
  } else if (o.u) {
    ExtremalParams p;
    p.u = *o.u;
    p.y = json_io::parse_complex(o.y);
    p.z = json_io::parse_complex(o.z);
    if (o.t_branch != "+" && o.t_branch != "-") throw ParseError("--t-branch must be + or -");
    p.t_branch = o.t_branch == "+" ? TBranch::kPlus : TBranch::kMinus;
    result["mode"] = "params";
    result["params"] = to_json(p);
    h = build_extremal(p);
  } else if (!o.degenerate.empty()) {
    const DegenerateKind kind = degenerate_kind_from_string(o.degenerate);
    Complex param{};
    if (kind == DegenerateKind::kYZero) param = json_io::parse_complex(o.z);
    if (kind == DegenerateKind::kZZero) param = json_io::parse_complex(o.y);
    result["mode"] = "degenerate";
    result["kind"] = o.degenerate;
    result["param"] = to_json(param);
    h = degenerate_case(kind, param);
  } else {
    std::mt19937_64 rng(g.seed);
    const ExtremalParams p = random_extremal_params(rng);
    result["mode"] = "random";
    result["params"] = to_json(p);
    h = build_extremal(p);
  }
  const std::string input = result.dump();
  result["matrix"] = to_json(h);
  const Certificate cert = validate_extremal(h, g.tol.value_or(1e-10));
  result["validate_extremal"] = to_json(cert);
  return {std::move(result), verdict_code(cert.passed()), input};
}

Outcome cmd_certify(const CertifyOptions& o, const GlobalOptions& g) {
  Outcome out;
  const ChoiMatrix h = load_matrix(o.matrix, out.input_bytes);
  const bool any = o.positive || o.cp || o.ccp || o.face || o.cp_conditions ||
                   o.ccp_conditions || o.face_form || o.extremal;
  const bool all = o.all;
  const bool defaults_only = !any && !all;

  Json certs = Json::object();
  bool pass = true;
  auto record = [&](const char* name, const Certificate& c) {
    certs[name] = to_json(c);
    pass = pass && c.passed();
  };
  const double psd_tol = g.tol.value_or(defaults::kPsdTol);
  const double cond_tol = g.tol.value_or(1e-9);

  if (all || defaults_only || o.positive) {
    BlochGrid grid;
    grid.polar = o.grid_polar;
    grid.azimuthal = o.grid_azimuthal;
    record("positive", block_positive(h, grid, psd_tol));
  }
  if (all || defaults_only || o.cp) record("cp", cp_check(h, psd_tol));
  if (all || defaults_only || o.ccp) record("ccp", ccp_check(h, psd_tol));
  if (all || o.face)
    record("face", face_membership(h, parse_vec2(o.xi), parse_vec2(o.eta), cond_tol));
  if (all || o.cp_conditions) record("cp_conditions", canonical_cp_conditions(h, cond_tol));
  if (all || o.ccp_conditions) record("ccp_conditions", canonical_ccp_conditions(h, cond_tol));
  if (all || o.face_form) record("face_form", face_form_inequalities(h, cond_tol));
  if (all || o.extremal) record("extremal", validate_extremal(h, g.tol.value_or(1e-10)));

  out.result = Json{{"matrix", to_json(h)}, {"certificates", std::move(certs)}};
  out.exit_code = verdict_code(pass);
  return out;
}

Outcome cmd_decompose(const DecomposeOptions& o, const GlobalOptions& g) {
  Outcome out;
  ChoiMatrix h;
  if (o.random) {
    if (!o.matrix.empty()) throw RangeError("--random takes no matrix file");
    std::mt19937_64 rng(g.seed);
    const ExtremalParams p = random_extremal_params(rng);
    h = build_extremal(p);
    out.result["params"] = to_json(p);
    out.input_bytes = to_json(h).dump();
  } else {
    if (o.matrix.empty()) throw RangeError("decompose needs a matrix file or --random");
    h = load_matrix(o.matrix, out.input_bytes);
  }
  const DecompositionPair pair = decompose_extremal(h, g.tol.value_or(1e-10));
  const Certificate cert = verify_decomposition(h, pair, g.tol.value_or(1e-9));
  out.result["matrix"] = to_json(h);
  out.result["decomposition"] = to_json(pair);
  out.result["verify"] = to_json(cert);
  out.exit_code = verdict_code(cert.passed());
  return out;
}

Outcome cmd_explore(const ExploreOptions& o, const GlobalOptions& g) {
  if (!(o.resolution > 0.0)) throw RangeError("--resolution must be positive");
  if (!(o.radius > 0.0)) throw RangeError("--radius must be positive");
  if (o.global_grid < 1) throw RangeError("--global-grid must be at least 1");
  Outcome out;
  const ChoiMatrix h = load_matrix(o.matrix, out.input_bytes);

  SearchOptions opt;
  opt.radius = o.radius;
  opt.resolution = o.resolution;
  opt.samples = o.samples;
  opt.seed = g.seed;
  opt.tol = g.tol.value_or(1e-9);
  opt.global_grid = o.global_grid;
  opt.max_alternates = o.max_alternates;
  const FeasibilityReport report = uniqueness_search(h, opt);

  out.result["matrix"] = to_json(h);
  out.result["report"] = to_json(report);
  out.result["unique"] = report.alternate_count == 0;
  if (report.reference.rfind("trivial split", 0) == 0) {
    try {
      out.result["epsilon_family"] = to_json(epsilon_family(h, o.eps));
      out.result["epsilon_family"]["eps"] = o.eps;
    } catch (const EpsilonTooLarge& e) {
      out.result["epsilon_family"] = Json{{"eps", o.eps}, {"error", e.what()}};
    }
  }
  return out;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool is_complex_pair(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

std::string format_complex(const Json& j) {
  const double re = j[0].get<double>(), im = j[1].get<double>();
  if (im == 0.0) return format_number(re);
  std::string s = format_number(re);
  s += im < 0 ? " - " : " + ";
  s += format_number(std::abs(im)) + "i";
  return s;
}

void render(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() && value.contains("rows")) {
        os << pad << key << ":\n";
        for (const auto& row : value.at("rows")) {
          os << pad << "  [";
          bool first = true;
          for (const auto& z : row) {
            os << (first ? " " : ", ") << format_complex(z);
            first = false;
          }
          os << " ]\n";
        }
      } else if (value.is_structured() && !is_complex_pair(value)) {
        os << pad << key << ":\n";
        render(value, os, indent + 2);
      } else {
        os << pad << key << ": ";
        render(value, os, 0);
        os << "\n";
      }
    }
  } else if (j.is_array()) {
    if (is_complex_pair(j)) {
      os << format_complex(j);
      return;
    }
    for (const auto& item : j) {
      if (item.is_structured() && !is_complex_pair(item)) {
        os << pad << "-\n";
        render(item, os, indent + 2);
      } else {
        os << pad << "- ";
        render(item, os, 0);
        os << "\n";
      }
    }
  } else if (j.is_number_float()) {
    os << format_number(j.get<double>());
  } else if (j.is_string()) {
    os << j.get<std::string>();
  } else {
    os << j.dump();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, certify and decompose positive maps on 2x2 matrices",
               "posmap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", POSMAP_VERSION);

  GlobalOptions global;
  app.add_option("--tol", global.tol, "Override the default tolerance of every check");
  app.add_option("--seed", global.seed, "Seed for random instances and sampling");
  auto* json_flag = app.add_flag("--json", "Emit the JSON report (default)");
  auto* pretty_flag = app.add_flag("--pretty", global.pretty, "Emit a human-readable report");
  json_flag->excludes(pretty_flag);
  app.add_option("--out", global.out_file, "Write the report to FILE");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Build an extremal map's Choi matrix");
  generate->fallthrough();
  generate->add_option("--example-s", gen.example_s, "Example family parameter, 0 < s < 1");
  generate->add_option("--u", gen.u, "Parameter u in [0, 1]");
  generate->add_option("--y", gen.y, "Complex y, e.g. 0.3-0.1i");
  generate->add_option("--z", gen.z, "Complex z");
  generate->add_option("--t-branch", gen.t_branch, "Sign of t: + or -");
  generate->add_option("--degenerate", gen.degenerate, "u_zero | y_zero | z_zero");
  generate->add_flag("--random", gen.random, "Random valid instance from --seed");

  CertifyOptions cert;
  auto* certify = app.add_subcommand("certify", "Run positivity certificates on a matrix");
  certify->fallthrough();
  certify->add_option("matrix", cert.matrix, "Matrix JSON file, - for stdin")->required();
  certify->add_flag("--positive", cert.positive, "Block-positivity (map positivity)");
  certify->add_flag("--cp", cert.cp, "Complete positivity");
  certify->add_flag("--ccp", cert.ccp, "Complete copositivity");
  certify->add_flag("--face", cert.face, "Face membership for --xi/--eta");
  certify->add_flag("--cp-conditions", cert.cp_conditions, "Canonical-form CP minor conditions");
  certify->add_flag("--ccp-conditions", cert.ccp_conditions, "Canonical-form co-CP minor conditions");
  certify->add_flag("--face-form", cert.face_form, "Canonical-form positivity inequalities");
  certify->add_flag("--extremal", cert.extremal, "Extremal coefficient relations");
  certify->add_flag("--all", cert.all, "Every test above");
  certify->add_option("--xi", cert.xi, "Vector xi as 'a,b' (default 0,1)");
  certify->add_option("--eta", cert.eta, "Vector eta as 'a,b' (default 1,0)");
  certify->add_option("--grid-polar", cert.grid_polar, "Bloch grid polar points");
  certify->add_option("--grid-azimuthal", cert.grid_azimuthal, "Bloch grid azimuthal points");

  DecomposeOptions dec;
  auto* decompose = app.add_subcommand("decompose", "Split an extremal map into CP + co-CP parts");
  decompose->fallthrough();
  decompose->add_option("matrix", dec.matrix, "Matrix JSON file, - for stdin");
  decompose->add_flag("--random", dec.random, "Random valid instance from --seed");

  ExploreOptions exp;
  auto* explore = app.add_subcommand("explore", "Search for alternative decompositions");
  explore->fallthrough();
  explore->add_option("matrix", exp.matrix, "Matrix JSON file, - for stdin")->required();
  explore->add_option("--radius", exp.radius, "L-infinity search radius");
  explore->add_option("--resolution", exp.resolution, "Ray step and alternate threshold scale");
  explore->add_option("--samples", exp.samples, "Random rays");
  explore->add_option("--eps", exp.eps, "Epsilon for the degenerate family");
  explore->add_option("--global-grid", exp.global_grid, "Points per axis of the global scan");
  explore->add_option("--max-alternates", exp.max_alternates, "Alternates kept in the report");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  (void)json_flag;

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  Json report{{"tool", "posmap"},
              {"version", POSMAP_VERSION},
              {"command", command},
              {"args", std::vector<std::string>(args.begin() + 1, args.end())},
              {"seed", global.seed},
              {"tol", global.tol ? Json(*global.tol) : Json(nullptr)}};

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (command == "generate") outcome = cmd_generate(gen, global);
    if (command == "certify") outcome = cmd_certify(cert, global);
    if (command == "decompose") outcome = cmd_decompose(dec, global);
    if (command == "explore") outcome = cmd_explore(exp, global);
  } catch (const HypothesisViolated& e) {
    outcome.exit_code = kExitUsage;
    outcome.result = nullptr;
    report["error"] = {{"type", "HypothesisViolated"}, {"reason", e.reason()}, {"message", e.what()}};
  } catch (const Error& e) {
    outcome.exit_code = kExitUsage;
    outcome.result = nullptr;
    report["error"] = {{"type", "InputError"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    outcome.exit_code = kExitUsage;
    outcome.result = nullptr;
    report["error"] = {{"type", "InputError"}, {"message", e.what()}};
  }
  const auto stop = std::chrono::steady_clock::now();

  report["input_hash"] = json_io::hash_hex(outcome.input_bytes);
  report["result"] = std::move(outcome.result);
  report["exit_code"] = outcome.exit_code;
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(stop - start).count();

  if (report.contains("error"))
    err << "posmap " << command << ": " << report["error"]["message"].get<std::string>()
        << "\n";

  std::ostringstream rendered;
  if (global.pretty)
    render(report, rendered, 0);
  else
    rendered << report.dump(2) << "\n";

  if (!global.out_file.empty()) {
    std::ofstream file(global.out_file);
    if (!file) {
      err << "posmap: cannot write '" << global.out_file << "'\n";
      return kExitUsage;
    }
    file << rendered.str();
  } else {
    out << rendered.str();
  }
  return outcome.exit_code;
}

}  // namespace posmap::cli
