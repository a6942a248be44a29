// pga: command-line front end for the pgakit shared library.
//
// Talks to the core exclusively through the C API in pgakit/pgakit_c.h, the
// same surface any other language binding would use.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "pgakit/pgakit_c.h"

namespace {

struct StringFree {
  void operator()(char* s) const { pga_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

int exit_code_for(pga_status status) {
  switch (status) {
    case PGA_OK: return 0;
    case PGA_ERR_VERIFY: return 1;
    default: return 2;
  }
}

int fail(pga_status status) {
  std::cerr << "error: " << pga_last_error() << "\n";
  return exit_code_for(status);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int parse_dim(const std::string& s) {
  if (s == "2d" || s == "2") return 2;
  if (s == "3d" || s == "3") return 3;
  return -1;
}

/// Built-in body specs accepted by `top` in place of a JSON literal.
std::string body_spec(const std::string& arg) {
  if (arg == "octahedral") {
    return R"({"particles":[[1,1,0,0],[1,-1,0,0],[1,0,1,0],[1,0,-1,0],[1,0,0,1],[1,0,0,-1]]})";
  }
  if (arg == "asymmetric") {
    return R"({"particles":[[1,1,0,0],[1,-1,0,0],[1,0,1.7,0],[1,0,-1.7,0],[1,0,0,2.9],[1,0,0,-2.9]]})";
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("pgakit ") + pga_version() +
               " - euclidean plane and space geometry in Cl*(2,0,1) / "
               "Cl*(3,0,1), with verification against an analytic oracle"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";

  // cayley ------------------------------------------------------------------
  auto* cayley = app.add_subcommand("cayley", "Print the basis product table");
  std::string cayley_dim;
  cayley->add_option("dim", cayley_dim, "algebra: 2d or 3d")->required();
  cayley->add_option("--out", out_path, "write to a file instead of stdout");

  // check -------------------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "Validate every construction-table formula against the oracle");
  std::string check_dim;
  int trials = 0;
  std::uint64_t seed = 1;
  check->add_option("dim", check_dim, "algebra: 2d or 3d")->required();
  check->add_option("--trials", trials,
                    "random configurations per row (default 1000 for 2d, 500 "
                    "for 3d)");
  check->add_option("--seed", seed, "random seed (default 1)");
  check->add_option("--out", out_path, "write the JSON report to a file");

  // orbit -------------------------------------------------------------------
  auto* orbit = app.add_subcommand(
      "orbit", "Kaleidoscope orbit for mirrors at dihedral angle pi/k");
  int orbit_k = 0;
  orbit->add_option("k", orbit_k, "mirror angle divisor (k >= 2)")->required();
  orbit->add_option("--out", out_path, "write the JSON report to a file");

  // screw -------------------------------------------------------------------
  auto* screw = app.add_subcommand(
      "screw", "Sample a point transported by a screw motion");
  std::string axis_json;
  double angle = 6.283185307179586476925286766559;
  double pitch = 0.0;
  int samples = 64;
  screw->add_option("axis", axis_json,
                    R"(axis spec, e.g. {"point":[0,0,0],"dir":[0,0,1]})")
      ->required();
  screw->add_option("--angle", angle, "total rotation angle (default 2 pi)");
  screw->add_option("--pitch", pitch, "translation per radian (default 0)");
  screw->add_option("--samples", samples, "number of steps (default 64)");
  screw->add_option("--format", format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  screw->add_option("--out", out_path, "write the path to a file");

  // top ---------------------------------------------------------------------
  auto* top = app.add_subcommand(
      "top", "Integrate a free rigid body and report conservation drift");
  std::string body_json, omega_json;
  double dt = 1e-3;
  long steps = 1000;
  top->add_option("body", body_json,
                  R"(body spec {"particles":[[m,x,y,z],...]}, or a built-in: )"
                  "octahedral, asymmetric")
      ->required();
  top->add_option("omega", omega_json,
                  "initial body velocity [w01,w02,w03,w23,w31,w12]")
      ->required();
  top->add_option("--dt", dt, "step size (default 1e-3)");
  top->add_option("--steps", steps, "step count (default 1000)");
  top->add_option("--format", format, "csv or json trajectory (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  top->add_option("--out", out_path,
                  "trajectory file; the summary then goes to stdout");

  // diff --------------------------------------------------------------------
  auto* diff = app.add_subcommand(
      "diff", "Evaluate an expression and its exact derivative/gradient");
  std::string expression, point_json;
  diff->add_option("expression", expression, "e.g. \"x^2 + sin(y)\"")->required();
  diff->add_option("point", point_json, R"(evaluation point {"x":1.5,...})");
  diff->add_option("--out", out_path, "write the JSON result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cayley->parsed()) {
    const int dim = parse_dim(cayley_dim);
    if (dim < 0) {
      std::cerr << "error: dim must be 2d or 3d\n";
      return 2;
    }
    char* text = nullptr;
    const pga_status st = pga_cayley_table(dim, &text);
    if (st != PGA_OK) return fail(st);
    OwnedString owned(text);
    return emit(owned.get(), out_path);
  }

  if (check->parsed()) {
    const int dim = parse_dim(check_dim);
    if (dim < 0) {
      std::cerr << "error: dim must be 2d or 3d\n";
      return 2;
    }
    if (trials == 0) trials = dim == 2 ? 1000 : 500;
    char* report = nullptr;
    int all_pass = 0;
    const pga_status st = pga_check_formulas(dim, trials, seed, &report, &all_pass);
    if (report == nullptr) return fail(st);
    OwnedString owned(report);
    const int emit_rc = emit(owned.get(), out_path);
    if (emit_rc != 0) return emit_rc;
    if (st == PGA_ERR_VERIFY) {
      std::cerr << "verification FAILED; see report rows\n";
      return 1;
    }
    return st == PGA_OK ? 0 : fail(st);
  }

  if (orbit->parsed()) {
    char* report = nullptr;
    int closed = 0;
    const pga_status st = pga_orbit_run(orbit_k, &report, &closed);
    if (st != PGA_OK) return fail(st);
    OwnedString owned(report);
    const int emit_rc = emit(owned.get(), out_path);
    if (emit_rc != 0) return emit_rc;
    return closed ? 0 : 1;
  }

  if (screw->parsed()) {
    char* text = nullptr;
    const pga_status st = pga_screw_run(axis_json.c_str(), angle, pitch, samples,
                                        format == "csv" ? 0 : 1, &text);
    if (st != PGA_OK) return fail(st);
    OwnedString owned(text);
    return emit(owned.get(), out_path);
  }

  if (top->parsed()) {
    char* trajectory = nullptr;
    char* summary = nullptr;
    const pga_status st =
        pga_top_run(body_spec(body_json).c_str(), omega_json.c_str(), dt, steps,
                    format == "csv" ? 0 : 1, &trajectory, &summary);
    if (st != PGA_OK) return fail(st);
    OwnedString owned_t(trajectory), owned_s(summary);
    if (out_path.empty()) {
      std::cout << owned_t.get();
      std::cerr << owned_s.get() << "\n";
      return 0;
    }
    const int emit_rc = emit(owned_t.get(), out_path);
    if (emit_rc != 0) return emit_rc;
    std::cout << owned_s.get() << "\n";
    return 0;
  }

  if (diff->parsed()) {
    char* result = nullptr;
    const pga_status st =
        pga_diff_eval(expression.c_str(), point_json.c_str(), &result);
    if (st != PGA_OK) return fail(st);
    OwnedString owned(result);
    return emit(owned.get(), out_path);
  }

  return 2;
}
