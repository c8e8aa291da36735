// Command-line front end for libmatpoly. Everything goes through the C API;
// the only other dependencies are the argument parser and a JSON reader for
// re-formatting reports.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matpoly.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { matpoly_free_string(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct MatrixDeleter {
  void operator()(matpoly_matrix* m) const { matpoly_matrix_free(m); }
};
using MatrixHandle = std::unique_ptr<matpoly_matrix, MatrixDeleter>;

struct PolyDeleter {
  void operator()(matpoly_poly* p) const { matpoly_poly_free(p); }
};
using PolyHandle = std::unique_ptr<matpoly_poly, PolyDeleter>;

/// Thrown to unwind a command with a specific process exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
  throw CommandError{exit_code, message};
}

[[noreturn]] void fail_api(matpoly_status status) {
  fail(static_cast<int>(status), matpoly_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(1, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(1, "cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(1, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(1, "cannot write '" + path + "'");
}

MatrixHandle load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  matpoly_matrix* raw = nullptr;
  const matpoly_status s = matpoly_matrix_parse_csv(text.c_str(), &raw);
  if (s != MATPOLY_OK) fail(static_cast<int>(s), path + ": " + matpoly_last_error());
  return MatrixHandle(raw);
}

PolyHandle load_poly(const std::string& path) {
  const std::string text = read_file(path);
  matpoly_poly* raw = nullptr;
  const matpoly_status s = matpoly_poly_parse_json(text.c_str(), &raw);
  if (s != MATPOLY_OK) fail(static_cast<int>(s), path + ": " + matpoly_last_error());
  return PolyHandle(raw);
}

ApiString poly_text(const matpoly_poly* p) {
  char* out = nullptr;
  const matpoly_status s = matpoly_poly_to_text(p, &out);
  if (s != MATPOLY_OK) fail_api(s);
  return ApiString(out);
}

ApiString poly_json(const matpoly_poly* p) {
  char* out = nullptr;
  const matpoly_status s = matpoly_poly_to_json(p, &out);
  if (s != MATPOLY_OK) fail_api(s);
  return ApiString(out);
}

/// Standard result reporting for commands producing a polynomial: canonical
/// text and JSON on stdout, JSON additionally to --out when given.
void emit_poly(const matpoly_poly* p, const std::string& out_path) {
  const ApiString text = poly_text(p);
  const ApiString json = poly_json(p);
  std::cout << text.get() << "\n" << json.get() << "\n";
  if (!out_path.empty()) write_file(out_path, std::string(json.get()) + "\n");
}

void emit_matrix(const matpoly_matrix* m, const std::string& out_path) {
  char* out = nullptr;
  const matpoly_status s = matpoly_matrix_to_csv(m, &out);
  if (s != MATPOLY_OK) fail_api(s);
  const ApiString csv(out);
  std::cout << csv.get();
  if (!out_path.empty()) write_file(out_path, csv.get());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int method_code(const std::string& name) {
  if (name == "lagrange") return MATPOLY_METHOD_LAGRANGE;
  if (name == "newton-fwd") return MATPOLY_METHOD_NEWTON_FORWARD;
  if (name == "newton-bwd") return MATPOLY_METHOD_NEWTON_BACKWARD;
  if (name == "linsys") return MATPOLY_METHOD_LINEAR_SYSTEM;
  return -1;
}

void cmd_construct(const std::string& matrix_path, const std::string& method,
                   const std::string& out_path) {
  const MatrixHandle a = load_matrix(matrix_path);

  if (method != "all") {
    matpoly_poly* raw = nullptr;
    const matpoly_status s = matpoly_construct(
        a.get(), static_cast<matpoly_method>(method_code(method)), &raw);
    if (s != MATPOLY_OK) fail_api(s);
    const PolyHandle p(raw);
    emit_poly(p.get(), out_path);
    return;
  }

  static const char* kNames[] = {"lagrange", "newton-fwd", "newton-bwd", "linsys"};
  std::vector<PolyHandle> polys;
  for (const char* name : kNames) {
    matpoly_poly* raw = nullptr;
    const matpoly_status s = matpoly_construct(
        a.get(), static_cast<matpoly_method>(method_code(name)), &raw);
    if (s != MATPOLY_OK) fail_api(s);
    polys.emplace_back(raw);
  }
  for (std::size_t i = 1; i < polys.size(); ++i)
    if (matpoly_poly_equal(polys[0].get(), polys[i].get()) != 1)
      fail(1, std::string("methods disagree: ") + kNames[0] + " vs " + kNames[i]);
  emit_poly(polys[0].get(), out_path);
  std::cout << "all methods agree: lagrange, newton-fwd, newton-bwd, linsys\n";
}

void cmd_sample(const std::string& poly_path, const std::string& range,
                const std::string& steps, const std::string& out_path) {
  const PolyHandle p = load_poly(poly_path);

  std::optional<std::vector<std::string>> bounds;
  if (!range.empty()) {
    auto parts = split(range, ':');
    if (parts.size() != 4)
      fail(4, "--range expects xmin:xmax:ymin:ymax, got '" + range + "'");
    bounds = std::move(parts);
  }
  std::size_t steps_x = 0, steps_y = 0;
  if (!steps.empty()) {
    const auto parts = split(steps, ':');
    if (parts.size() > 2) fail(4, "--steps expects N or NX:NY, got '" + steps + "'");
    try {
      steps_x = std::stoul(parts[0]);
      steps_y = parts.size() == 2 ? std::stoul(parts[1]) : steps_x;
    } catch (const std::exception&) {
      fail(4, "--steps expects integers, got '" + steps + "'");
    }
  }

  char* out = nullptr;
  const matpoly_status s = matpoly_sample_surface(
      p.get(), bounds ? (*bounds)[0].c_str() : nullptr,
      bounds ? (*bounds)[1].c_str() : nullptr, bounds ? (*bounds)[2].c_str() : nullptr,
      bounds ? (*bounds)[3].c_str() : nullptr, steps_x, steps_y, &out);
  if (s != MATPOLY_OK) fail_api(s);
  const ApiString csv(out);
  if (out_path.empty())
    std::cout << csv.get();
  else
    write_file(out_path, csv.get());
}

void cmd_verify(std::uint64_t seed, unsigned linearity, unsigned product,
                unsigned ring, const std::string& out_path) {
  char* out = nullptr;
  const matpoly_status s = matpoly_verify(seed, linearity, product, ring, &out);
  if (s != MATPOLY_OK && out == nullptr) fail_api(s);
  const ApiString report(out);
  const auto j = nlohmann::json::parse(report.get());
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) write_file(out_path, std::string(report.get()) + "\n");
  if (s != MATPOLY_OK) fail(static_cast<int>(s), matpoly_last_error());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact interpolation between matrices and bivariate polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(matpoly_version()); });

  // construct
  std::string c_matrix, c_method = "lagrange", c_out;
  auto* construct = app.add_subcommand(
      "construct", "Interpolate a matrix CSV into its polynomial");
  construct->add_option("matrix", c_matrix, "Matrix CSV file")->required();
  construct->add_option("--method", c_method, "lagrange|newton-fwd|newton-bwd|linsys|all")
      ->check(CLI::IsMember({"lagrange", "newton-fwd", "newton-bwd", "linsys", "all"}));
  construct->add_option("--out", c_out, "Write polynomial JSON here");

  // sample
  std::string s_poly, s_range, s_steps, s_out;
  auto* sample = app.add_subcommand("sample", "Evaluate a polynomial on a grid");
  sample->add_option("poly", s_poly, "Polynomial JSON file")->required();
  sample->add_option("--range", s_range, "xmin:xmax:ymin:ymax (default: node range)");
  sample->add_option("--steps", s_steps, "Steps per direction, N or NX:NY (default 25)");
  sample->add_option("--out", s_out, "Write CSV here instead of stdout");

  // product
  std::string pr_a, pr_b, pr_out;
  auto* product = app.add_subcommand("product", "Dot product of two polynomials");
  product->add_option("p", pr_a, "Left polynomial JSON file")->required();
  product->add_option("q", pr_b, "Right polynomial JSON file")->required();
  product->add_option("--out", pr_out, "Write polynomial JSON here");

  // inverse
  std::string inv_p, inv_out;
  auto* inverse = app.add_subcommand("inverse", "Dot-product inverse");
  inverse->add_option("p", inv_p, "Polynomial JSON file")->required();
  inverse->add_option("--out", inv_out, "Write polynomial JSON here");

  // power
  std::string pw_p, pw_out;
  std::uint64_t pw_r = 0;
  auto* power = app.add_subcommand("power", "Dot-product power");
  power->add_option("p", pw_p, "Polynomial JSON file")->required();
  power->add_option("r", pw_r, "Exponent (0 gives the identity)")->required();
  power->add_option("--out", pw_out, "Write polynomial JSON here");

  // transpose
  std::string tr_p, tr_out;
  auto* transpose = app.add_subcommand("transpose", "Swap the variables");
  transpose->add_option("p", tr_p, "Polynomial JSON file")->required();
  transpose->add_option("--out", tr_out, "Write polynomial JSON here");

  // classify
  std::string cl_p;
  unsigned cl_max_period = 16;
  auto* classify = app.add_subcommand("classify", "Structure report of a square polynomial");
  classify->add_option("p", cl_p, "Polynomial JSON file")->required();
  classify->add_option("--max-period", cl_max_period, "Period probe bound (default 16)");

  // eigen
  std::string ei_p;
  bool ei_json = false;
  auto* eigen = app.add_subcommand("eigen", "Rational eigenvalues and eigen polynomials");
  eigen->add_option("p", ei_p, "Polynomial JSON file")->required();
  eigen->add_flag("--json", ei_json, "Print the raw JSON report");

  // char-poly
  std::string ch_p;
  bool ch_json = false;
  auto* charpoly = app.add_subcommand("char-poly", "Characteristic polynomial");
  charpoly->add_option("p", ch_p, "Polynomial JSON file")->required();
  charpoly->add_flag("--json", ch_json, "Print the raw JSON report");

  // cayley-hamilton
  std::string ca_p;
  auto* cayley = app.add_subcommand("cayley-hamilton",
                                    "Characteristic polynomial applied to its own polynomial");
  cayley->add_option("p", ca_p, "Polynomial JSON file")->required();

  // identity
  std::size_t id_n = 0;
  std::string id_out;
  auto* identity = app.add_subcommand("identity", "Identity polynomial of size n");
  identity->add_option("n", id_n, "Size")->required()->check(CLI::PositiveNumber);
  identity->add_option("--out", id_out, "Write polynomial JSON here");

  // to-matrix
  std::string tm_p, tm_out;
  auto* tomatrix = app.add_subcommand("to-matrix", "Sample a polynomial at its node grid");
  tomatrix->add_option("p", tm_p, "Polynomial JSON file")->required();
  tomatrix->add_option("--out", tm_out, "Write matrix CSV here");

  // coord-matrix
  std::size_t cm_m = 0, cm_n = 0;
  bool cm_sampling = false;
  std::string cm_out;
  auto* coord = app.add_subcommand("coord-matrix",
                                   "Basis matrix of the interpolation map");
  coord->add_option("m", cm_m, "Row count")->required()->check(CLI::PositiveNumber);
  coord->add_option("n", cm_n, "Column count")->required()->check(CLI::PositiveNumber);
  coord->add_flag("--sampling", cm_sampling, "Emit the inverse (evaluation) map instead");
  coord->add_option("--out", cm_out, "Write matrix CSV here");

  // verify
  std::uint64_t v_seed = 20260822;
  unsigned v_linearity = 500, v_product = 200, v_ring = 200;
  std::string v_out;
  auto* verify = app.add_subcommand("verify", "Run the randomized check suites");
  verify->add_option("--seed", v_seed, "Generator seed");
  verify->add_option("--linearity-trials", v_linearity, "Trials for the linearity suite");
  verify->add_option("--product-trials", v_product, "Trials for the product suite");
  verify->add_option("--ring-trials", v_ring, "Trials for the ring-axiom suite");
  verify->add_option("--out", v_out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(MATPOLY_ERR_ARG);
  }

  try {
    if (*construct) {
      cmd_construct(c_matrix, c_method, c_out);
    } else if (*sample) {
      cmd_sample(s_poly, s_range, s_steps, s_out);
    } else if (*product) {
      const PolyHandle p = load_poly(pr_a);
      const PolyHandle q = load_poly(pr_b);
      matpoly_poly* raw = nullptr;
      const matpoly_status s = matpoly_dp_product(p.get(), q.get(), &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_poly(PolyHandle(raw).get(), pr_out);
    } else if (*inverse) {
      const PolyHandle p = load_poly(inv_p);
      matpoly_poly* raw = nullptr;
      const matpoly_status s = matpoly_dp_inverse(p.get(), &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_poly(PolyHandle(raw).get(), inv_out);
    } else if (*power) {
      const PolyHandle p = load_poly(pw_p);
      matpoly_poly* raw = nullptr;
      const matpoly_status s = matpoly_dp_power(p.get(), pw_r, &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_poly(PolyHandle(raw).get(), pw_out);
    } else if (*transpose) {
      const PolyHandle p = load_poly(tr_p);
      matpoly_poly* raw = nullptr;
      const matpoly_status s = matpoly_transpose(p.get(), &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_poly(PolyHandle(raw).get(), tr_out);
    } else if (*classify) {
      const PolyHandle p = load_poly(cl_p);
      char* out = nullptr;
      const matpoly_status s = matpoly_classify(p.get(), cl_max_period, &out);
      if (s != MATPOLY_OK) fail_api(s);
      const ApiString report(out);
      std::cout << nlohmann::json::parse(report.get()).dump(2) << "\n";
    } else if (*eigen) {
      const PolyHandle p = load_poly(ei_p);
      char* out = nullptr;
      const matpoly_status s = matpoly_eigen_pairs(p.get(), &out);
      if (s != MATPOLY_OK) fail_api(s);
      const ApiString report(out);
      if (ei_json) {
        std::cout << report.get() << "\n";
      } else {
        const auto pairs = nlohmann::json::parse(report.get());
        if (pairs.empty()) std::cout << "no rational eigenvalues\n";
        for (const auto& pair : pairs)
          std::cout << "lambda = " << pair["value"].get<std::string>() << ": "
                    << pair["text"].get<std::string>() << "\n";
      }
    } else if (*charpoly) {
      const PolyHandle p = load_poly(ch_p);
      char* out = nullptr;
      const matpoly_status s = matpoly_char_poly(p.get(), &out);
      if (s != MATPOLY_OK) fail_api(s);
      const ApiString report(out);
      if (ch_json)
        std::cout << report.get() << "\n";
      else
        std::cout << nlohmann::json::parse(report.get())["text"].get<std::string>()
                  << "\n";
    } else if (*cayley) {
      const PolyHandle p = load_poly(ca_p);
      matpoly_poly* raw = nullptr;
      const matpoly_status s = matpoly_cayley_hamilton_residual(p.get(), &raw);
      if (s != MATPOLY_OK) fail_api(s);
      const PolyHandle res(raw);
      std::cout << "residual: " << poly_text(res.get()).get() << "\n";
    } else if (*identity) {
      matpoly_poly* raw = nullptr;
      const matpoly_status s = matpoly_identity_poly(id_n, &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_poly(PolyHandle(raw).get(), id_out);
    } else if (*tomatrix) {
      const PolyHandle p = load_poly(tm_p);
      matpoly_matrix* raw = nullptr;
      const matpoly_status s = matpoly_to_matrix(p.get(), &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_matrix(MatrixHandle(raw).get(), tm_out);
    } else if (*coord) {
      matpoly_matrix* raw = nullptr;
      const matpoly_status s = cm_sampling
                                   ? matpoly_sampling_matrix(cm_m, cm_n, &raw)
                                   : matpoly_coordinate_matrix(cm_m, cm_n, &raw);
      if (s != MATPOLY_OK) fail_api(s);
      emit_matrix(MatrixHandle(raw).get(), cm_out);
    } else if (*verify) {
      cmd_verify(v_seed, v_linearity, v_product, v_ring, v_out);
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
