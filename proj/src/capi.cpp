#include "matpoly.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "json.hpp"

#include "core/bipoly.hpp"
#include "core/dpalgebra.hpp"
#include "core/errors.hpp"
#include "core/interp.hpp"
#include "core/isomap.hpp"
#include "core/matrix.hpp"
#include "core/rat.hpp"
#include "core/surface.hpp"

struct matpoly_matrix {
  matpoly::Matrix value;
};

struct matpoly_poly {
  matpoly::BiPoly value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

matpoly_status to_status(const std::exception_ptr& ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const matpoly::ShapeError& e) {
    set_error(e.what());
    return MATPOLY_ERR_SHAPE;
  } catch (const matpoly::SingularError& e) {
    set_error(e.what());
    return MATPOLY_ERR_SINGULAR;
  } catch (const matpoly::ParseError& e) {
    set_error(e.what());
    return MATPOLY_ERR_PARSE;
  } catch (const matpoly::DomainError& e) {
    set_error(e.what());
    return MATPOLY_ERR_ARG;
  } catch (const std::exception& e) {
    set_error(e.what());
    return MATPOLY_ERR_FAIL;
  } catch (...) {
    set_error("unknown error");
    return MATPOLY_ERR_FAIL;
  }
}

/// Runs the body, routing exceptions into statuses and clearing the error
/// message on success.
template <typename Fn>
matpoly_status guarded(Fn&& body) {
  try {
    const matpoly_status s = body();
    if (s == MATPOLY_OK) g_last_error.clear();
    return s;
  } catch (...) {
    return to_status(std::current_exception());
  }
}

matpoly_status arg_error(const char* message) {
  set_error(message);
  return MATPOLY_ERR_ARG;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

matpoly::Rat parse_scalar(const char* text, const char* what) {
  if (text == nullptr)
    throw matpoly::DomainError(std::string("null ") + what + " argument");
  return matpoly::Rat::parse(text);
}

nlohmann::ordered_json poly_json_object(const matpoly::BiPoly& p) {
  return nlohmann::ordered_json::parse(matpoly::poly_to_json(p));
}

}  // namespace

extern "C" {

const char* matpoly_version(void) { return "matpoly 1.0.0"; }

const char* matpoly_last_error(void) { return g_last_error.c_str(); }

void matpoly_free_string(char* s) { std::free(s); }

matpoly_status matpoly_matrix_parse_csv(const char* csv, matpoly_matrix** out) {
  if (csv == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_matrix{matpoly::parse_matrix_csv(csv)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_matrix_identity(size_t n, matpoly_matrix** out) {
  if (out == nullptr) return arg_error("null argument");
  if (n == 0) return arg_error("identity size must be positive");
  return guarded([&] {
    *out = new matpoly_matrix{matpoly::Matrix::identity(n)};
    return MATPOLY_OK;
  });
}

void matpoly_matrix_free(matpoly_matrix* m) { delete m; }

size_t matpoly_matrix_rows(const matpoly_matrix* m) {
  return m == nullptr ? 0 : m->value.rows();
}

size_t matpoly_matrix_cols(const matpoly_matrix* m) {
  return m == nullptr ? 0 : m->value.cols();
}

matpoly_status matpoly_matrix_entry(const matpoly_matrix* m, size_t row, size_t col,
                                    char** out) {
  if (m == nullptr || out == nullptr) return arg_error("null argument");
  if (row >= m->value.rows() || col >= m->value.cols())
    return arg_error("matrix index out of range");
  return guarded([&] {
    *out = dup_string(m->value.at(row, col).str());
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_matrix_to_csv(const matpoly_matrix* m, char** out) {
  if (m == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = dup_string(matpoly::matrix_to_csv(m->value));
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_matrix_mul(const matpoly_matrix* a, const matpoly_matrix* b,
                                  matpoly_matrix** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_matrix{a->value * b->value};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_matrix_inverse(const matpoly_matrix* a, matpoly_matrix** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_matrix{matpoly::mat_inverse(a->value)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_poly_parse_json(const char* text, matpoly_poly** out) {
  if (text == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_poly{matpoly::poly_from_json(text)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_poly_parse_text(const char* text, size_t m, size_t n,
                                       matpoly_poly** out) {
  if (text == nullptr || out == nullptr) return arg_error("null argument");
  if ((m == 0) != (n == 0)) return arg_error("declare both dimensions or neither");
  return guarded([&] {
    *out = new matpoly_poly{m == 0 ? matpoly::BiPoly::parse(text)
                                   : matpoly::BiPoly::parse(text, {m, n})};
    return MATPOLY_OK;
  });
}

void matpoly_poly_free(matpoly_poly* p) { delete p; }

size_t matpoly_poly_xdim(const matpoly_poly* p) {
  return p == nullptr ? 0 : p->value.xdim();
}

size_t matpoly_poly_ydim(const matpoly_poly* p) {
  return p == nullptr ? 0 : p->value.ydim();
}

matpoly_status matpoly_poly_coeff(const matpoly_poly* p, size_t k1, size_t k2,
                                  char** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  if (k1 >= p->value.xdim() || k2 >= p->value.ydim())
    return arg_error("coefficient index out of range");
  return guarded([&] {
    *out = dup_string(p->value.coeff(k1, k2).str());
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_poly_to_text(const matpoly_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = dup_string(p->value.str());
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_poly_to_json(const matpoly_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = dup_string(matpoly::poly_to_json(p->value));
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_poly_eval(const matpoly_poly* p, const char* x, const char* y,
                                 char** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const matpoly::Rat rx = parse_scalar(x, "x");
    const matpoly::Rat ry = parse_scalar(y, "y");
    *out = dup_string(p->value.eval(rx, ry).str());
    return MATPOLY_OK;
  });
}

int matpoly_poly_equal(const matpoly_poly* a, const matpoly_poly* b) {
  if (a == nullptr || b == nullptr) return -1;
  return matpoly::poly_eq(a->value, b->value) ? 1 : 0;
}

matpoly_status matpoly_construct(const matpoly_matrix* a, matpoly_method method,
                                 matpoly_poly** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  matpoly::ConstructionMethod m;
  switch (method) {
    case MATPOLY_METHOD_LAGRANGE:
      m = matpoly::ConstructionMethod::lagrange;
      break;
    case MATPOLY_METHOD_NEWTON_FORWARD:
      m = matpoly::ConstructionMethod::newton_forward;
      break;
    case MATPOLY_METHOD_NEWTON_BACKWARD:
      m = matpoly::ConstructionMethod::newton_backward;
      break;
    case MATPOLY_METHOD_LINEAR_SYSTEM:
      m = matpoly::ConstructionMethod::linear_system;
      break;
    default:
      return arg_error("unknown construction method");
  }
  return guarded([&] {
    *out = new matpoly_poly{matpoly::construct(a->value, m)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_to_matrix(const matpoly_poly* p, matpoly_matrix** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_matrix{matpoly::to_matrix(p->value)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_identity_poly(size_t n, matpoly_poly** out) {
  if (out == nullptr) return arg_error("null argument");
  if (n == 0) return arg_error("identity size must be positive");
  return guarded([&] {
    *out = new matpoly_poly{matpoly::identity_poly(n)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_coordinate_matrix(size_t m, size_t n, matpoly_matrix** out) {
  if (out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_matrix{matpoly::coordinate_matrix(m, n)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_sampling_matrix(size_t m, size_t n, matpoly_matrix** out) {
  if (out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_matrix{matpoly::sampling_matrix(m, n)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_dp_product(const matpoly_poly* p, const matpoly_poly* q,
                                  matpoly_poly** out) {
  if (p == nullptr || q == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_poly{matpoly::dp_product(p->value, q->value)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_dp_inverse(const matpoly_poly* p, matpoly_poly** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_poly{matpoly::dp_inverse(p->value)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_dp_power(const matpoly_poly* p, uint64_t r,
                                matpoly_poly** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_poly{matpoly::dp_power(p->value, r)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_transpose(const matpoly_poly* p, matpoly_poly** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_poly{p->value.transpose()};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_char_poly(const matpoly_poly* p, char** json_out) {
  if (p == nullptr || json_out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const matpoly::CharPoly cp = matpoly::char_poly_of(p->value);
    nlohmann::ordered_json j;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const matpoly::Rat& c : cp.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    j["text"] = cp.str();
    *json_out = dup_string(j.dump());
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_cayley_hamilton_residual(const matpoly_poly* p,
                                                matpoly_poly** out) {
  if (p == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    *out = new matpoly_poly{matpoly::cayley_hamilton_residual(p->value)};
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_classify(const matpoly_poly* p, unsigned max_period,
                                char** json_out) {
  if (p == nullptr || json_out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const matpoly::Classification c =
        matpoly::classify(p->value, max_period == 0 ? 16 : max_period);
    nlohmann::ordered_json j;
    j["symmetric"] = c.symmetric;
    j["skew_symmetric"] = c.skew_symmetric;
    j["invertible"] = c.invertible;
    j["orthogonal"] = c.orthogonal;
    j["involutory"] = c.involutory;
    j["idempotent"] = c.idempotent;
    if (c.nilpotent_index)
      j["nilpotent_index"] = *c.nilpotent_index;
    else
      j["nilpotent_index"] = nullptr;
    if (c.periodic_index)
      j["periodic_index"] = *c.periodic_index;
    else
      j["periodic_index"] = nullptr;
    *json_out = dup_string(j.dump());
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_eigen_pairs(const matpoly_poly* p, char** json_out) {
  if (p == nullptr || json_out == nullptr) return arg_error("null argument");
  return guarded([&] {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const matpoly::EigenPair& pair : matpoly::eigen_pairs(p->value)) {
      nlohmann::ordered_json j;
      j["value"] = pair.value.str();
      j["text"] = pair.eigen_poly.str();
      j["poly"] = poly_json_object(pair.eigen_poly);
      arr.push_back(std::move(j));
    }
    *json_out = dup_string(arr.dump());
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_verify_eigenpair(const matpoly_poly* p, const char* value,
                                        const matpoly_poly* x_poly, int* holds_out) {
  if (p == nullptr || x_poly == nullptr || holds_out == nullptr)
    return arg_error("null argument");
  return guarded([&] {
    const matpoly::Rat v = parse_scalar(value, "eigenvalue");
    *holds_out = matpoly::verify_eigenpair(p->value, v, x_poly->value) ? 1 : 0;
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_sample_surface(const matpoly_poly* p, const char* x_min,
                                      const char* x_max, const char* y_min,
                                      const char* y_max, size_t steps_x,
                                      size_t steps_y, char** csv_out) {
  if (p == nullptr || csv_out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const matpoly::Rat rx0 =
        x_min == nullptr ? matpoly::Rat(1) : matpoly::Rat::parse(x_min);
    const matpoly::Rat rx1 =
        x_max == nullptr ? matpoly::Rat(static_cast<long long>(p->value.xdim()))
                         : matpoly::Rat::parse(x_max);
    const matpoly::Rat ry0 =
        y_min == nullptr ? matpoly::Rat(1) : matpoly::Rat::parse(y_min);
    const matpoly::Rat ry1 =
        y_max == nullptr ? matpoly::Rat(static_cast<long long>(p->value.ydim()))
                         : matpoly::Rat::parse(y_max);
    const matpoly::SurfaceGrid grid =
        matpoly::sample_surface(p->value, rx0, rx1, ry0, ry1,
                                steps_x == 0 ? 25 : steps_x,
                                steps_y == 0 ? 25 : steps_y);
    *csv_out = dup_string(matpoly::surface_to_csv(grid));
    return MATPOLY_OK;
  });
}

matpoly_status matpoly_verify(uint64_t seed, unsigned linearity_trials,
                              unsigned product_trials, unsigned ring_trials,
                              char** json_out) {
  if (json_out == nullptr) return arg_error("null argument");
  return guarded([&] {
    std::vector<matpoly::CheckReport> reports;
    reports.push_back(matpoly::check_linearity(seed, linearity_trials, 6, 6));
    reports.push_back(matpoly::check_product_structure(seed + 1, product_trials, 5));
    reports.push_back(matpoly::check_ring_axioms(seed + 2, ring_trials, 4));
    *json_out = dup_string(matpoly::reports_to_json(reports));
    for (const matpoly::CheckReport& r : reports)
      if (!r.passed()) {
        set_error("randomized verification found counterexamples; see report");
        return MATPOLY_ERR_FAIL;
      }
    return MATPOLY_OK;
  });
}

}  // extern "C"
