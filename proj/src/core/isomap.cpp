#include "core/isomap.hpp"

#include <utility>

#include "json.hpp"

#include "core/dpalgebra.hpp"
#include "core/interp.hpp"
#include "core/randgen.hpp"

namespace matpoly {

Matrix coordinate_matrix(std::size_t m, std::size_t n) {
  const std::size_t dim = m * n;
  if (dim == 0) throw DomainError("matrix dimensions must be positive");
  Matrix c(dim, dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix unit(m, n);
      unit.at(i, j) = 1;
      const BiPoly p = construct(unit, ConstructionMethod::lagrange);
      const std::size_t row = i * n + j;
      for (std::size_t k1 = 0; k1 < m; ++k1)
        for (std::size_t k2 = 0; k2 < n; ++k2)
          c.at(row, k2 * m + k1) = p.coeff(k1, k2);
    }
  return c;
}

Matrix sampling_matrix(std::size_t m, std::size_t n) {
  const std::size_t dim = m * n;
  if (dim == 0) throw DomainError("matrix dimensions must be positive");
  Matrix s(dim, dim);
  for (std::size_t k1 = 0; k1 < m; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const std::size_t row = k2 * m + k1;
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          s.at(row, (i - 1) * n + (j - 1)) =
              Rat(static_cast<long long>(i)).pow(k1) *
              Rat(static_cast<long long>(j)).pow(k2);
    }
  return s;
}

namespace {

void record(CheckReport& report, std::string check, std::string inputs,
            std::string expected, std::string actual) {
  report.failures.push_back(
      {std::move(check), std::move(inputs), std::move(expected), std::move(actual)});
}

std::string describe_matrix(const Matrix& a) {
  std::string s = matrix_to_csv(a);
  for (char& c : s)
    if (c == '\n') c = ';';
  if (!s.empty() && s.back() == ';') s.pop_back();
  return s;
}

}  // namespace

CheckReport check_linearity(std::uint64_t seed, unsigned trials, std::size_t max_m,
                            std::size_t max_n) {
  CheckReport report{"linearity", seed, trials, {}};
  RatRng rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(1, max_m);
    const std::size_t n = rng.index(1, max_n);
    const Matrix a = rng.matrix(m, n);
    const Matrix b = rng.matrix(m, n);
    const Rat c = rng.rational();

    const BiPoly pa = construct(a, ConstructionMethod::lagrange);
    const BiPoly pb = construct(b, ConstructionMethod::lagrange);
    const BiPoly combined = construct(c * a + b, ConstructionMethod::lagrange);
    const BiPoly expected = c * pa + pb;
    if (!poly_eq(combined, expected))
      record(report, "construct(c*A + B) = c*P(A) + P(B)",
             "A=" + describe_matrix(a) + " B=" + describe_matrix(b) + " c=" + c.str(),
             expected.str(), combined.str());

    const Matrix back = to_matrix(pa);
    if (!(back == a))
      record(report, "to_matrix(construct(A)) = A", "A=" + describe_matrix(a),
             describe_matrix(a), describe_matrix(back));
  }
  return report;
}

CheckReport check_product_structure(std::uint64_t seed, unsigned trials,
                                    std::size_t max_dim) {
  CheckReport report{"product_structure", seed, trials, {}};
  RatRng rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const std::size_t m = rng.index(1, max_dim);
    const std::size_t n = rng.index(1, max_dim);
    const std::size_t r = rng.index(1, max_dim);
    const Matrix a = rng.matrix(m, n);
    const Matrix b = rng.matrix(n, r);

    const BiPoly expected = construct(a * b, ConstructionMethod::lagrange);
    const BiPoly actual = dp_product(construct(a, ConstructionMethod::lagrange),
                                     construct(b, ConstructionMethod::lagrange));
    if (!poly_eq(actual, expected))
      record(report, "construct(A*B) = construct(A) . construct(B)",
             "A=" + describe_matrix(a) + " B=" + describe_matrix(b), expected.str(),
             actual.str());

    if (t % 4 == 0) {
      // Linear combinations of products map the same way.
      const Matrix a2 = rng.matrix(m, n);
      const Matrix b2 = rng.matrix(n, r);
      const Rat c1 = rng.rational();
      const Rat c2 = rng.rational();
      const BiPoly lhs =
          construct(c1 * (a * b) + c2 * (a2 * b2), ConstructionMethod::lagrange);
      const BiPoly rhs =
          c1 * dp_product(construct(a, ConstructionMethod::lagrange),
                          construct(b, ConstructionMethod::lagrange)) +
          c2 * dp_product(construct(a2, ConstructionMethod::lagrange),
                          construct(b2, ConstructionMethod::lagrange));
      if (!poly_eq(lhs, rhs))
        record(report, "construct(c1*A*B + c2*A2*B2) matches the combination",
               "A=" + describe_matrix(a) + " B=" + describe_matrix(b) +
                   " A2=" + describe_matrix(a2) + " B2=" + describe_matrix(b2) +
                   " c1=" + c1.str() + " c2=" + c2.str(),
               rhs.str(), lhs.str());
    }
  }
  return report;
}

CheckReport check_ring_axioms(std::uint64_t seed, unsigned trials, std::size_t max_n) {
  CheckReport report{"ring_axioms", seed, trials, {}};
  RatRng rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const std::size_t n = rng.index(1, max_n);
    const Shape shape{n, n};
    const BiPoly p = rng.poly(shape);
    const BiPoly q = rng.poly(shape);
    const BiPoly r = rng.poly(shape);
    const Rat c = rng.rational();
    const std::string inputs =
        "n=" + std::to_string(n) + " p=" + p.str() + " q=" + q.str() + " r=" + r.str();

    auto expect = [&](const char* check, const BiPoly& lhs, const BiPoly& rhs) {
      if (!poly_eq(lhs, rhs)) record(report, check, inputs, rhs.str(), lhs.str());
    };

    expect("(p + q) + r = p + (q + r)", (p + q) + r, p + (q + r));
    expect("p + q = q + p", p + q, q + p);
    expect("p + 0 = p", p + BiPoly(shape), p);
    expect("p + (-1)*p = 0", p + Rat(-1) * p, BiPoly(shape));
    expect("(p . q) . r = p . (q . r)", dp_product(dp_product(p, q), r),
           dp_product(p, dp_product(q, r)));
    expect("p . (q + r) = p . q + p . r", dp_product(p, q + r),
           dp_product(p, q) + dp_product(p, r));
    expect("(p + q) . r = p . r + q . r", dp_product(p + q, r),
           dp_product(p, r) + dp_product(q, r));
    expect("c*(p . q) = (c*p) . q", c * dp_product(p, q), dp_product(c * p, q));
    expect("c*(p . q) = p . (c*q)", c * dp_product(p, q), dp_product(p, c * q));

    const BiPoly id = identity_poly(n);
    expect("id . p = p", dp_product(id, p), p);
    expect("p . id = p", dp_product(p, id), p);
  }
  return report;
}

namespace {

nlohmann::ordered_json report_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["passed"] = report.passed();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CheckFailure& f : report.failures) {
    nlohmann::ordered_json jf;
    jf["check"] = f.check;
    jf["inputs"] = f.inputs;
    jf["expected"] = f.expected;
    jf["actual"] = f.actual;
    failures.push_back(std::move(jf));
  }
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace

std::string report_to_json(const CheckReport& report) {
  return report_json(report).dump();
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) arr.push_back(report_json(r));
  return arr.dump();
}

}  // namespace matpoly
