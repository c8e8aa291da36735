// Acceptance gate for the library: each criterion prints exactly one
// PASS/FAIL line. Every comparison is exact; the only tolerances are the
// wall-clock budgets pinned below.

#include <chrono>
#include <cstddef>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "core/dpalgebra.hpp"
#include "core/interp.hpp"
#include "core/isomap.hpp"
#include "core/randgen.hpp"
#include "core/surface.hpp"

using namespace matpoly;

namespace {

constexpr double kGoldenBudgetSeconds = 1.0;
constexpr double kCayleyBudgetSeconds = 5.0;
constexpr double kPropertyBudgetSeconds = 30.0;
constexpr double kLinsysBudgetSeconds = 10.0;
constexpr double kLagrangeBudgetSeconds = 2.0;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Collects failures; the first detail wins the report line.
struct Checker {
  Outcome& outcome;

  void expect(bool ok, const std::string& detail) {
    if (ok || !outcome.passed) return;
    outcome.passed = false;
    outcome.detail = detail;
  }

  void budget(const Timer& timer, double limit, const std::string& what) {
    std::ostringstream msg;
    msg << what << " took " << timer.seconds() << " s, budget " << limit << " s";
    expect(timer.seconds() < limit, msg.str());
  }
};

Matrix make(std::size_t rows, std::size_t cols, std::vector<Rat> entries) {
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entries.at(k++);
  return m;
}

const ConstructionMethod kMethods[] = {
    ConstructionMethod::lagrange, ConstructionMethod::newton_forward,
    ConstructionMethod::newton_backward, ConstructionMethod::linear_system};

struct Golden {
  const char* name;
  Matrix matrix;
  const char* text;
};

std::vector<Golden> golden_set() {
  std::vector<Golden> g;
  g.push_back({"tau", make(2, 2, {-1, 2, 3, -4}), "-10*x*y + 14*x + 13*y - 18"});
  g.push_back({"tau^2", make(2, 2, {7, -10, -15, 22}), "54*x*y - 76*x - 71*y + 100"});
  g.push_back({"id1", Matrix::identity(1), "1"});
  g.push_back({"id2", Matrix::identity(2), "2*x*y - 3*x - 3*y + 5"});
  g.push_back({"id3", Matrix::identity(3),
               "3/2*x^2*y^2 - 6*x^2*y - 6*x*y^2 + 5*x^2 + 49/2*x*y + 5*y^2 - 21*x - "
               "21*y + 19"});
  g.push_back({"delta", make(1, 3, {1, -1, -2}), "1/2*y^2 - 7/2*y + 4"});
  g.push_back({"eta", make(3, 1, {-1, 1, 3}), "2*x - 3"});
  g.push_back({"vartheta", make(2, 2, {-15, 36, -1, 96}), "46*x*y - 32*x + 5*y - 34"});
  g.push_back({"psi", make(2, 2, {-216, 2, 540, -5}),
               "-763*x*y + 1519*x + 981*y - 1953"});
  g.push_back({"zeta", make(2, 3, {1, 0, 2, -1, 2, -3}),
               "-11/2*x*y^2 + 41/2*x*y + 7*y^2 - 17*x - 26*y + 22"});
  g.push_back({"theta", make(3, 2, {1, 0, 0, -1, 1, 0}), "x^2 - 4*x - y + 5"});
  g.push_back({"a1", make(2, 3, {1, -1, 2, -1, 0, -2}),
               "-4*x*y^2 + 15*x*y + 13/2*y^2 - 13*x - 49/2*y + 21"});
  g.push_back({"a2", make(3, 2, {1, -1, -1, 0, 2, -2}),
               "-4*x^2*y + 13/2*x^2 + 15*x*y - 49/2*x - 13*y + 21"});
  g.push_back({"a3", make(3, 3, {1, 2, 3, 2, 0, 4, 3, 4, -1}),
               "-9/2*x^2*y^2 + 33/2*x^2*y + 33/2*x*y^2 - 12*x^2 - 123/2*x*y - "
               "12*y^2 + 46*x + 46*y - 34"});
  g.push_back({"a4", make(3, 3, {0, 1, 2, -1, 0, 3, -2, -3, 0}),
               "-x^2*y + x*y^2 + x^2 - y^2 - 2*x + 2*y"});
  return g;
}

void criterion_golden_constructions(Checker& c) {
  const Timer timer;
  for (const Golden& g : golden_set())
    for (const ConstructionMethod method : kMethods) {
      const BiPoly p = construct(g.matrix, method);
      c.expect(p.str() == g.text, std::string(g.name) + ": got " + p.str());
      c.expect(p.xdim() == g.matrix.rows() && p.ydim() == g.matrix.cols(),
               std::string(g.name) + ": wrong declared shape");
    }
  c.budget(timer, kGoldenBudgetSeconds, "golden constructions");
}

void criterion_product_goldens(Checker& c) {
  const BiPoly p1 = BiPoly::parse("-10*x*y + 14*x + 13*y - 18", Shape{2, 2});
  const BiPoly q1 =
      BiPoly::parse("-11/2*x*y^2 + 41/2*x*y + 7*y^2 - 17*x - 26*y + 22", Shape{2, 3});
  c.expect(dp_product(p1, q1).str() ==
               "30*x*y^2 - 112*x*y - 79/2*y^2 + 92*x + 295/2*y - 121",
           "rectangular product: got " + dp_product(p1, q1).str());
  bool rejected = false;
  try {
    dp_product(q1, p1);
  } catch (const ShapeError&) {
    rejected = true;
  }
  c.expect(rejected, "reversed rectangular product was not rejected");

  const BiPoly p2 = BiPoly::parse("2*y - 3", Shape{1, 2});
  const BiPoly q2 = BiPoly::parse("-2*x + 3", Shape{2, 1});
  c.expect(dp_product(p2, q2).str() == "-2",
           "thin product: got " + dp_product(p2, q2).str());
  c.expect(dp_product(q2, p2).str() == "-4*x*y + 6*x + 6*y - 9",
           "thin product reversed: got " + dp_product(q2, p2).str());

  const BiPoly p3 = BiPoly::parse("-x - y + 3", Shape{2, 2});
  const BiPoly q3 = BiPoly::parse("-2*x*y + 3*x + 3*y - 4", Shape{2, 2});
  c.expect(dp_product(p3, q3).str() == "-x + y", "asymmetry left");
  c.expect(dp_product(q3, p3).str() == "x - y", "asymmetry right");

  const BiPoly p4 = BiPoly::parse("3*x*y - 3*x - 4*y + 4", Shape{2, 2});
  const BiPoly q4 = BiPoly::parse("2*x*y - 5*x - 4*y + 10", Shape{2, 2});
  c.expect(dp_product(p4, q4).is_zero(), "zero divisor product is not zero");
  c.expect(dp_product(q4, p4).str() == "x*y - x - 2*y + 2",
           "zero divisor reversed: got " + dp_product(q4, p4).str());

  const BiPoly a1 = construct(make(2, 3, {1, -1, 2, -1, 0, -2}),
                              ConstructionMethod::lagrange);
  const BiPoly a2 = construct(make(3, 2, {1, -1, -1, 0, 2, -2}),
                              ConstructionMethod::lagrange);
  const BiPoly a3 = construct(make(3, 3, {1, 2, 3, 2, 0, 4, 3, 4, -1}),
                              ConstructionMethod::lagrange);
  const BiPoly a4 = construct(make(3, 3, {0, 1, 2, -1, 0, 3, -2, -3, 0}),
                              ConstructionMethod::lagrange);
  const struct {
    const char* name;
    BiPoly value;
    const char* text;
  } products[] = {
      {"a1.a2", dp_product(a1, a2), "21*x*y - 32*x - 32*y + 49"},
      {"a1.a3", dp_product(a1, a3), "15*x*y^2 - 53*x*y - 24*y^2 + 26*x + 85*y - 44"},
      {"a1.a4", dp_product(a1, a4), "-7*x*y^2 + 24*x*y + 10*y^2 - 10*x - 35*y + 15"},
      {"a2.a1", dp_product(a2, a1),
       "17/2*x^2*y^2 - 32*x^2*y - 32*x*y^2 + 55/2*x^2 + 241/2*x*y + 55/2*y^2 - "
       "207/2*x - 207/2*y + 89"},
      {"a3.a4", dp_product(a3, a4),
       "-3*x^2*y^2 + 15*x^2*y + 9*x*y^2 - 9*x^2 - 47*x*y + 2*y^2 + 29*x + 8*y - 12"},
      {"a4.a3", dp_product(a4, a3),
       "3*x^2*y^2 - 9*x^2*y - 15*x*y^2 - 2*x^2 + 47*x*y + 9*y^2 - 8*x - 29*y + 12"},
  };
  for (const auto& pr : products)
    c.expect(pr.value.str() == pr.text,
             std::string(pr.name) + ": got " + pr.value.str());
}

void criterion_cayley_hamilton(Checker& c) {
  const Timer timer;
  const BiPoly p = construct(make(2, 2, {-1, 2, 3, -4}), ConstructionMethod::lagrange);
  c.expect(char_poly_of(p).str() == "lambda^2 + 5*lambda - 2",
           "characteristic polynomial: got " + char_poly_of(p).str());
  c.expect(cayley_hamilton_residual(p).is_zero(), "residual not zero for tau");

  RatRng rng(1009);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = trial % 5 + 1;
    const BiPoly q = rng.poly(Shape{n, n});
    if (!cayley_hamilton_residual(q).is_zero()) {
      c.expect(false, "residual not zero at trial " + std::to_string(trial) +
                          " for " + q.str());
      break;
    }
  }
  c.budget(timer, kCayleyBudgetSeconds, "Cayley-Hamilton sweep");
}

void criterion_inverse(Checker& c) {
  const BiPoly p = construct(make(2, 2, {-1, 2, 3, -4}), ConstructionMethod::lagrange);
  c.expect(is_invertible(p), "tau polynomial reported singular");

  const BiPoly inv = dp_inverse(p);
  c.expect(inv.str() == "-1/2*x - y + 7/2", "inverse: got " + inv.str());
  c.expect(to_matrix(inv) == make(2, 2, {2, 1, Rat(3, 2), Rat(1, 2)}),
           "inverse node samples differ");

  const BiPoly q = BiPoly::parse("15*x*y - 21*x - 20*y + 28", Shape{2, 2});
  c.expect(!is_invertible(q), "singular polynomial reported invertible");
  const std::vector<Matrix> kernel = null_space(to_matrix(q).transpose());
  c.expect(kernel.size() == 1 && kernel[0] == make(2, 1, {2, 1}),
           "left kernel direction is not (2, 1)");
}

void criterion_eigen(Checker& c) {
  const BiPoly p = BiPoly::parse("-x*y + 4*x + 3*y - 5", Shape{2, 2});
  const std::vector<EigenPair> pairs = eigen_pairs(p);
  c.expect(pairs.size() == 2, "expected two rational eigenvalues");
  if (pairs.size() == 2) {
    c.expect(pairs[0].value == Rat(-1) && pairs[1].value == Rat(7),
             "eigenvalues: got " + pairs[0].value.str() + ", " + pairs[1].value.str());
    c.expect(poly_eq(Rat(5) * pairs[0].eigen_poly, BiPoly::parse("5*x - 8", Shape{2, 1})),
             "first eigen polynomial not a scale of 5*x - 8");
    c.expect(poly_eq(pairs[1].eigen_poly, BiPoly::parse("x", Shape{2, 1})),
             "second eigen polynomial not a scale of x");
    for (const EigenPair& e : pairs)
      c.expect(verify_eigenpair(p, e.value, e.eigen_poly),
               "eigen relation fails for lambda = " + e.value.str());
  }
  c.expect(verify_eigenpair(p, Rat(-1), BiPoly::parse("5*x - 8", Shape{2, 1})),
           "eigen relation fails for 5*x - 8");
  c.expect(verify_eigenpair(p, Rat(7), BiPoly::parse("x", Shape{2, 1})),
           "eigen relation fails for x");
}

void criterion_isomorphism_matrices(Checker& c) {
  const Matrix coord = coordinate_matrix(2, 2);
  const Matrix sampling = sampling_matrix(2, 2);
  c.expect(coord == make(4, 4,
                         {4, -2, -2, 1,    //
                          -2, 1, 2, -1,    //
                          -2, 2, 1, -1,    //
                          1, -1, -1, 1}),
           "coordinate matrix entries differ");
  c.expect(sampling == make(4, 4,
                            {1, 1, 1, 1,    //
                             1, 1, 2, 2,    //
                             1, 2, 1, 2,    //
                             1, 2, 2, 4}),
           "sampling matrix entries differ");
  c.expect(det(coord) == Rat(-1), "coordinate determinant: got " + det(coord).str());
  c.expect(coord * sampling == Matrix::identity(4), "coord * sampling != identity");
  c.expect(sampling * coord == Matrix::identity(4), "sampling * coord != identity");
}

void criterion_property_suites(Checker& c) {
  const Timer timer;

  {
    RatRng rng(2101);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t m = rng.index(1, 6);
      const std::size_t n = rng.index(1, 6);
      const Matrix a = rng.matrix(m, n);
      const ConstructionMethod method = kMethods[trial % 4];
      if (!(to_matrix(construct(a, method)) == a)) {
        c.expect(false, "round trip failed at trial " + std::to_string(trial));
        break;
      }
    }
  }

  {
    RatRng rng(2102);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t m = rng.index(1, 6);
      const std::size_t n = rng.index(1, 6);
      const Matrix a = rng.matrix(m, n);
      const BiPoly reference = construct(a, ConstructionMethod::lagrange);
      bool agree = true;
      for (int i = 1; i < 4; ++i)
        agree = agree && construct(a, kMethods[i]) == reference;
      if (!agree) {
        c.expect(false, "methods disagree at trial " + std::to_string(trial));
        break;
      }
    }
  }

  const CheckReport linearity = check_linearity(2103, 500, 6, 6);
  c.expect(linearity.passed(), "linearity suite found a counterexample");

  const CheckReport products = check_product_structure(2104, 200, 5);
  c.expect(products.passed(), "product structure suite found a counterexample");

  const CheckReport ring = check_ring_axioms(2105, 200, 4);
  c.expect(ring.passed(), "ring axiom suite found a counterexample");

  {
    RatRng rng(2106);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t m = rng.index(1, 5);
      const std::size_t n = rng.index(1, 5);
      const BiPoly p = rng.poly(Shape{m, n});
      if (!poly_eq(dp_product(identity_poly(m), p), p) ||
          !poly_eq(dp_product(p, identity_poly(n)), p)) {
        c.expect(false, "rectangular identity law failed at trial " +
                            std::to_string(trial));
        break;
      }
    }
  }

  c.budget(timer, kPropertyBudgetSeconds, "property suites");
}

void criterion_node_sampling(Checker& c) {
  for (const Golden& g : golden_set()) {
    const BiPoly p = construct(g.matrix, ConstructionMethod::lagrange);
    const std::size_t m = g.matrix.rows();
    const std::size_t n = g.matrix.cols();
    const SurfaceGrid grid =
        sample_surface(p, Rat(1), Rat(static_cast<long long>(m)), Rat(1),
                       Rat(static_cast<long long>(n)), m < 2 ? 2 : m, n < 2 ? 2 : n);
    for (const SurfaceGrid::Sample& s : grid.samples) {
      const std::size_t i = static_cast<std::size_t>(s.x.num()) - 1;
      const std::size_t j = static_cast<std::size_t>(s.y.num()) - 1;
      if (!(s.value == g.matrix.at(i, j))) {
        c.expect(false, std::string(g.name) + ": sample at node (" + s.x.str() + ", " +
                            s.y.str() + ") is " + s.value.str());
        return;
      }
    }
  }
}

void criterion_scale(Checker& c) {
  RatRng rng(3001);
  const Matrix big = rng.integer_matrix(30, 30, -99, 99);

  const Timer linsys_timer;
  const BiPoly via_linsys = construct(big, ConstructionMethod::linear_system);
  c.budget(linsys_timer, kLinsysBudgetSeconds, "30x30 linear-system construction");

  const Timer lagrange_timer;
  const BiPoly via_lagrange = construct(big, ConstructionMethod::lagrange);
  c.budget(lagrange_timer, kLagrangeBudgetSeconds, "30x30 Lagrange construction");

  c.expect(via_linsys == via_lagrange, "30x30 constructions disagree");
  c.expect(to_matrix(via_lagrange) == big, "30x30 round trip failed");
}

struct Criterion {
  const char* label;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1. golden constructions", criterion_golden_constructions},
      {"2. dot product goldens", criterion_product_goldens},
      {"3. Cayley-Hamilton residuals", criterion_cayley_hamilton},
      {"4. inverse and invertibility", criterion_inverse},
      {"5. rational eigenpairs", criterion_eigen},
      {"6. isomorphism matrices", criterion_isomorphism_matrices},
      {"7. property suites", criterion_property_suites},
      {"8. node sampling", criterion_node_sampling},
      {"9. scale sanity", criterion_scale},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Outcome outcome;
    Checker checker{outcome};
    const Timer timer;
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("unexpected exception: ") + e.what());
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed;
    if (outcome.passed) {
      line << "PASS " << criterion.label << " (" << timer.seconds() << " s)";
    } else {
      line << "FAIL " << criterion.label << ": " << outcome.detail;
      ++failures;
    }
    std::cout << line.str() << "\n";
  }
  return failures == 0 ? 0 : 1;
}
