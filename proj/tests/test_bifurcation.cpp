#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace na = newton_atlas;
using na::ComplexValue;

namespace {

na::BivariatePolynomial P(const char* text) { return na::parse_bivariate(text); }

bool same_values(const na::ValueSet& s, std::vector<ComplexValue> expected, double tol = 1e-8) {
  if (s.size() != expected.size()) return false;
  for (auto v : expected)
    if (!s.contains(v, tol)) return false;
  return true;
}

// Random polynomial with isolated singularities, f(0,0) = 0 and both variables present.
na::BivariatePolynomial random_isolated(std::mt19937_64& rng, int terms, int max_exp, bool convenient) {
  for (;;) {
    auto f = oracle::random_polynomial(rng, terms, max_exp, 4);
    f.add_term({0, 0}, -f.coefficient({0, 0}));
    if (convenient) {
      f.add_term({oracle::uniform(rng, 1, max_exp), 0}, oracle::nonzero_coefficient(rng, 4));
      f.add_term({0, oracle::uniform(rng, 1, max_exp)}, oracle::nonzero_coefficient(rng, 4));
    }
    if (f.is_constant() || na::independent_of(f, na::Variable::x) || na::independent_of(f, na::Variable::y)) continue;
    if (convenient && !na::convenience(f).both()) continue;
    if (!na::has_isolated_singularities(f)) continue;
    return f;
  }
}

}  // namespace

TEST(Isolated, Examples) {
  EXPECT_FALSE(na::has_isolated_singularities(P("x^2*y*(1+x^4*y)")));
  EXPECT_TRUE(na::has_isolated_singularities(P("x^2+y^2")));
  EXPECT_TRUE(na::has_isolated_singularities(P("x^2*y^2+x*y+x")));
  EXPECT_TRUE(na::has_isolated_singularities(P("y")));
  EXPECT_FALSE(na::has_isolated_singularities(P("y^2")));
  EXPECT_THROW(na::has_isolated_singularities(P("5")), na::PreconditionError);
}

TEST(AffineCritical, Examples) {
  auto pts = na::affine_critical_data(P("x^2*y^2 + x*y + x"));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(std::abs(pts[0].location.first), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(pts[0].location.second - ComplexValue(-1, 0)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(pts[0].value), 0.0, 1e-12);
  EXPECT_EQ(pts[0].multiplicity, 1u);

  EXPECT_TRUE(na::affine_critical_data(P("x^2*y^2 + x")).empty());
  EXPECT_TRUE(same_values(na::b_aff(P("(x-1)*(x*y-1)")), {{0, 0}, {1, 0}}));
  EXPECT_THROW(na::affine_critical_data(P("x^2*y*(1+x^4*y)")), na::NonIsolatedError);
}

TEST(AffineCritical, MilnorNumbers) {
  EXPECT_EQ(na::mu_affine(P("x^2*y^2 + x*y + x")), 1u);
  EXPECT_EQ(na::mu_affine(P("x^2*y^2 + x")), 0u);
  EXPECT_EQ(na::mu_affine(P("x^3 - 3*x + y^2")), 2u);
  EXPECT_EQ(na::mu_affine(P("x^3 + y^2")), 2u);  // cusp, one point of multiplicity 2
  auto cusp = na::affine_critical_data(P("x^3 + y^2"));
  ASSERT_EQ(cusp.size(), 1u);
  EXPECT_EQ(cusp[0].multiplicity, 2u);
  EXPECT_EQ(na::mu_affine(P("x^4 + y^4")), 9u);
}

TEST(BAff, Examples) {
  EXPECT_TRUE(same_values(na::b_aff(P("(x-1)*(x*y-1)")), {{0, 0}, {1, 0}}));
  EXPECT_TRUE(na::b_aff(P("x*(x*y-1)")).empty());
  EXPECT_TRUE(same_values(na::b_aff(P("x^4 - x^2*y^2 + 2*x*y + x^2")), {{0, 0}, {0.75, 0}}));
  EXPECT_TRUE(same_values(na::b_aff(P("x^3 - 3*x + y^2")), {{-2, 0}, {2, 0}}));
}

TEST(BInf, Examples) {
  EXPECT_TRUE(same_values(na::b_inf(P("x^2*y^2 + x")), {{0, 0}}));
  EXPECT_TRUE(same_values(na::b_inf(P("x^2*y^2 + x*y + x")), {{-0.25, 0}}));
  EXPECT_TRUE(same_values(na::b_inf(P("x^4 - x^2*y^2 + 2*x*y + x^2")), {{1, 0}}));
  EXPECT_TRUE(na::b_inf(P("x^2 + y^2")).empty());
  EXPECT_TRUE(na::b_inf(P("x*y")).empty());
}

TEST(BInf, OneVariableInputWarns) {
  std::vector<std::string> warnings;
  EXPECT_TRUE(na::b_inf(P("x + 3"), {}, &warnings).empty());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("one variable"), std::string::npos);
}

TEST(BInf, Errors) {
  EXPECT_THROW(na::b_inf(P("(x+y)^2*x*y + x + y")), na::DegenerateError);
  EXPECT_THROW(na::b_inf(P("x^2*y*(1+x^4*y)")), na::NonIsolatedError);
}

TEST(Invariants, Examples) {
  auto a = na::invariants(P("x^2*y^2 + x*y + x"));
  EXPECT_EQ(a.nu, 2);
  EXPECT_EQ(a.mu, 1u);
  EXPECT_EQ(a.lambda, 1);
  ASSERT_TRUE(a.b.has_value());
  EXPECT_TRUE(same_values(*a.b, {{0, 0}, {-0.25, 0}}));

  auto b = na::invariants(P("x^2*y^2 + x"));
  EXPECT_EQ(b.nu, 2);
  EXPECT_EQ(b.mu, 0u);
  EXPECT_EQ(b.lambda, 2);
  EXPECT_TRUE(same_values(*b.b, {{0, 0}}));

  auto c = na::invariants(P("x^2 + y^2"));
  EXPECT_EQ(c.nu, 1);
  EXPECT_EQ(c.mu, 1u);
  EXPECT_EQ(c.lambda, 0);
  EXPECT_TRUE(same_values(*c.b, {{0, 0}}));
  EXPECT_TRUE(c.b_inf->empty());
}

TEST(Invariants, DegenerateInputLeavesLambdaUnset) {
  auto d = na::invariants(P("(x+y)^2*x*y + x + y"));
  EXPECT_FALSE(d.nondegenerate);
  EXPECT_FALSE(d.lambda.has_value());
  EXPECT_FALSE(d.b_inf.has_value());
  EXPECT_FALSE(d.warnings.empty());
  EXPECT_THROW(na::invariants(P("7")), na::PreconditionError);
  EXPECT_THROW(na::invariants(P("x^2*y*(1+x^4*y)")), na::NonIsolatedError);
}

TEST(Invariants, ConstantShift) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    auto f = random_isolated(rng, 5, 3, false);
    if (!na::is_nondegenerate(f).nondegenerate) continue;
    auto c = oracle::nonzero_coefficient(rng, 9);
    auto g = f + na::BivariatePolynomial::constant(c);
    auto a = na::invariants(f), b = na::invariants(g);
    EXPECT_EQ(a.mu, b.mu);
    EXPECT_TRUE(a.b_aff.shifted(c.get_d()).approx_equal(b.b_aff, 1e-7)) << na::to_string(f);
    EXPECT_TRUE(a.b_inf->shifted(c.get_d()).approx_equal(*b.b_inf, 1e-9)) << na::to_string(f);
  }
}

TEST(Invariants, SwapSymmetry) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 40; ++i) {
    auto f = random_isolated(rng, 5, 3, false);
    auto a = na::invariants(f), b = na::invariants(na::swap_variables(f));
    EXPECT_EQ(a.nu, b.nu);
    EXPECT_EQ(a.mu, b.mu) << na::to_string(f);
    EXPECT_TRUE(a.b_aff.approx_equal(b.b_aff, 1e-7)) << na::to_string(f);
    EXPECT_EQ(a.b_inf.has_value(), b.b_inf.has_value());
    if (a.b_inf && b.b_inf) {
      EXPECT_TRUE(a.b_inf->approx_equal(*b.b_inf, 1e-9)) << na::to_string(f);
    }
  }
}

TEST(Invariants, MuPlusLambdaIsNu) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    auto f = random_isolated(rng, 5, 3, false);
    auto bundle = na::invariants(f);
    if (!bundle.nondegenerate) continue;
    ASSERT_TRUE(bundle.lambda.has_value());
    EXPECT_EQ(static_cast<std::int64_t>(bundle.mu) + *bundle.lambda, bundle.nu);
    EXPECT_GE(*bundle.lambda, 0) << na::to_string(f);
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Invariants, ConvenientNonDegenerateHasEmptyBInfAndMuEqualsNu) {
  std::mt19937_64 rng(44);
  int checked = 0;
  while (checked < 40) {
    auto f = random_isolated(rng, 4, 3, true);
    if (!na::is_nondegenerate(f).nondegenerate) continue;
    auto bundle = na::invariants(f);
    EXPECT_TRUE(bundle.b_inf->empty()) << na::to_string(f);
    EXPECT_EQ(static_cast<std::int64_t>(bundle.mu), bundle.nu) << na::to_string(f);
    ++checked;
  }
}

TEST(BAff, MatchesMultistartNewtonOracle) {
  std::mt19937_64 rng(45);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    auto f = random_isolated(rng, 4, 3, false);
    auto values = na::b_aff(f);
    auto found = oracle::multistart_critical_values(f);
    for (auto v : found) EXPECT_TRUE(values.contains(v, 1e-6)) << na::to_string(f) << " oracle value " << v;
    // Every solver value that lies on a bounded critical point should be reached from some start.
    for (const auto& rec : na::affine_critical_data(f)) {
      if (std::abs(rec.location.first) > 2.0 || std::abs(rec.location.second) > 2.0) continue;
      bool seen = std::any_of(found.begin(), found.end(), [&](ComplexValue w) { return std::abs(w - rec.value) < 1e-6; });
      EXPECT_TRUE(seen) << na::to_string(f) << " solver value " << rec.value;
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(AffineCritical, RecordsSatisfyResidualBound) {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 40; ++i) {
    auto f = random_isolated(rng, 5, 4, false);
    std::vector<na::CriticalPointRecord> records;
    try {
      records = na::affine_critical_data(f);
    } catch (const na::Error& e) {
      ADD_FAILURE() << na::to_string(f) << ": " << e.what();
      continue;
    }
    for (const auto& rec : records) {
      EXPECT_LE(rec.residual, na::SolveOptions{}.tol) << na::to_string(f);
      EXPECT_GE(rec.multiplicity, 1u);
      EXPECT_LT(std::abs(oracle::eval(f, rec.location.first, rec.location.second) - rec.value),
                1e-8 * std::max(1.0, std::abs(rec.value)));
    }
  }
}

TEST(AffineCritical, DeterministicForSeed) {
  auto f = P("x^3*y + y^3 - 2*x*y + x");
  na::SolveOptions options;
  options.seed = 77;
  auto a = na::affine_critical_data(f, options), b = na::affine_critical_data(f, options);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].location, b[i].location);
  }
}
