// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [path-to-newton-atlas-cli]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"

namespace na = newton_atlas;
using na::ComplexValue;
using na::Rational;

namespace {

// Collects the first failure message of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

na::BivariatePolynomial P(const std::string& text) { return na::parse_bivariate(text); }
na::PolynomialFamily F(const std::string& text) { return na::parse_family(text); }

bool same_values(const na::ValueSet& s, std::vector<ComplexValue> expected, double tol = 1e-8) {
  if (s.size() != expected.size()) return false;
  for (auto v : expected)
    if (!s.contains(v, tol)) return false;
  return true;
}

std::string show(const na::ValueSet& s) {
  std::ostringstream out;
  out << "{";
  for (auto v : s) out << " " << v;
  out << " }";
  return out.str();
}

const na::SweepSample* sample_at(const na::SweepReport& r, const Rational& s) {
  for (const auto& sample : r.samples)
    if (sample.s.is_rational() && *sample.s.exact() == s) return &sample;
  return nullptr;
}

std::string capture(const std::string& cmd, int& code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// ---------------------------------------------------------------- criteria

void xy_term_family(Check& c) {
  auto s0 = na::invariants(P("x^2*y^2 + x"));
  c.expect(s0.nu == 2, "nu(0) != 2");
  c.expect(s0.mu == 0, "mu(0) != 0");
  c.expect(s0.lambda == 2, "lambda(0) != 2");
  c.expect(s0.b_inf && same_values(*s0.b_inf, {{0, 0}}), "B_inf(0) = " + (s0.b_inf ? show(*s0.b_inf) : "unset"));
  c.expect(s0.b_aff.empty(), "B_aff(0) not empty");
  auto s1 = na::invariants(na::evaluate_family(F("x^2*y^2 + s*x*y + x"), 1));
  c.expect(s1.mu == 1, "mu(1) != 1");
  c.expect(s1.lambda == 1, "lambda(1) != 1");
  c.expect(same_values(s1.b_aff, {{0, 0}}), "B_aff(1) = " + show(s1.b_aff));
  c.expect(s1.b_inf && same_values(*s1.b_inf, {{-0.25, 0}}), "B_inf(1) != {-1/4}");
}

void quartic_family(Check& c) {
  auto fam = F("x^4 - x^2*y^2 + 2*x*y + s*x^2");
  auto report = na::sweep(fam, 0, 1);
  std::size_t grid = 0;
  for (const auto& sample : report.samples) {
    if (!sample.bundle) {
      c.expect(false, "sample failed: " + sample.error);
      continue;
    }
    const auto& b = *sample.bundle;
    c.expect(b.nu == 5, "nu != 5 at s = " + sample.s.to_string());
    c.expect(b.b_inf && same_values(*b.b_inf, {{1, 0}}), "B_inf != {1} at s = " + sample.s.to_string());
    c.expect(b.lambda && static_cast<std::int64_t>(b.mu) + *b.lambda == 5, "mu + lambda != 5");
    if (sample.s.is_rational() && Rational(*sample.s.exact() * 32).get_den() == 1) ++grid;
  }
  c.expect(grid == 33, "expected 33 uniform samples, found " + std::to_string(grid));
  const auto* at0 = sample_at(report, 0);
  const auto* at1 = sample_at(report, 1);
  c.expect(at0 && at0->bundle && same_values(at0->bundle->b_aff, {{0, 0}}), "B_aff(0) != {0}");
  c.expect(at1 && at1->bundle && same_values(at1->bundle->b_aff, {{0, 0}, {0.75, 0}}), "B_aff(1) != {0, 3/4}");
  c.expect(!report.closedness_ok_baff, "B_aff reported closed");
  c.expect(report.closedness_ok_b, "B reported not closed");
}

void hyperbola_family(Check& c) {
  auto fam = F("(x-s)*(x*y-1)");
  c.expect(same_values(na::b_aff(na::evaluate_family(fam, 1)), {{0, 0}, {1, 0}}), "B_aff(1) != {0, 1}");
  c.expect(na::b_aff(na::evaluate_family(fam, 0)).empty(), "B_aff(0) not empty");
  auto report = na::sweep(fam, 0, 1);
  c.expect(!report.closedness_ok_baff, "closedness_ok_baff is true");
}

void degree_examples(Check& c) {
  c.expect(na::classify_degree(F("x + s*y^2")).verdict == na::DegreeVerdict::QuasiConstantDegree,
           "x + s*y^2 not quasi-constant degree");
  c.expect(na::classify_degree(F("s*x*y + x")).verdict == na::DegreeVerdict::Neither, "s*x*y + x not 'neither'");
  auto fam = F("x*y + s*y^3");
  auto cls = na::classify_degree(fam);
  c.expect(cls.automorphism && *cls.automorphism == na::Automorphism{na::Automorphism::Kind::ShearXByY, 3},
           "automorphism is not (x + y^3, y)");
  auto composed = na::compose_automorphism(fam, na::Automorphism{na::Automorphism::Kind::ShearXByY, 3});
  c.expect(composed == F("y^4 + x*y + s*y^3"), "f o Phi = " + na::to_string(composed));
  for (long k = 0; k <= 32; ++k)
    c.expect(na::evaluate_family(composed, na::make_rational(k, 32)).total_degree() == 4, "degree of f o Phi not 4");
}

void tau_facts(Check& c) {
  c.expect(na::tau_of_polytope(na::LatticePolygon({{0, 0}, {1, 0}, {0, 1}})) == -1, "tau(T0) != -1");
  std::mt19937_64 rng(0x7a0);
  int axis_free = 0, one_axis = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<na::LatticePoint> pts;
    // Mix of shapes so both restatements get exercised.
    switch (i % 3) {
      case 0: pts = oracle::random_points(rng, 3, 7); break;
      case 1:
        for (int k = 0; k < 3; ++k) pts.push_back({oracle::uniform(rng, 1, 7), oracle::uniform(rng, 1, 7)});
        break;
      default: {
        std::int64_t x0 = oracle::uniform(rng, 0, 4), a = oracle::uniform(rng, 1, 5);
        pts = {{x0, 0}, {x0 + a, 0}, {oracle::uniform(rng, 0, 7), oracle::uniform(rng, 1, 6)}};
        if (rng() % 2)
          for (auto& p : pts) std::swap(p.p, p.q);
      }
    }
    if (oracle::orient(pts[0], pts[1], pts[2]) == 0) {
      --i;
      continue;
    }
    auto t = na::convex_hull(pts);
    auto counts = oracle::lattice_counts(pts);
    std::int64_t tau = na::tau_of_polytope(t);
    c.expect(tau == counts.tau() && t.doubled_area() == counts.doubled_area, "tau differs from lattice-count oracle");
    std::int64_t a = t.x_axis_length(), b = t.y_axis_length();
    if (a == 0 && b == 0) {
      ++axis_free;
      c.expect(tau == t.doubled_area() && tau > 0, "axis-free triangle with tau != 2S > 0");
    } else if ((a > 0) != (b > 0)) {
      ++one_axis;
      std::int64_t len = a > 0 ? a : b;
      std::int64_t h = 0;
      for (const auto& v : t.vertices()) h = std::max(h, a > 0 ? v.q : v.p);
      c.expect(tau == len * (h - 1), "one-axis triangle with tau != a(h-1)");
    }
  }
  c.expect(axis_free > 100 && one_axis > 100, "too few triangles of each kind");
  for (int i = 0; i < 100; ++i) {
    na::LatticePolygon poly;
    do poly = na::convex_hull(oracle::random_points(rng, static_cast<int>(oracle::uniform(rng, 3, 10)), 9));
    while (poly.is_degenerate());
    const auto& v = poly.vertices();
    for (std::size_t start = 0; start < v.size(); ++start) {
      std::int64_t sum = 0;
      for (std::size_t k = 1; k + 1 < v.size(); ++k)
        sum += na::tau_of_polytope(
            na::LatticePolygon({v[start], v[(start + k) % v.size()], v[(start + k + 1) % v.size()]}));
      c.expect(sum == na::tau_of_polytope(poly), "fan triangulation not tau-additive");
    }
  }
}

void nondegeneracy_oracle(Check& c) {
  std::mt19937_64 rng(0xdec);
  int degenerate = 0;
  for (int i = 0; i < 200; ++i) {
    na::BivariatePolynomial f;
    if (i % 4 == 0) {
      auto g = oracle::random_polynomial(rng, 3, 2, 3);
      f = g * g;
    } else {
      f = oracle::random_polynomial(rng, 6, 4, 5);
    }
    bool ours = na::is_nondegenerate(f).nondegenerate;
    bool theirs = !oracle::degenerate_by_torus_solve(f);
    degenerate += !theirs;
    c.expect(ours == theirs, "disagreement on " + na::to_string(f));
  }
  c.expect(degenerate > 10, "corpus has too few degenerate instances");
  auto rep = na::is_nondegenerate(P("(x+y)^2"));
  c.expect(!rep.nondegenerate && rep.witnesses.size() == 1 && std::abs(rep.witnesses[0].root + 1.0) < 1e-12,
           "(x+y)^2 not degenerate with witness -1");
}

void broughton(Check& c) {
  std::mt19937_64 rng(0xb0);
  int count = 0;
  while (count < 100) {
    auto f = oracle::random_polynomial(rng, 4, 4, 4);
    f.add_term({0, 0}, -f.coefficient({0, 0}));
    f.add_term({oracle::uniform(rng, 1, 4), 0}, oracle::nonzero_coefficient(rng, 4));
    f.add_term({0, oracle::uniform(rng, 1, 4)}, oracle::nonzero_coefficient(rng, 4));
    if (!na::convenience(f).both() || !na::has_isolated_singularities(f) || !na::is_nondegenerate(f).nondegenerate)
      continue;
    auto b = na::invariants(f);
    c.expect(b.b_inf && b.b_inf->empty(), "B_inf not empty for " + na::to_string(f));
    c.expect(static_cast<std::int64_t>(b.mu) == b.nu, "mu != nu for convenient " + na::to_string(f));
    ++count;
  }
}

void milnor_equality(Check& c) {
  std::vector<std::string> corpus = {"x^2*y^2 + x*y + x",  "x^2*y^2 + x",       "x^4 - x^2*y^2 + 2*x*y + x^2",
                                     "x^4 - x^2*y^2 + 2*x*y", "(x-1)*(x*y-1)",  "x*(x*y-1)",
                                     "x^2 + y^2",          "x^3 - 3*x + y^2",   "x*y",
                                     "x + y^2*x^2",        "x^3 + y^3 + x*y",   "x*y^2 + x^3*y + y"};
  for (long k = 0; k <= 32; ++k) {
    corpus.push_back(na::to_string(na::evaluate_family(F("x^2*y^2 + s*x*y + x"), na::make_rational(k, 32))));
    corpus.push_back(na::to_string(na::evaluate_family(F("x^4 - x^2*y^2 + 2*x*y + s*x^2"), na::make_rational(k, 32))));
  }
  std::mt19937_64 rng(0xc0);
  for (int i = 0; i < 60; ++i) corpus.push_back(na::to_string(oracle::random_polynomial(rng, 5, 3, 4)));
  int checked = 0;
  for (const auto& text : corpus) {
    auto f = P(text);
    if (f.is_constant() || !na::has_isolated_singularities(f)) continue;
    auto b = na::invariants(f);
    if (!b.nondegenerate) continue;
    c.expect(b.lambda && static_cast<std::int64_t>(b.mu) + *b.lambda == b.nu && *b.lambda >= 0,
             "mu + lambda != nu or lambda < 0 for " + text);
    ++checked;
  }
  c.expect(checked > 60, "too few corpus instances");
  // Independent complement: nu by lattice counting, mu by counting critical
  // points found from many Newton starts (all simple for these items).
  auto check_item = [&](const std::string& family, Rational s, std::int64_t expected_lambda) {
    auto f = na::evaluate_family(F(family), s);
    auto pts = f.support();
    pts.push_back({0, 0});
    std::int64_t nu = oracle::lattice_counts(pts).tau() + 1;
    std::int64_t mu = static_cast<std::int64_t>(oracle::multistart_critical_points(f).size());
    auto b = na::invariants(f);
    c.expect(b.lambda == nu - mu && nu - mu == expected_lambda,
             "lambda mismatch for " + family + " at s = " + na::to_string(s));
  };
  check_item("x^2*y^2 + s*x*y + x", 0, 2);
  for (long k : {1, 2, 3, 4}) check_item("x^2*y^2 + s*x*y + x", na::make_rational(k, 4), 1);
  check_item("x^4 - x^2*y^2 + 2*x*y + s*x^2", 0, 4);
  for (long k : {1, 2, 3, 4}) check_item("x^4 - x^2*y^2 + 2*x*y + s*x^2", na::make_rational(k, 4), 2);
}

void determinism(Check& c, const std::string& cli) {
  std::vector<std::string> families = {"x^2*y^2 + s*x*y + x", "x^4 - x^2*y^2 + 2*x*y + s*x^2", "(x-s)*(x*y-1)",
                                       "x + s*y^2", "s*x*y + x", "x*y + s*y^3"};
  for (const auto& text : families) {
    auto a = na::dump(na::family_json(F(text), 0, 1));
    auto b = na::dump(na::family_json(F(text), 0, 1));
    c.expect(a == b, "in-process JSON differs for " + text);
  }
  for (const char* text : {"x^2*y^2 + x", "x^2*y^2 + x*y + x", "x^4 - x^2*y^2 + 2*x*y + x^2", "(x-1)*(x*y-1)"}) {
    auto a = na::dump(na::invariants_json(P(text))), b = na::dump(na::invariants_json(P(text)));
    c.expect(a == b, std::string("in-process invariants JSON differs for ") + text);
  }
  if (cli.empty()) return;
  for (const auto& text : families) {
    std::string cmd = "'" + cli + "' family '" + text + "' --seed 7";
    int c1 = 0, c2 = 0;
    auto a = capture(cmd, c1), b = capture(cmd, c2);
    c.expect(c1 == 0 && c2 == 0, "CLI failed for " + text);
    c.expect(!a.empty() && a == b, "CLI JSON differs for " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "x^2y^2+sxy+x at s=0 and s=1", xy_term_family},
      {2, "x^4-x^2y^2+2xy+sx^2 sweep", quartic_family},
      {3, "(x-s)(xy-1) affine values", hyperbola_family},
      {4, "degree classification examples", degree_examples},
      {5, "tau formulas and additivity", tau_facts},
      {6, "non-degeneracy against torus-solve oracle", nondegeneracy_oracle},
      {7, "convenient non-degenerate polynomials have empty B_inf", broughton},
      {8, "mu + lambda = nu on the corpus", milnor_equality},
      {9, "byte-identical JSON on repeated runs", [&](Check& c) { determinism(c, cli); }},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < 10.0, "took " + std::to_string(seconds) + " s");
    bool ok = check.failure.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number << ": " << criterion.title;
    if (!ok) std::cout << " (" << check.failure << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
