#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "faces.hpp"
#include "resultant.hpp"

namespace newton_atlas {

struct SolveOptions {
  // Scaled residual accepted for roots and critical points.
  double tol = 1e-10;
  // Values closer than this are merged in value sets.
  double cluster_tol = 1e-8;
  std::uint64_t seed = 0x5eed;
  // Random shears tried when elimination is not in general position.
  int max_shears = 5;

  RootOptions root_options() const {
    RootOptions r;
    r.residual_tol = tol;
    r.cluster_tol = cluster_tol;
    r.seed = seed;
    return r;
  }
};

struct CriticalPointRecord {
  std::pair<ComplexValue, ComplexValue> location;
  ComplexValue value;
  std::size_t multiplicity = 1;
  // max(|f_x| / scale, |f_y| / scale) at the location, scale as in evaluation_scale.
  double residual = 0.0;
  // Set when both coordinates were certified rational; value is then exact.
  std::optional<std::pair<Rational, Rational>> exact_location;
};

// True iff f_x and f_y have no common factor of positive degree. When f_x is
// identically zero, f = h(y) and the gradient vanishes on the lines y = y0
// over the roots of h', so the singularities are isolated only for deg h = 1.
inline bool has_isolated_singularities(const BivariatePolynomial& f) {
  if (f.is_constant()) throw PreconditionError("has_isolated_singularities: constant polynomial");
  BivariatePolynomial fx = partial_derivative(f, Variable::x);
  BivariatePolynomial fy = partial_derivative(f, Variable::y);
  if (fx.is_zero()) return f.degree_in(Variable::y) == 1;
  if (fy.is_zero()) return f.degree_in(Variable::x) == 1;
  return !resultant_eliminate(fx, fy, Variable::y).is_zero() && !resultant_eliminate(fx, fy, Variable::x).is_zero();
}

namespace detail {

// Linear unimodular change of coordinates (x, y) -> (a x + b y, c x + d y).
struct LinearMap {
  Rational a = 1, b = 0, c = 0, d = 1;

  std::pair<ComplexValue, ComplexValue> apply(ComplexValue x, ComplexValue y) const {
    return {a.get_d() * x + b.get_d() * y, c.get_d() * x + d.get_d() * y};
  }
  std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const {
    return {a * x + b * y, c * x + d * y};
  }
};

inline double gradient_residual(const BivariatePolynomial& gx, const BivariatePolynomial& gy, ComplexValue x,
                                ComplexValue y) {
  double rx = std::abs(evaluate(gx, x, y)) / std::max(evaluation_scale(gx, x, y), 1e-300);
  double ry = std::abs(evaluate(gy, x, y)) / std::max(evaluation_scale(gy, x, y), 1e-300);
  return std::max(rx, ry);
}

// Leading coefficients of p and q in `main` have no common root.
inline bool leading_coefficients_coprime(const BivariatePolynomial& p, const BivariatePolynomial& q, Variable main) {
  auto a = coefficients_in(p, main);
  auto b = coefficients_in(q, main);
  return univariate_gcd(a.back(), b.back()).degree() < 1;
}

// Newton polish of a simple critical point on the gradient system.
inline std::pair<ComplexValue, ComplexValue> polish(const BivariatePolynomial& gx, const BivariatePolynomial& gy,
                                                    ComplexValue x, ComplexValue y) {
  BivariatePolynomial gxx = partial_derivative(gx, Variable::x), gxy = partial_derivative(gx, Variable::y);
  BivariatePolynomial gyy = partial_derivative(gy, Variable::y);
  double best = gradient_residual(gx, gy, x, y);
  for (int k = 0; k < 8; ++k) {
    ComplexValue u = evaluate(gx, x, y), v = evaluate(gy, x, y);
    ComplexValue h11 = evaluate(gxx, x, y), h12 = evaluate(gxy, x, y), h22 = evaluate(gyy, x, y);
    ComplexValue det = h11 * h22 - h12 * h12;
    if (det == ComplexValue(0.0)) break;
    ComplexValue dx = (h22 * u - h12 * v) / det, dy = (h11 * v - h12 * u) / det;
    ComplexValue nx = x - dx, ny = y - dy;
    if (!is_finite(nx) || !is_finite(ny)) break;
    double r = gradient_residual(gx, gy, nx, ny);
    if (!(r < best)) break;
    best = r;
    x = nx;
    y = ny;
  }
  return {x, y};
}

struct AttemptResult {
  bool generic = false;
  std::vector<CriticalPointRecord> points;  // in sheared coordinates
};

// Critical points of g, or generic = false when elimination is not in general
// position (common roots of leading coefficients, coinciding coordinates,
// ambiguous pairing).
inline AttemptResult critical_points_generic(const BivariatePolynomial& g, const SolveOptions& options) {
  constexpr double pair_tol = 1e-6;
  AttemptResult result;
  BivariatePolynomial gx = partial_derivative(g, Variable::x);
  BivariatePolynomial gy = partial_derivative(g, Variable::y);
  if (gx.is_zero() || gy.is_zero()) return result;
  if (!leading_coefficients_coprime(gx, gy, Variable::y) || !leading_coefficients_coprime(gx, gy, Variable::x))
    return result;
  UnivariatePolynomial rx = resultant_eliminate(gx, gy, Variable::y);
  UnivariatePolynomial ry = resultant_eliminate(gx, gy, Variable::x);
  if (rx.is_zero() || ry.is_zero()) throw NonIsolatedError("critical points are not isolated");
  if (rx.degree() != ry.degree()) return result;
  if (rx.degree() == 0) {
    result.generic = true;
    return result;
  }
  RootOptions ro = options.root_options();
  auto xs = complex_roots(rx, ro);
  auto ys = complex_roots(ry, ro);
  if (xs.size() != ys.size()) return result;

  std::vector<bool> used(ys.size(), false);
  for (const auto& xr : xs) {
    // Best y by residual; a runner-up within a factor 1000 makes the pairing ambiguous.
    std::optional<std::size_t> match;
    double best = pair_tol, second = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ys.size(); ++j) {
      double r = gradient_residual(gx, gy, xr.value, ys[j].value);
      if (!match || r < best) {
        if (match) second = std::min(second, best);
        if (r <= pair_tol) {
          match = j;
          best = r;
        } else {
          second = std::min(second, r);
        }
      } else {
        second = std::min(second, r);
      }
    }
    if (!match || second <= 1e3 * best + 1e-14) return result;
    if (used[*match] || ys[*match].multiplicity != xr.multiplicity) return result;
    used[*match] = true;
    const Root& yr = ys[*match];
    CriticalPointRecord rec;
    rec.multiplicity = xr.multiplicity;
    if (xr.exact && yr.exact) {
      rec.exact_location = std::make_pair(*xr.exact, *yr.exact);
      rec.location = {xr.value, yr.value};
    } else if (xr.multiplicity == 1) {
      rec.location = polish(gx, gy, xr.value, yr.value);
    } else {
      rec.location = {xr.value, yr.value};
    }
    rec.residual = gradient_residual(gx, gy, rec.location.first, rec.location.second);
    result.points.push_back(rec);
  }
  result.generic = true;
  return result;
}

// Shear coefficient in [-4, 4] \ {0} from raw generator output, so the
// sequence is identical on every platform.
inline Rational shear_coefficient(std::mt19937_64& rng) {
  auto k = static_cast<long>(rng() % 8);
  return Rational(k < 4 ? k - 4 : k - 3);
}

}  // namespace detail

// All affine critical points with multiplicities. The x- and y-coordinates
// come from the squarefree-decomposed resultants Res_y(f_x, f_y) and
// Res_x(f_x, f_y); their root multiplicities are intersection multiplicities
// when the leading coefficients have no common root. Coordinates are paired by
// the gradient residual. If general position fails, a random unimodular shear
// is applied and the computation repeated.
inline std::vector<CriticalPointRecord> affine_critical_data(const BivariatePolynomial& f,
                                                             const SolveOptions& options = {}) {
  if (!has_isolated_singularities(f)) throw NonIsolatedError("polynomial has non-isolated singularities");
  BivariatePolynomial fx = partial_derivative(f, Variable::x);
  BivariatePolynomial fy = partial_derivative(f, Variable::y);
  // One-variable f with isolated singularities is linear in that variable.
  if (fx.is_zero() || fy.is_zero()) return {};

  std::mt19937_64 rng(options.seed);
  detail::LinearMap map;
  BivariatePolynomial g = f;
  for (int attempt = 0; attempt <= options.max_shears; ++attempt) {
    if (attempt > 0) {
      Rational c1 = detail::shear_coefficient(rng), c2 = detail::shear_coefficient(rng);
      // g(x, y) = f(x + c1 (y + c2 x), y + c2 x)
      g = detail::shear(detail::shear(f, Automorphism::Kind::ShearXByY, 1, c1), Automorphism::Kind::ShearYByX, 1, c2);
      map = {1 + c1 * c2, c1, c2, Rational(1)};
    }
    detail::AttemptResult attempt_result = detail::critical_points_generic(g, options);
    if (!attempt_result.generic) continue;

    std::vector<CriticalPointRecord> out;
    for (auto rec : attempt_result.points) {
      if (rec.exact_location) {
        auto [x, y] = map.apply(rec.exact_location->first, rec.exact_location->second);
        rec.exact_location = std::make_pair(x, y);
        rec.location = {ComplexValue(x.get_d(), 0.0), ComplexValue(y.get_d(), 0.0)};
        rec.value = ComplexValue(evaluate(f, x, y).get_d(), 0.0);
      } else {
        rec.location = map.apply(rec.location.first, rec.location.second);
        if (rec.multiplicity == 1) rec.location = detail::polish(fx, fy, rec.location.first, rec.location.second);
        rec.value = evaluate(f, rec.location.first, rec.location.second);
      }
      rec.location = {normalize_zero(rec.location.first), normalize_zero(rec.location.second)};
      rec.value = normalize_zero(rec.value);
      rec.residual = detail::gradient_residual(fx, fy, rec.location.first, rec.location.second);
      out.push_back(rec);
    }
    std::sort(out.begin(), out.end(), [](const CriticalPointRecord& a, const CriticalPointRecord& b) {
      auto key = [](const CriticalPointRecord& r) {
        return std::make_tuple(r.location.first.real(), r.location.first.imag(), r.location.second.real(),
                               r.location.second.imag());
      };
      return key(a) < key(b);
    });
    return out;
  }
  throw SolverError("affine_critical_data: no shear in general position after " +
                    std::to_string(options.max_shears) + " attempts");
}

inline std::size_t mu_affine(const BivariatePolynomial& f, const SolveOptions& options = {}) {
  std::size_t mu = 0;
  for (const auto& rec : affine_critical_data(f, options)) mu += rec.multiplicity;
  return mu;
}

inline ValueSet b_aff(const BivariatePolynomial& f, const SolveOptions& options = {}) {
  ValueSet out(options.cluster_tol);
  for (const auto& rec : affine_critical_data(f, options)) out.insert(rec.value);
  return out;
}

namespace detail {

// B_inf restricted to one axis for w with w(0,0) = 0, following the origin
// face adjacent to that axis. For the x-axis: empty if w is convenient for x;
// otherwise with x^p y the term of maximal p, C_{gamma_x} when (p, 1) lies on
// the closed face gamma_x and {0} u C_{gamma_x} when it does not.
inline ValueSet b_inf_axis(const BivariatePolynomial& w, const NewtonData& nd, const Face& origin_face, bool x_axis,
                           const SolveOptions& options, std::vector<std::string>& warnings) {
  ValueSet out(options.cluster_tol);
  Convenience conv = convenience(w);
  if (x_axis ? conv.convenient_x : conv.convenient_y) return out;
  std::optional<LatticePoint> best;
  for (const auto& e : w.support()) {
    std::int64_t along = x_axis ? e.p : e.q;
    std::int64_t across = x_axis ? e.q : e.p;
    if (across != 1) continue;
    if (!best || along > (x_axis ? best->p : best->q)) best = e;
  }
  if (!best) throw NonIsolatedError(std::string("polynomial is divisible by ") + (x_axis ? "y^2" : "x^2"));
  out = c_gamma(w, origin_face, options.root_options());
  if (!origin_face.contains(*best)) {
    out.insert(ComplexValue(0.0));
    for (const auto& face : all_faces(nd.polygon)) {
      if (face == origin_face || !face.contains(*best)) continue;
      warnings.push_back("monomial x^" + std::to_string(best->p) + "*y^" + std::to_string(best->q) +
                         " lies on a face of the Newton polygon other than gamma_" + (x_axis ? "x" : "y"));
      break;
    }
  }
  return out;
}

}  // namespace detail

// Critical values at infinity of a non-degenerate polynomial depending on both
// variables. A one-variable input gives the empty set and a warning.
inline ValueSet b_inf(const BivariatePolynomial& f, const SolveOptions& options = {},
                      std::vector<std::string>* warnings = nullptr) {
  std::vector<std::string> local;
  std::vector<std::string>& notes = warnings ? *warnings : local;
  if (!has_isolated_singularities(f)) throw NonIsolatedError("polynomial has non-isolated singularities");
  Rational c0 = constant_term(f);
  BivariatePolynomial w = f - BivariatePolynomial::constant(c0);
  ValueSet out(options.cluster_tol);
  if (independent_of(w, Variable::x) || independent_of(w, Variable::y)) {
    notes.push_back("polynomial depends on one variable only; B_inf reported empty");
    return out;
  }
  DegeneracyReport report = is_nondegenerate(w, options.root_options());
  if (!report.nondegenerate) {
    const Face& face = report.witnesses.front().face;
    std::string where = "(" + std::to_string(face.endpoints[0].p) + "," + std::to_string(face.endpoints[0].q) + ")-(" +
                        std::to_string(face.endpoints[1].p) + "," + std::to_string(face.endpoints[1].q) + ")";
    throw DegenerateError("polynomial is degenerate on the face " + where);
  }
  if (convenience(w).both()) return out;
  NewtonData nd = newton_data(w);
  Face face_x, face_y;
  if (nd.gamma_x && nd.gamma_y) {
    face_x = *nd.gamma_x;
    face_y = *nd.gamma_y;
  } else {
    // Support on one ray off the axes: the hull is a segment through the origin.
    face_x = face_y = make_face(nd.polygon.vertices()[0], nd.polygon.vertices()[1]);
  }
  out.merge(detail::b_inf_axis(w, nd, face_x, true, options, notes));
  out.merge(detail::b_inf_axis(w, nd, face_y, false, options, notes));
  return out.shifted(ComplexValue(c0.get_d(), 0.0));
}

struct InvariantBundle {
  std::int64_t nu = 0;
  std::size_t mu = 0;
  // nu - mu; only available for non-degenerate f.
  std::optional<std::int64_t> lambda;
  std::vector<CriticalPointRecord> critical_points;
  ValueSet b_aff;
  std::optional<ValueSet> b_inf;
  std::optional<ValueSet> b;
  bool nondegenerate = false;
  bool isolated = false;
  std::vector<std::string> warnings;
};

// Everything computable for a single polynomial. Degenerate input leaves
// lambda, b_inf and b unset.
inline InvariantBundle invariants(const BivariatePolynomial& f, const SolveOptions& options = {}) {
  if (f.is_constant()) throw PreconditionError("invariants: constant polynomial");
  InvariantBundle bundle;
  bundle.isolated = has_isolated_singularities(f);
  if (!bundle.isolated) throw NonIsolatedError("polynomial has non-isolated singularities");
  NewtonData nd = newton_data(f);
  bundle.nu = nd.nu;
  bundle.critical_points = affine_critical_data(f, options);
  bundle.b_aff = ValueSet(options.cluster_tol);
  for (const auto& rec : bundle.critical_points) {
    bundle.mu += rec.multiplicity;
    bundle.b_aff.insert(rec.value);
  }
  BivariatePolynomial w = f - BivariatePolynomial::constant(constant_term(f));
  bundle.nondegenerate = is_nondegenerate(w, options.root_options()).nondegenerate;
  if (!bundle.nondegenerate) {
    bundle.warnings.push_back("polynomial is degenerate; lambda and B_inf unavailable");
    return bundle;
  }
  bundle.lambda = bundle.nu - static_cast<std::int64_t>(bundle.mu);
  bundle.b_inf = b_inf(f, options, &bundle.warnings);
  ValueSet b = bundle.b_aff;
  b.merge(*bundle.b_inf);
  bundle.b = b;
  return bundle;
}

}  // namespace newton_atlas
