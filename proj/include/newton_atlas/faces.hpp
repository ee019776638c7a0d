#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "roots.hpp"
#include "value_set.hpp"

namespace newton_atlas {

// Coefficients of f along an edge: g_k is the coefficient of f at base + k*direction.
struct EdgeRestriction {
  LatticePoint base;
  LatticePoint direction;  // primitive
  UnivariatePolynomial g;
};

struct DegeneracyWitness {
  Face face;
  ComplexValue root;  // multiple nonzero root of the edge polynomial
};

struct DegeneracyReport {
  bool nondegenerate = true;
  std::vector<DegeneracyWitness> witnesses;
};

namespace detail {

inline bool is_face_of(const NewtonData& nd, const Face& face) {
  for (const auto& candidate : all_faces(nd.polygon)) {
    if (candidate.endpoints == face.endpoints) return true;
    if (candidate.is_edge() && face.is_edge() && candidate.endpoints[0] == face.endpoints[1] &&
        candidate.endpoints[1] == face.endpoints[0])
      return true;
  }
  return false;
}

}  // namespace detail

// Restriction of f to the lattice points of a face of its Newton polygon.
inline BivariatePolynomial face_polynomial(const BivariatePolynomial& f, const Face& face) {
  if (!detail::is_face_of(newton_data(f), face)) throw PreconditionError("face_polynomial: not a face of the Newton polygon");
  BivariatePolynomial out;
  for (const auto& pt : face.lattice_points) out.add_term(pt, f.coefficient(pt));
  return out;
}

// Base point: the origin for an origin edge, otherwise the first endpoint in
// counterclockwise order. Then
//   f_face = x^base.p y^base.q * sum_k g_k (x^d.p y^d.q)^k.
// No membership check is made against f's polygon, so the same routine serves
// faces of families and of polygons built by hand.
inline EdgeRestriction edge_restriction(const BivariatePolynomial& f, const Face& face) {
  if (!face.is_edge()) throw PreconditionError("edge_restriction: face is a vertex");
  LatticePoint start = face.endpoints[0], end = face.endpoints[1];
  if (end == LatticePoint{0, 0}) std::swap(start, end);
  std::int64_t dp = end.p - start.p, dq = end.q - start.q;
  std::int64_t g = std::gcd(dp < 0 ? -dp : dp, dq < 0 ? -dq : dq);
  EdgeRestriction r;
  r.base = start;
  r.direction = {dp / g, dq / g};
  std::vector<Rational> coeffs(static_cast<std::size_t>(g + 1));
  for (std::int64_t k = 0; k <= g; ++k)
    coeffs[static_cast<std::size_t>(k)] = f.coefficient({start.p + k * r.direction.p, start.q + k * r.direction.q});
  r.g = UnivariatePolynomial(std::move(coeffs));
  return r;
}

// Newton non-degeneracy through the one-variable reduction. For an edge of
// Gamma(f) the supporting line avoids the origin, so the matrix
// [[base.p, d.p], [base.q, d.q]] is invertible and, with u = x^d.p y^d.q,
//   x f_x = m (base.p g(u) + d.p u g'(u)),  y f_y = m (base.q g(u) + d.q u g'(u))
// (m the base monomial) vanish together on the torus iff g(u) = g'(u) = 0.
// As d is primitive, u sweeps all of C*. Hence the face is degenerate iff g,
// stripped of its power of t, has a multiple root. Vertices never are.
inline DegeneracyReport is_nondegenerate(const BivariatePolynomial& f, const RootOptions& options = {}) {
  if (f.is_zero()) throw std::invalid_argument("is_nondegenerate: zero polynomial");
  NewtonData nd = newton_data(f);
  DegeneracyReport report;
  for (const auto& face : nd.gamma_faces) {
    if (!face.is_edge()) continue;
    UnivariatePolynomial g = edge_restriction(f, face).g;
    g = g.shifted_down(g.valuation());
    UnivariatePolynomial common = univariate_gcd(g, g.derivative());
    if (common.degree() < 1) continue;
    report.nondegenerate = false;
    for (const auto& root : complex_roots(common, options)) report.witnesses.push_back({face, root.value});
  }
  return report;
}

// Critical values of the face polynomial of an origin edge on the torus:
// {g(t) : t != 0, g'(t) = 0} with g the edge restriction based at the origin.
// Exact rational critical points give exactly rounded values.
inline ValueSet c_gamma(const BivariatePolynomial& f, const Face& face, const RootOptions& options = {}) {
  if (!face.is_edge() || !face.contains_origin) throw PreconditionError("c_gamma: face must be an origin edge");
  if (face.on_x_axis || face.on_y_axis) throw PreconditionError("c_gamma: face lies on a coordinate axis");
  if (constant_term(f) != 0) throw PreconditionError("c_gamma: requires f(0,0) = 0");
  EdgeRestriction r = edge_restriction(f, face);
  ValueSet out(options.cluster_tol);
  UnivariatePolynomial dg = r.g.derivative();
  dg = dg.shifted_down(dg.valuation());
  if (dg.degree() < 1) return out;
  for (const auto& root : complex_roots(dg, options)) {
    if (root.exact) {
      out.insert(ComplexValue(r.g.evaluate(*root.exact).get_d(), 0.0));
    } else {
      out.insert(r.g.evaluate(root.value));
    }
  }
  return out;
}

}  // namespace newton_atlas
