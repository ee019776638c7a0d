#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bivariate.hpp"

namespace newton_atlas {

using LatticePoint = Exponent;

// Twice the signed area of the triangle (o, a, b); positive when
// counterclockwise.
inline __int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<__int128>(a.p - o.p) * (b.q - o.q) - static_cast<__int128>(a.q - o.q) * (b.p - o.p);
}

enum class Degeneracy { none, segment, point, empty };

// Convex lattice polygon in the closed first quadrant. Vertices run
// counterclockwise from the lexicographically smallest one, with no three
// consecutive vertices collinear. One or two vertices encode a point or a
// segment.
class LatticePolygon {
 public:
  LatticePolygon() = default;

  // Validates the stored form; use convex_hull() to build from arbitrary points.
  explicit LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    for (const auto& v : vertices_)
      if (v.p < 0 || v.q < 0) throw std::invalid_argument("polygon vertex outside the first quadrant");
    if (vertices_.size() == 2 && vertices_[0] == vertices_[1])
      throw std::invalid_argument("repeated polygon vertex");
    if (vertices_.size() >= 3) {
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        const auto& c = vertices_[(i + 2) % vertices_.size()];
        if (cross(a, b, c) <= 0) throw std::invalid_argument("polygon is not strictly convex and counterclockwise");
      }
    }
    auto smallest = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), smallest, vertices_.end());
  }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  Degeneracy degeneracy() const {
    switch (vertices_.size()) {
      case 0: return Degeneracy::empty;
      case 1: return Degeneracy::point;
      case 2: return Degeneracy::segment;
      default: return Degeneracy::none;
    }
  }
  bool is_degenerate() const { return vertices_.size() < 3; }

  // 2 * area, from the shoelace sum.
  std::int64_t doubled_area() const {
    if (vertices_.size() < 3) return 0;
    __int128 sum = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[(i + 1) % vertices_.size()];
      sum += static_cast<__int128>(a.p) * b.q - static_cast<__int128>(b.p) * a.q;
    }
    return static_cast<std::int64_t>(sum);
  }

  // Length of the intersection with the x-axis (resp. y-axis). The polygon
  // lies in the closed upper half plane, so this intersection is the convex
  // hull of the vertices on the axis.
  std::int64_t x_axis_length() const { return axis_length(true); }
  std::int64_t y_axis_length() const { return axis_length(false); }

  // Point in polygon, boundary included.
  bool contains(const LatticePoint& pt) const {
    if (vertices_.empty()) return false;
    if (vertices_.size() == 1) return pt == vertices_[0];
    if (vertices_.size() == 2) return on_segment(vertices_[0], vertices_[1], pt);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], pt) < 0) return false;
    return true;
  }

  static bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& pt) {
    if (cross(a, b, pt) != 0) return false;
    return std::min(a.p, b.p) <= pt.p && pt.p <= std::max(a.p, b.p) && std::min(a.q, b.q) <= pt.q &&
           pt.q <= std::max(a.q, b.q);
  }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::int64_t axis_length(bool x_axis) const {
    std::optional<std::int64_t> lo, hi;
    for (const auto& v : vertices_) {
      if ((x_axis ? v.q : v.p) != 0) continue;
      std::int64_t c = x_axis ? v.p : v.q;
      lo = lo ? std::min(*lo, c) : c;
      hi = hi ? std::max(*hi, c) : c;
    }
    return lo ? *hi - *lo : 0;
  }

  std::vector<LatticePoint> vertices_;
};

// Andrew's monotone chain with exact integer orientation tests.
inline LatticePolygon convex_hull(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return LatticePolygon(points);
  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& pt : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return LatticePolygon(hull);
}

// Face of a polygon: an edge (two endpoints, counterclockwise order) or a vertex.
struct Face {
  std::vector<LatticePoint> endpoints;
  std::vector<LatticePoint> lattice_points;
  bool contains_origin = false;
  bool on_x_axis = false;
  bool on_y_axis = false;

  bool is_edge() const { return endpoints.size() == 2; }
  std::int64_t lattice_length() const { return lattice_points.empty() ? 0 : static_cast<std::int64_t>(lattice_points.size()) - 1; }
  bool contains(const LatticePoint& pt) const {
    return std::find(lattice_points.begin(), lattice_points.end(), pt) != lattice_points.end();
  }

  friend bool operator==(const Face& a, const Face& b) { return a.endpoints == b.endpoints; }
};

inline Face make_face(const LatticePoint& a) {
  Face f;
  f.endpoints = {a};
  f.lattice_points = {a};
  f.contains_origin = a == LatticePoint{0, 0};
  f.on_x_axis = a.q == 0;
  f.on_y_axis = a.p == 0;
  return f;
}

inline Face make_face(const LatticePoint& a, const LatticePoint& b) {
  Face f;
  f.endpoints = {a, b};
  std::int64_t dp = b.p - a.p, dq = b.q - a.q;
  std::int64_t g = std::gcd(dp < 0 ? -dp : dp, dq < 0 ? -dq : dq);
  for (std::int64_t k = 0; k <= g; ++k) f.lattice_points.push_back({a.p + k * dp / g, a.q + k * dq / g});
  f.contains_origin = f.contains({0, 0});
  f.on_x_axis = a.q == 0 && b.q == 0;
  f.on_y_axis = a.p == 0 && b.p == 0;
  return f;
}

// All faces (edges, then vertices) of a polygon, edges in counterclockwise order.
inline std::vector<Face> all_faces(const LatticePolygon& poly) {
  std::vector<Face> out;
  const auto& v = poly.vertices();
  if (v.size() == 2) out.push_back(make_face(v[0], v[1]));
  if (v.size() >= 3)
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(make_face(v[i], v[(i + 1) % v.size()]));
  for (const auto& pt : v) out.push_back(make_face(pt));
  return out;
}

// Newton polygon data of a polynomial: the hull of the origin and the support,
// its faces away from the origin, the two origin edges and the lattice
// invariants nu = 2S - a - b + 1 and tau = nu - 1.
struct NewtonData {
  LatticePolygon polygon;
  std::vector<Face> gamma_faces;  // closed faces not containing the origin
  std::optional<Face> gamma_x;    // origin edge of smaller polar angle
  std::optional<Face> gamma_y;    // origin edge of larger polar angle
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t doubled_area = 0;
  std::int64_t nu = 0;
  std::int64_t tau = 0;

  Degeneracy degeneracy() const { return polygon.degeneracy(); }
  bool is_degenerate() const { return polygon.is_degenerate(); }
};

inline NewtonData newton_data_of_points(std::vector<LatticePoint> support) {
  support.push_back({0, 0});
  NewtonData nd;
  nd.polygon = convex_hull(std::move(support));
  nd.doubled_area = nd.polygon.doubled_area();
  nd.a = nd.polygon.x_axis_length();
  nd.b = nd.polygon.y_axis_length();
  nd.nu = nd.doubled_area - nd.a - nd.b + 1;
  nd.tau = nd.nu - 1;
  const auto& v = nd.polygon.vertices();
  if (v.size() >= 3) {
    // v[0] is the origin.
    nd.gamma_x = make_face(v[0], v[1]);
    nd.gamma_y = make_face(v.back(), v[0]);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) nd.gamma_faces.push_back(make_face(v[i], v[i + 1]));
    for (std::size_t i = 1; i < v.size(); ++i) nd.gamma_faces.push_back(make_face(v[i]));
  }
  return nd;
}

inline NewtonData newton_data(const BivariatePolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_data: zero polynomial");
  return newton_data_of_points(f.support());
}

// tau(P) = 2S - a - b for a polygon of positive area.
inline std::int64_t tau_of_polytope(const LatticePolygon& poly) {
  if (poly.is_degenerate()) throw std::invalid_argument("tau_of_polytope: degenerate polygon");
  return poly.doubled_area() - poly.x_axis_length() - poly.y_axis_length();
}

// 2S - a - b without the positive-area requirement (segments and points give -a - b).
inline std::int64_t tau_extended(const LatticePolygon& poly) {
  return poly.doubled_area() - poly.x_axis_length() - poly.y_axis_length();
}

// Fan triangulation from the lexicographically smallest vertex.
inline std::vector<LatticePolygon> triangulate(const LatticePolygon& poly) {
  if (poly.is_degenerate()) throw std::invalid_argument("triangulate: degenerate polygon");
  const auto& v = poly.vertices();
  std::vector<LatticePolygon> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) out.push_back(LatticePolygon({v[0], v[i], v[i + 1]}));
  return out;
}

struct Convenience {
  bool convenient_x = false;
  bool convenient_y = false;
  bool both() const { return convenient_x && convenient_y; }
};

template <class Coeff>
Convenience convenience(const SparseBivariate<Coeff>& f) {
  Convenience c;
  for (const auto& [e, coeff] : f.terms()) {
    if (e.q == 0 && e.p > 0) c.convenient_x = true;
    if (e.p == 0 && e.q > 0) c.convenient_y = true;
  }
  return c;
}

}  // namespace newton_atlas
