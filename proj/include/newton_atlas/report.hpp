#pragma once

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "family.hpp"
#include "parser.hpp"

namespace newton_atlas {

using Json = nlohmann::ordered_json;

namespace detail {

inline double clean(double v) { return v == 0.0 ? 0.0 : v; }

inline Json point_json(const LatticePoint& pt) { return Json::array({pt.p, pt.q}); }

inline Json points_json(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& pt : pts) out.push_back(point_json(pt));
  return out;
}

inline Json complex_json(ComplexValue z) { return Json::array({clean(z.real()), clean(z.imag())}); }

inline Json value_set_json(const ValueSet& set) {
  Json out = Json::array();
  for (const auto& v : set) out.push_back(complex_json(v));
  return out;
}

inline Json optional_value_set_json(const std::optional<ValueSet>& set) {
  return set ? value_set_json(*set) : Json(nullptr);
}

inline Json parameter_json(const RealParameter& p) {
  Json out;
  out["value"] = p.to_string();
  out["approx"] = clean(p.approx());
  out["exact"] = p.is_rational();
  return out;
}

inline Json face_json(const Face& face, const std::string& role) {
  Json out;
  out["endpoints"] = points_json(face.endpoints);
  out["lattice_points"] = points_json(face.lattice_points);
  out["role"] = role;
  out["contains_origin"] = face.contains_origin;
  out["on_x_axis"] = face.on_x_axis;
  out["on_y_axis"] = face.on_y_axis;
  return out;
}

inline std::string degeneracy_name(Degeneracy d) {
  switch (d) {
    case Degeneracy::none: return "none";
    case Degeneracy::segment: return "segment";
    case Degeneracy::point: return "point";
    default: return "empty";
  }
}

inline Json automorphism_json(const Automorphism& phi) {
  Json out;
  out["kind"] = to_string(phi.kind);
  out["l"] = phi.exponent;
  return out;
}

inline Json witness_json(const DegreeWitness& w) {
  Json out;
  out["monomial"] = point_json(w.monomial);
  out["order"] = to_string(w.order);
  return out;
}

inline Json polygon_vertices_json(const LatticePolygon& poly) { return points_json(poly.vertices()); }

}  // namespace detail

// Newton polygon description. `support` is the support whose hull is drawn;
// `disappearing` lists monomials of it that vanish at the chosen parameter.
inline Json newton_json(const std::vector<LatticePoint>& support, const std::vector<LatticePoint>& disappearing = {}) {
  NewtonData nd = newton_data_of_points(support);
  Json out;
  out["vertices"] = detail::polygon_vertices_json(nd.polygon);
  out["degeneracy"] = detail::degeneracy_name(nd.degeneracy());
  Json faces = Json::array();
  if (nd.gamma_x) faces.push_back(detail::face_json(*nd.gamma_x, "gamma_x"));
  if (nd.gamma_y) faces.push_back(detail::face_json(*nd.gamma_y, "gamma_y"));
  for (const auto& face : nd.gamma_faces) faces.push_back(detail::face_json(face, "gamma"));
  out["faces"] = faces;
  out["a"] = nd.a;
  out["b"] = nd.b;
  out["doubled_area"] = nd.doubled_area;
  out["nu"] = nd.nu;
  out["tau"] = nd.tau;
  std::vector<LatticePoint> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  out["support"] = detail::points_json(sorted);
  out["disappearing"] = detail::points_json(disappearing);
  return out;
}

inline Json invariants_json(const BivariatePolynomial& f, const SolveOptions& options = {}) {
  Json out;
  out["polynomial"] = to_string(f);
  InvariantBundle bundle = invariants(f, options);
  out["nu"] = bundle.nu;
  out["mu"] = bundle.mu;
  out["lambda"] = bundle.lambda ? Json(*bundle.lambda) : Json(nullptr);
  out["nondegenerate"] = bundle.nondegenerate;
  out["isolated"] = bundle.isolated;
  out["baff"] = detail::value_set_json(bundle.b_aff);
  out["binf"] = detail::optional_value_set_json(bundle.b_inf);
  out["b"] = detail::optional_value_set_json(bundle.b);
  Json points = Json::array();
  for (const auto& rec : bundle.critical_points) {
    Json p;
    p["x"] = detail::complex_json(rec.location.first);
    p["y"] = detail::complex_json(rec.location.second);
    p["value"] = detail::complex_json(rec.value);
    p["multiplicity"] = rec.multiplicity;
    points.push_back(p);
  }
  out["critical_points"] = points;
  Json witnesses = Json::array();
  for (const auto& w : is_nondegenerate(f, options.root_options()).witnesses) {
    Json item;
    item["face"] = detail::points_json(w.face.endpoints);
    item["root"] = detail::complex_json(w.root);
    witnesses.push_back(item);
  }
  out["degeneracy_witnesses"] = witnesses;
  out["warnings"] = bundle.warnings;
  return out;
}

inline Json triangle_audit_json(const TriangleAudit& audit) {
  Json out;
  Json triangles = Json::array();
  for (const auto& t : audit.triangles) {
    Json item;
    item["vertices"] = detail::polygon_vertices_json(t.triangle);
    item["tau"] = t.tau;
    triangles.push_back(item);
  }
  out["triangles"] = triangles;
  out["total_tau"] = audit.total_tau;
  Json violations = Json::array();
  for (const auto& t : audit.violations) violations.push_back(detail::polygon_vertices_json(t.triangle));
  out["violations"] = violations;
  out["tau_generic"] = audit.tau_generic ? Json(*audit.tau_generic) : Json(nullptr);
  out["tau_special"] = audit.tau_special ? Json(*audit.tau_special) : Json(nullptr);
  out["additive"] = audit.additive;
  return out;
}

inline Json degree_json(const DegreeClassification& d) {
  Json out;
  out["verdict"] = to_string(d.verdict);
  out["generic_degree"] = d.generic_degree;
  out["witness"] = d.witness ? detail::witness_json(*d.witness) : Json(nullptr);
  out["automorphism"] = d.automorphism ? detail::automorphism_json(*d.automorphism) : Json(nullptr);
  Json details = Json::array();
  for (const auto& item : d.details) {
    Json j;
    j["sigma"] = detail::parameter_json(item.sigma);
    j["degree"] = item.degree;
    j["disappearing"] = detail::points_json(item.disappearing);
    j["witness"] = item.witness ? detail::witness_json(*item.witness) : Json(nullptr);
    j["automorphism"] = item.automorphism ? detail::automorphism_json(*item.automorphism) : Json(nullptr);
    j["automorphism_verified"] = item.automorphism_verified;
    details.push_back(j);
  }
  out["details"] = details;
  return out;
}

inline Json sweep_json(const SweepReport& r) {
  Json out;
  Json samples = Json::array();
  for (const auto& sample : r.samples) {
    Json j;
    j["s"] = detail::parameter_json(sample.s);
    j["critical"] = sample.critical;
    if (sample.bundle) {
      const InvariantBundle& b = *sample.bundle;
      j["nu"] = b.nu;
      j["mu"] = b.mu;
      j["lambda"] = b.lambda ? Json(*b.lambda) : Json(nullptr);
      j["nondegenerate"] = b.nondegenerate;
      j["baff"] = detail::value_set_json(b.b_aff);
      j["binf"] = detail::optional_value_set_json(b.b_inf);
      j["b"] = detail::optional_value_set_json(b.b);
      j["error"] = nullptr;
    } else {
      j["nu"] = nullptr;
      j["mu"] = nullptr;
      j["lambda"] = nullptr;
      j["nondegenerate"] = nullptr;
      j["baff"] = nullptr;
      j["binf"] = nullptr;
      j["b"] = nullptr;
      j["error"] = sample.error;
    }
    samples.push_back(j);
  }
  out["samples"] = samples;
  out["mu_lambda_constant"] = r.mu_lambda_constant;
  out["continuity_ok"] = r.continuity_ok;
  out["continuity_ok_b"] = r.continuity_ok_b;
  out["continuity_ok_baff"] = r.continuity_ok_baff;
  out["closedness_ok_binf"] = r.closedness_ok_binf;
  out["closedness_ok_b"] = r.closedness_ok_b;
  out["closedness_ok_baff"] = r.closedness_ok_baff;
  auto tracks_json = [](const std::vector<ValueTrack>& tracks) {
    Json arr = Json::array();
    for (const auto& t : tracks) {
      Json track = Json::array();
      for (const auto& [k, v] : t.points) track.push_back(Json::array({k, detail::complex_json(v)}));
      arr.push_back(track);
    }
    return arr;
  };
  out["tracks"] = {{"binf", tracks_json(r.binf_tracks)}, {"baff", tracks_json(r.baff_tracks)}, {"b", tracks_json(r.b_tracks)}};
  out["slopes"] = {{"binf", r.slope_binf}, {"baff", r.slope_baff}, {"b", r.slope_b}};
  out["notes"] = r.notes;
  return out;
}

struct FamilyAnalysis {
  std::vector<RealParameter> critical;
  std::vector<SupportChange> changes;
  std::vector<TriangleAudit> audits;
  DegreeClassification degree;
  SweepReport sweep;
};

inline FamilyAnalysis analyze_family(const PolynomialFamily& family, const Rational& lo, const Rational& hi,
                                     const SweepOptions& options = {}) {
  FamilyAnalysis out;
  out.critical = critical_parameters(family, lo, hi);
  for (const auto& sigma : out.critical) {
    out.changes.push_back(disappearing_monomials(family, sigma));
    out.audits.push_back(triangle_audit(family, sigma));
  }
  out.degree = classify_degree(family, lo, hi);
  out.sweep = sweep(family, lo, hi, options);
  return out;
}

inline Json family_json(const PolynomialFamily& family, const Rational& lo, const Rational& hi,
                        const SweepOptions& options = {}) {
  FamilyAnalysis analysis = analyze_family(family, lo, hi, options);
  Json out;
  out["family"] = to_string(family);
  out["interval"] = Json::array({to_string(lo), to_string(hi)});
  Json crit = Json::array();
  for (const auto& sigma : analysis.critical) crit.push_back(detail::parameter_json(sigma));
  out["critical_parameters"] = crit;
  Json params = Json::array();
  for (std::size_t i = 0; i < analysis.critical.size(); ++i) {
    Json j;
    j["sigma"] = detail::parameter_json(analysis.critical[i]);
    j["disappearing"] = detail::points_json(analysis.changes[i].disappearing);
    j["appearing"] = detail::points_json(analysis.changes[i].appearing);
    j["triangle_audit"] = triangle_audit_json(analysis.audits[i]);
    params.push_back(j);
  }
  out["parameters"] = params;
  out["degree"] = degree_json(analysis.degree);
  out["sweep"] = sweep_json(analysis.sweep);
  return out;
}

// Two-space indented JSON with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Newton polygon drawing: lattice spacing 16 px, filled dots of radius 3 for
// the support, hollow rings for disappearing monomials, axis lengths a and b
// marked on the axes.
inline std::string render_svg(const std::vector<LatticePoint>& support,
                              const std::vector<LatticePoint>& disappearing = {}) {
  constexpr int unit = 16, margin = 32, radius = 3;
  NewtonData nd = newton_data_of_points(support);
  std::int64_t max_p = 1, max_q = 1;
  for (const auto& pt : support) {
    max_p = std::max(max_p, pt.p);
    max_q = std::max(max_q, pt.q);
  }
  const std::int64_t width = 2 * margin + unit * (max_p + 1);
  const std::int64_t height = 2 * margin + unit * (max_q + 1);
  auto X = [&](std::int64_t p) { return margin + unit * p; };
  auto Y = [&](std::int64_t q) { return height - margin - unit * q; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes with arrow heads.
  svg << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << width - margin / 2 << "\" y2=\"" << Y(0) << "\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << margin / 2 << "\"/>\n";
  svg << "<polyline points=\"" << width - margin / 2 - 5 << "," << Y(0) - 3 << " " << width - margin / 2 << "," << Y(0)
      << " " << width - margin / 2 - 5 << "," << Y(0) + 3 << "\"/>\n";
  svg << "<polyline points=\"" << X(0) - 3 << "," << margin / 2 + 5 << " " << X(0) << "," << margin / 2 << " "
      << X(0) + 3 << "," << margin / 2 + 5 << "\"/>\n";
  svg << "</g>\n";
  svg << "<text x=\"" << width - margin / 2 << "\" y=\"" << Y(0) + 14 << "\" font-size=\"12\" text-anchor=\"end\">x</text>\n";
  svg << "<text x=\"" << X(0) - 10 << "\" y=\"" << margin / 2 + 4 << "\" font-size=\"12\" text-anchor=\"end\">y</text>\n";

  // Hull.
  const auto& v = nd.polygon.vertices();
  if (v.size() >= 2) {
    svg << "<" << (v.size() >= 3 ? "polygon" : "polyline") << " points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) svg << (i ? " " : "") << X(v[i].p) << "," << Y(v[i].q);
    svg << "\" fill=\"" << (v.size() >= 3 ? "#e8eef8" : "none") << "\" stroke=\"#1f3f7f\" stroke-width=\"1.5\"/>\n";
  }
  if (nd.a > 0)
    svg << "<text x=\"" << (X(0) + X(nd.a)) / 2 << "\" y=\"" << Y(0) + 16 << "\" font-size=\"12\" text-anchor=\"middle\">a="
        << nd.a << "</text>\n";
  if (nd.b > 0)
    svg << "<text x=\"" << X(0) - 6 << "\" y=\"" << (Y(0) + Y(nd.b)) / 2 + 4 << "\" font-size=\"12\" text-anchor=\"end\">b="
        << nd.b << "</text>\n";

  // Lattice dots.
  std::vector<LatticePoint> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& pt : sorted) {
    bool gone = std::find(disappearing.begin(), disappearing.end(), pt) != disappearing.end();
    svg << "<circle cx=\"" << X(pt.p) << "\" cy=\"" << Y(pt.q) << "\" r=\"" << radius << "\" "
        << (gone ? "fill=\"white\" stroke=\"black\" stroke-width=\"1\"" : "fill=\"black\"") << "/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace newton_atlas
