#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <variant>
#include <vector>

#include "automorphism.hpp"
#include "bifurcation.hpp"
#include "real_roots.hpp"

namespace newton_atlas {

struct SupportChange {
  RealParameter sigma;
  std::vector<LatticePoint> disappearing;  // M_sigma
  std::vector<LatticePoint> appearing;     // always empty for polynomial coefficients
};

struct AuditedTriangle {
  LatticePolygon triangle;
  std::int64_t tau = 0;
};

struct TriangleAudit {
  RealParameter sigma;
  // Closure of the generic Newton polygon minus the one at sigma, as a union of triangles.
  std::vector<AuditedTriangle> triangles;
  std::int64_t total_tau = 0;
  std::vector<AuditedTriangle> violations;  // tau != 0, other than (0,0),(1,0),(0,1)
  // tau of the two polygons; unset when the polygon has zero area.
  std::optional<std::int64_t> tau_generic;
  std::optional<std::int64_t> tau_special;
  // total_tau == tau_generic - tau_special, a zero-area polygon counting 0.
  bool additive = true;
};

enum class DegreeVerdict { ConstantDegree, QuasiConstantDegree, Neither };

inline std::string to_string(DegreeVerdict v) {
  switch (v) {
    case DegreeVerdict::ConstantDegree: return "constant-degree";
    case DegreeVerdict::QuasiConstantDegree: return "quasi-constant-degree";
    default: return "neither";
  }
}

// Which lexicographic order a witness dominates in: (p,q) compares x
// exponents first, (q,p) compares y exponents first.
enum class LexOrder { PQ, QP };

inline std::string to_string(LexOrder o) { return o == LexOrder::PQ ? "pq" : "qp"; }

struct DegreeWitness {
  LatticePoint monomial;
  LexOrder order = LexOrder::PQ;
};

struct DegreeAtParameter {
  RealParameter sigma;
  std::int64_t degree = 0;
  std::vector<LatticePoint> disappearing;
  std::optional<DegreeWitness> witness;
  std::optional<Automorphism> automorphism;
  // Degree of f_s o Phi at the sampled parameters near sigma, all equal.
  bool automorphism_verified = false;
};

struct DegreeClassification {
  DegreeVerdict verdict = DegreeVerdict::ConstantDegree;
  std::int64_t generic_degree = 0;
  // First critical parameter that needed a witness.
  std::optional<DegreeWitness> witness;
  std::optional<Automorphism> automorphism;
  std::vector<DegreeAtParameter> details;
};

// Values of one kind of set followed from sample to sample.
struct ValueTrack {
  std::vector<std::pair<std::size_t, ComplexValue>> points;  // (sample index, value)
};

struct SweepSample {
  RealParameter s;
  bool critical = false;
  // Extra sample next to a critical parameter.
  bool side = false;
  std::optional<InvariantBundle> bundle;
  std::string error;
};

struct SweepOptions {
  std::size_t n_samples = 33;
  // Distance of the extra samples on each side of a critical parameter.
  Rational side_step = make_rational(1, 1000);
  SolveOptions solve;
  bool parallel = true;
};

struct SweepReport {
  std::vector<SweepSample> samples;
  std::vector<RealParameter> critical;
  bool mu_lambda_constant = true;
  std::vector<ValueTrack> binf_tracks;
  std::vector<ValueTrack> baff_tracks;
  std::vector<ValueTrack> b_tracks;
  bool continuity_ok = true;  // for B_inf
  bool continuity_ok_b = true;
  bool continuity_ok_baff = true;
  bool closedness_ok_binf = true;
  bool closedness_ok_b = true;
  bool closedness_ok_baff = true;
  // Largest slope of the value tracks between regular samples, used in match_tol.
  double slope_binf = 0.0, slope_baff = 0.0, slope_b = 0.0;
  std::vector<std::string> notes;
};

// Support of f_sigma, decided exactly.
inline std::vector<LatticePoint> support_at(const PolynomialFamily& family, const RealParameter& sigma) {
  std::vector<LatticePoint> out;
  for (const auto& [e, c] : family.terms())
    if (sign_at(c, sigma) != 0) out.push_back(e);
  return out;
}

// f_sigma. Exact for rational sigma; for an irrational sigma, coefficients
// vanishing at sigma are dropped and the others take their value at the
// midpoint of the isolating interval.
inline BivariatePolynomial specialize_family(const PolynomialFamily& family, const RealParameter& sigma) {
  if (sigma.is_rational()) return evaluate_family(family, *sigma.exact());
  BivariatePolynomial out;
  Rational mid = sigma.representative();
  for (const auto& [e, c] : family.terms())
    if (sign_at(c, sigma) != 0) out.add_term(e, c.evaluate(mid));
  return out;
}

// Real parameters in [lo, hi] at which some coefficient vanishes, ascending.
inline std::vector<RealParameter> critical_parameters(const PolynomialFamily& family, const Rational& lo,
                                                      const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("critical_parameters: empty interval");
  UnivariatePolynomial product = UnivariatePolynomial::constant(1);
  for (const auto& [e, c] : family.terms()) {
    if (c.degree() < 1) continue;
    UnivariatePolynomial part = squarefree_part(c);
    // Multiply in only the part not already present.
    product = product * exact_quotient(part, univariate_gcd(part, product));
  }
  return real_roots_in(product, lo, hi);
}

inline SupportChange disappearing_monomials(const PolynomialFamily& family, const RealParameter& sigma) {
  SupportChange change;
  change.sigma = sigma;
  for (const auto& [e, c] : family.terms())
    if (sign_at(c, sigma) == 0) change.disappearing.push_back(e);
  return change;
}

namespace detail {

inline bool is_standard_simplex(const LatticePolygon& t) {
  return t == LatticePolygon({{0, 0}, {1, 0}, {0, 1}});
}

}  // namespace detail

// The region between the two Newton polygons is cut into triangles by
// inserting the generic hull's vertices into the hull at sigma one at a time
// (lexicographic order); each insertion adds one triangle per edge visible
// from the new vertex.
inline TriangleAudit triangle_audit(const PolynomialFamily& family, const RealParameter& sigma) {
  TriangleAudit audit;
  audit.sigma = sigma;
  std::vector<LatticePoint> generic = family.support();
  generic.push_back({0, 0});
  std::vector<LatticePoint> special = support_at(family, sigma);
  special.push_back({0, 0});
  LatticePolygon outer = convex_hull(generic);
  LatticePolygon inner = convex_hull(special);
  if (!outer.is_degenerate()) audit.tau_generic = tau_of_polytope(outer);
  if (!inner.is_degenerate()) audit.tau_special = tau_of_polytope(inner);

  std::vector<LatticePoint> current = inner.vertices();
  std::vector<LatticePoint> to_insert;
  for (const auto& v : outer.vertices())
    if (!inner.contains(v)) to_insert.push_back(v);
  std::sort(to_insert.begin(), to_insert.end());

  for (const auto& v : to_insert) {
    LatticePolygon hull = convex_hull(current);
    const auto& h = hull.vertices();
    if (h.size() == 2) {
      if (cross(h[0], h[1], v) != 0) {
        LatticePolygon t = convex_hull({h[0], h[1], v});
        audit.triangles.push_back({t, tau_of_polytope(t)});
      }
    } else if (h.size() >= 3) {
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        if (cross(a, b, v) < 0) {
          LatticePolygon t = convex_hull({a, b, v});
          audit.triangles.push_back({t, tau_of_polytope(t)});
        }
      }
    }
    current.push_back(v);
  }
  for (const auto& t : audit.triangles) {
    audit.total_tau += t.tau;
    if (t.tau != 0 && !detail::is_standard_simplex(t.triangle)) audit.violations.push_back(t);
  }
  audit.additive = audit.total_tau == audit.tau_generic.value_or(0) - audit.tau_special.value_or(0);
  return audit;
}

namespace detail {

inline bool lex_greater(const LatticePoint& a, const LatticePoint& b, LexOrder order) {
  if (order == LexOrder::PQ) return a.p != b.p ? a.p > b.p : a.q > b.q;
  return a.q != b.q ? a.q > b.q : a.p > b.p;
}

inline std::optional<LatticePoint> lex_max(const std::vector<LatticePoint>& pts, LexOrder order) {
  std::optional<LatticePoint> best;
  for (const auto& pt : pts)
    if (!best || lex_greater(pt, *best, order)) best = pt;
  return best;
}

inline std::int64_t max_total_degree(const std::vector<LatticePoint>& pts) {
  std::int64_t d = -1;
  for (const auto& pt : pts) d = std::max(d, pt.total());
  return d;
}

// A monomial of supp(f_sigma) dominating every disappearing monomial, trying
// the (p,q) order first. Only the lexicographic maximum can qualify.
inline std::optional<DegreeWitness> find_witness(const std::vector<LatticePoint>& special,
                                                 const std::vector<LatticePoint>& disappearing) {
  for (LexOrder order : {LexOrder::PQ, LexOrder::QP}) {
    auto top = lex_max(special, order);
    if (!top) continue;
    bool dominates = std::all_of(disappearing.begin(), disappearing.end(),
                                 [&](const LatticePoint& m) { return lex_greater(*top, m, order); });
    if (dominates) return DegreeWitness{*top, order};
  }
  return std::nullopt;
}

inline std::int64_t degree_at(const PolynomialFamily& family, const RealParameter& sigma) {
  return max_total_degree(support_at(family, sigma));
}

}  // namespace detail

// Shear making the degree constant near sigma. For a (p,q)-order witness
// (p,q) this is (x, y) -> (x + y^l, y) with the least l >= 1 such that the
// weight p l + q of the witness exceeds that of every disappearing monomial
// and the largest weight p' l + q' over the generic support is attained once;
// the (q,p) case uses (x, y) -> (x, y + x^l) and weights q l + p.
inline Automorphism degree_normalizing_automorphism(const PolynomialFamily& family, const RealParameter& sigma) {
  SupportChange change = disappearing_monomials(family, sigma);
  if (change.disappearing.empty()) return {Automorphism::Kind::ShearXByY, 1};
  std::vector<LatticePoint> special = support_at(family, sigma);
  auto witness = detail::find_witness(special, change.disappearing);
  if (!witness) throw PreconditionError("degree_normalizing_automorphism: no monomial dominates the disappearing ones");
  std::vector<LatticePoint> generic = family.support();
  auto top = detail::lex_max(generic, witness->order);
  if (!top || std::find(special.begin(), special.end(), *top) == special.end())
    throw std::logic_error("lexicographic maximum of the support disappears despite a dominating witness");

  bool pq = witness->order == LexOrder::PQ;
  auto weight = [&](const LatticePoint& e, std::int64_t l) { return pq ? e.p * l + e.q : e.q * l + e.p; };
  std::int64_t bound = 2 * std::max<std::int64_t>(detail::max_total_degree(generic), 1) + 2;
  for (std::int64_t l = 1; l <= bound; ++l) {
    std::int64_t w = weight(witness->monomial, l);
    bool beats = std::all_of(change.disappearing.begin(), change.disappearing.end(),
                             [&](const LatticePoint& m) { return w > weight(m, l); });
    if (!beats) continue;
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    int count = 0;
    for (const auto& e : generic) {
      std::int64_t we = weight(e, l);
      if (we > best) {
        best = we;
        count = 1;
      } else if (we == best) {
        ++count;
      }
    }
    if (count == 1) return {pq ? Automorphism::Kind::ShearXByY : Automorphism::Kind::ShearYByX, l};
  }
  throw std::logic_error("degree_normalizing_automorphism: no admissible exponent found");
}

// Constant degree when the degree at every critical parameter in [lo, hi]
// equals the generic one; quasi-constant degree when each critical parameter
// has a dominating witness, in which case a normalizing shear is built for
// each and its effect is checked at parameters within 1/100 of sigma.
inline DegreeClassification classify_degree(const PolynomialFamily& family, const Rational& lo = 0,
                                            const Rational& hi = 1) {
  DegreeClassification out;
  out.generic_degree = family.total_degree();
  bool constant = true, quasi = true;
  for (const auto& sigma : critical_parameters(family, lo, hi)) {
    DegreeAtParameter d;
    d.sigma = sigma;
    d.degree = detail::degree_at(family, sigma);
    d.disappearing = disappearing_monomials(family, sigma).disappearing;
    if (d.degree != out.generic_degree) constant = false;
    if (!d.disappearing.empty()) {
      d.witness = detail::find_witness(support_at(family, sigma), d.disappearing);
      if (d.witness) {
        d.automorphism = degree_normalizing_automorphism(family, sigma);
        PolynomialFamily composed = compose_automorphism(family, *d.automorphism);
        std::int64_t target = composed.total_degree();
        d.automorphism_verified = detail::degree_at(composed, sigma) == target;
        Rational center = sigma.representative();
        for (long k : {-100L, -50L, -10L, 10L, 50L, 100L}) {
          RealParameter near(Rational(center + make_rational(k, 10000)));
          if (detail::degree_at(composed, near) != target) d.automorphism_verified = false;
        }
        if (!d.automorphism_verified) throw std::logic_error("normalizing shear does not fix the degree");
        if (!out.witness) {
          out.witness = d.witness;
          out.automorphism = d.automorphism;
        }
      } else {
        quasi = false;
      }
    }
    out.details.push_back(std::move(d));
  }
  if (constant) {
    out.verdict = DegreeVerdict::ConstantDegree;
    out.witness.reset();
    out.automorphism.reset();
  } else if (quasi) {
    out.verdict = DegreeVerdict::QuasiConstantDegree;
  } else {
    out.verdict = DegreeVerdict::Neither;
    out.witness.reset();
    out.automorphism.reset();
  }
  return out;
}

namespace detail {

// -1, 0, 1 as a < b, a == b, a > b.
inline int compare_parameters(const RealParameter& a, const RealParameter& b) {
  if (a.is_rational() && b.is_rational()) return sgn(*a.exact() - *b.exact());
  if (b.is_rational()) return sign_at(UnivariatePolynomial({-*b.exact(), Rational(1)}), a);
  if (a.is_rational()) return -compare_parameters(b, a);
  if (a.defining() == b.defining() && a.lo() < b.hi() && b.lo() < a.hi()) return 0;
  return sgn(a.representative() - b.representative());
}

inline std::vector<ComplexValue> values_of(const SweepSample& sample, int kind) {
  if (!sample.bundle) return {};
  const InvariantBundle& b = *sample.bundle;
  if (kind == 0) return b.b_inf ? b.b_inf->values() : std::vector<ComplexValue>{};
  if (kind == 1) return b.b_aff.values();
  return b.b ? b.b->values() : std::vector<ComplexValue>{};
}

inline bool available(const SweepSample& sample, int kind) {
  if (!sample.bundle) return false;
  if (kind == 1) return true;
  return kind == 0 ? sample.bundle->b_inf.has_value() : sample.bundle->b.has_value();
}

// Injective matching of a to b: repeatedly take the closest unused pair with
// distance at most tol. Returns match[i] = index into b or -1.
inline std::vector<int> greedy_match(const std::vector<ComplexValue>& a, const std::vector<ComplexValue>& b,
                                     double tol) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      double d = std::abs(a[i] - b[j]);
      if (d <= tol) pairs.emplace_back(d, i, j);
    }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> match(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  for (const auto& [d, i, j] : pairs) {
    if (match[i] >= 0 || used[j]) continue;
    match[i] = static_cast<int>(j);
    used[j] = true;
  }
  return match;
}

struct KindDiagnostics {
  std::vector<ValueTrack> tracks;
  double slope = 0.0;
  bool continuity = true;
  bool closedness = true;
};

inline KindDiagnostics diagnose(const std::vector<SweepSample>& samples, int kind, double floor_tol,
                                std::vector<std::string>& notes) {
  static const char* names[] = {"B_inf", "B_aff", "B"};
  KindDiagnostics diag;
  const std::size_t n = samples.size();
  std::vector<std::vector<ComplexValue>> values(n);
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = values_of(samples[k], kind);
    s[k] = samples[k].s.approx();
  }
  // Largest nearest-neighbour slope between consecutive regular samples.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (samples[k].critical || samples[k + 1].critical || samples[k].side || samples[k + 1].side) continue;
    if (!available(samples[k], kind) || !available(samples[k + 1], kind)) continue;
    if (values[k].size() != values[k + 1].size()) continue;
    double ds = s[k + 1] - s[k];
    for (const auto& v : values[k]) {
      double nearest = HUGE_VAL;
      for (const auto& w : values[k + 1]) nearest = std::min(nearest, std::abs(v - w));
      if (std::isfinite(nearest)) diag.slope = std::max(diag.slope, nearest / ds);
    }
  }
  auto match_tol = [&](std::size_t k) { return std::max(floor_tol, 5.0 * diag.slope * (s[k + 1] - s[k])); };

  // Tracks from the matchings of consecutive samples.
  std::vector<std::vector<int>> forward(n);  // forward[k][i] = index at k+1
  std::vector<std::vector<int>> track_of(n);
  for (std::size_t k = 0; k < n; ++k) track_of[k].assign(values[k].size(), -1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < values[k].size(); ++i) {
      if (track_of[k][i] >= 0) continue;
      track_of[k][i] = static_cast<int>(diag.tracks.size());
      diag.tracks.push_back({{{k, values[k][i]}}});
    }
    if (k + 1 == n) break;
    forward[k] = greedy_match(values[k], values[k + 1], match_tol(k));
    for (std::size_t i = 0; i < values[k].size(); ++i) {
      int j = forward[k][i];
      if (j < 0) continue;
      int t = track_of[k][i];
      track_of[k + 1][static_cast<std::size_t>(j)] = t;
      diag.tracks[static_cast<std::size_t>(t)].points.push_back({k + 1, values[k + 1][static_cast<std::size_t>(j)]});
    }
  }

  // A neighbour value escaping to infinity towards sigma has no limit to land:
  // its distance to the next sample further out is large and it grows.
  auto divergent = [&](std::size_t k, std::size_t i, std::size_t outer) {
    const ComplexValue v = values[k][i];
    std::optional<ComplexValue> nearest;
    for (const auto& w : values[outer])
      if (!nearest || std::abs(v - w) < std::abs(v - *nearest)) nearest = w;
    if (!nearest) return false;
    double local = std::abs(v - *nearest) / std::fabs(s[k] - s[outer]);
    return local > 10.0 * std::max(diag.slope, 1.0) && std::abs(v) > std::abs(*nearest);
  };

  for (std::size_t c = 0; c < n; ++c) {
    if (!samples[c].critical) continue;
    std::string where = " at s = " + samples[c].s.to_string();
    if (!available(samples[c], kind)) {
      diag.continuity = diag.closedness = false;
      notes.push_back(std::string(names[kind]) + " unavailable" + where);
      continue;
    }
    for (int side : {-1, 1}) {
      if ((side < 0 && c == 0) || (side > 0 && c + 1 == n)) continue;
      std::size_t k = side < 0 ? c - 1 : c + 1;
      if (samples[k].critical || !available(samples[k], kind)) continue;
      // Several values may share one limit, so both tests use distances
      // rather than the injective track matching.
      double tol = match_tol(std::min(c, k));
      auto near_any = [&](ComplexValue v, const std::vector<ComplexValue>& set) {
        return std::any_of(set.begin(), set.end(), [&](ComplexValue w) { return std::abs(v - w) <= tol; });
      };
      // Continuity: each value at sigma is approached from this side.
      for (const auto& v : values[c]) {
        if (near_any(v, values[k])) continue;
        diag.continuity = false;
        notes.push_back(std::string(names[kind]) + " value not approached from the " + (side < 0 ? "left" : "right") +
                        where);
      }
      // Closedness: each convergent neighbour value lands in the set at sigma.
      bool has_outer = side < 0 ? k >= 1 : k + 1 < n;
      for (std::size_t i = 0; i < values[k].size(); ++i) {
        if (near_any(values[k][i], values[c])) continue;
        if (has_outer) {
          std::size_t outer = side < 0 ? k - 1 : k + 1;
          if (available(samples[outer], kind) && divergent(k, i, outer)) continue;
        }
        diag.closedness = false;
        notes.push_back(std::string(names[kind]) + " limit of a neighbouring value is missing" + where);
      }
    }
  }
  return diag;
}

}  // namespace detail

// Samples a family on [lo, hi]: a uniform grid, every critical parameter, and
// points side_step away on each side of it. Each sample carries its invariant
// bundle (or the error that prevented it). Values are linked into tracks by
// nearest matching between consecutive samples with
//   match_tol = max(10 cluster_tol, 5 L ds)
// where L is the largest slope seen between regular samples.
inline SweepReport sweep(const PolynomialFamily& family, const Rational& lo, const Rational& hi,
                         const SweepOptions& options = {}) {
  if (!(lo < hi)) throw std::invalid_argument("sweep: empty interval");
  if (options.n_samples < 3) throw std::invalid_argument("sweep: at least 3 samples required");
  SweepReport report;
  report.critical = critical_parameters(family, lo, hi);

  std::vector<SweepSample> samples;
  const auto n = static_cast<long>(options.n_samples);
  auto add = [&](RealParameter s, bool critical, bool side) {
    SweepSample sample;
    sample.s = std::move(s);
    sample.critical = critical;
    sample.side = side;
    samples.push_back(std::move(sample));
  };
  for (long k = 0; k < n; ++k) add(RealParameter(Rational(lo + (hi - lo) * make_rational(k, n - 1))), false, false);
  for (const auto& sigma : report.critical) {
    add(sigma, true, false);
    Rational center = sigma.representative();
    for (const Rational& t : {Rational(center - options.side_step), Rational(center + options.side_step)})
      if (lo <= t && t <= hi) add(RealParameter(t), false, true);
  }
  std::stable_sort(samples.begin(), samples.end(), [](const SweepSample& a, const SweepSample& b) {
    int c = detail::compare_parameters(a.s, b.s);
    if (c != 0) return c < 0;
    return a.critical != b.critical ? a.critical : a.side && !b.side;
  });
  std::vector<SweepSample> unique;
  for (auto& sample : samples) {
    if (!unique.empty() && detail::compare_parameters(unique.back().s, sample.s) == 0) continue;
    unique.push_back(std::move(sample));
  }
  // A grid point that is itself critical keeps the critical flag (sorted first).
  samples = std::move(unique);

  auto compute = [&](std::size_t k) {
    SweepSample& sample = samples[k];
    try {
      sample.bundle = invariants(specialize_family(family, sample.s), options.solve);
    } catch (const std::exception& e) {
      sample.error = e.what();
    }
  };
  if (options.parallel) {
    std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), samples.size()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < samples.size(); k += workers) compute(k);
      }));
    for (auto& job : jobs) job.get();
  } else {
    for (std::size_t k = 0; k < samples.size(); ++k) compute(k);
  }

  std::optional<std::int64_t> total;
  for (const auto& sample : samples) {
    if (!sample.bundle || !sample.bundle->lambda) {
      report.mu_lambda_constant = false;
      continue;
    }
    std::int64_t t = static_cast<std::int64_t>(sample.bundle->mu) + *sample.bundle->lambda;
    if (total && *total != t) report.mu_lambda_constant = false;
    total = t;
  }
  for (const auto& sample : samples)
    if (!sample.error.empty()) report.notes.push_back("s = " + sample.s.to_string() + ": " + sample.error);

  double floor_tol = 10.0 * options.solve.cluster_tol;
  auto binf = detail::diagnose(samples, 0, floor_tol, report.notes);
  auto baff = detail::diagnose(samples, 1, floor_tol, report.notes);
  auto b = detail::diagnose(samples, 2, floor_tol, report.notes);
  report.binf_tracks = std::move(binf.tracks);
  report.baff_tracks = std::move(baff.tracks);
  report.b_tracks = std::move(b.tracks);
  report.continuity_ok = binf.continuity;
  report.continuity_ok_baff = baff.continuity;
  report.continuity_ok_b = b.continuity;
  report.closedness_ok_binf = binf.closedness;
  report.closedness_ok_baff = baff.closedness;
  report.closedness_ok_b = b.closedness;
  report.slope_binf = binf.slope;
  report.slope_baff = baff.slope;
  report.slope_b = b.slope;
  report.samples = std::move(samples);
  return report;
}

}  // namespace newton_atlas
