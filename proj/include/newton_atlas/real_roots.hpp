#pragma once

#include <optional>
#include <string>
#include <vector>

#include "univariate.hpp"

namespace newton_atlas {

// A real algebraic number: either an exact rational, or the unique root of a
// squarefree defining polynomial inside the half-open interval (lo, hi].
class RealParameter {
 public:
  RealParameter() = default;

  explicit RealParameter(const Rational& value) : exact_(value), lo_(value), hi_(value) {}

  RealParameter(UnivariatePolynomial defining, Rational lo, Rational hi)
      : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  bool is_rational() const { return exact_.has_value(); }
  const std::optional<Rational>& exact() const { return exact_; }
  const UnivariatePolynomial& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // Exact value when rational, otherwise the interval midpoint.
  Rational representative() const { return exact_ ? *exact_ : Rational((lo_ + hi_) / 2); }
  double approx() const { return representative().get_d(); }

  std::string to_string() const {
    if (exact_) return newton_atlas::to_string(*exact_);
    return "root of " + defining_.to_string("s") + " in (" + newton_atlas::to_string(lo_) + ", " +
           newton_atlas::to_string(hi_) + "]";
  }

 private:
  std::optional<Rational> exact_;
  UnivariatePolynomial defining_;
  Rational lo_, hi_;
};

// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UnivariatePolynomial& p) {
    if (p.degree() < 1) {
      chain_.push_back(p);
      return;
    }
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (chain_.back().degree() > 0) {
      UnivariatePolynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  int sign_changes(const Rational& t) const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sgn(q.evaluate(t));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  // Number of distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return sign_changes(lo) - sign_changes(hi); }

 private:
  std::vector<UnivariatePolynomial> chain_;
};

namespace detail {

inline void isolate(const UnivariatePolynomial& p, const SturmSequence& sturm, const Rational& lo,
                    const Rational& hi, int roots, std::vector<std::pair<Rational, Rational>>& out) {
  if (roots == 0) return;
  if (roots == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = sturm.count(lo, mid);
  isolate(p, sturm, lo, mid, left, out);
  isolate(p, sturm, mid, hi, roots - left, out);
}

}  // namespace detail

// All real roots of p in the closed interval [lo, hi], ascending. Rational
// roots are found exactly: the defining polynomial is refined until the
// interval is narrower than 1 / (2 lc^2) (lc the leading coefficient of the
// primitive integer form), where the only candidate rational with admissible
// denominator is the simplest rational of the interval. Irrational roots are
// refined to width at most `width`.
inline std::vector<RealParameter> real_roots_in(const UnivariatePolynomial& p, const Rational& lo,
                                                const Rational& hi, const Rational& width = Rational(Integer(1), Integer("1000000000000"))) {
  std::vector<RealParameter> out;
  if (p.degree() < 1 || lo > hi) return out;
  UnivariatePolynomial sq = primitive_integer_part(squarefree_part(p));
  SturmSequence sturm(sq);
  if (sq.evaluate(lo) == 0) out.emplace_back(lo);
  std::vector<std::pair<Rational, Rational>> intervals;
  detail::isolate(sq, sturm, lo, hi, sturm.count(lo, hi), intervals);

  Integer lc = sq.leading().get_num();
  Rational rational_width(Integer(1), Integer(2 * lc * lc));
  rational_width.canonicalize();
  Rational target = std::min(width, rational_width);

  for (auto [a, b] : intervals) {
    std::optional<Rational> exact;
    if (sq.evaluate(b) == 0) exact = b;
    while (!exact && b - a > target) {
      Rational mid = (a + b) / 2;
      int s_mid = sgn(sq.evaluate(mid));
      if (s_mid == 0) {
        exact = mid;
        break;
      }
      if (sturm.count(a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    if (!exact) {
      Rational cand = simplest_rational_between(a, b);
      if (cand > a && sq.evaluate(cand) == 0) exact = cand;
    }
    if (exact) {
      out.emplace_back(*exact);
    } else {
      out.emplace_back(sq, a, b);
    }
  }
  return out;
}

// Sign of q at a real algebraic parameter, decided exactly.
inline int sign_at(const UnivariatePolynomial& q, const RealParameter& sigma) {
  if (sigma.is_rational()) return sgn(q.evaluate(*sigma.exact()));
  UnivariatePolynomial g = univariate_gcd(q, sigma.defining());
  if (g.degree() >= 1 && SturmSequence(g).count(sigma.lo(), sigma.hi()) == 1) return 0;
  // q has no root in (lo, hi]: refine until its sign is constant on the interval.
  Rational a = sigma.lo(), b = sigma.hi();
  SturmSequence qs(squarefree_part(q));
  SturmSequence ds(sigma.defining());
  while (qs.count(a, b) > 0) {
    Rational mid = (a + b) / 2;
    if (ds.count(a, mid) == 1) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return sgn(q.evaluate(b));
}

}  // namespace newton_atlas
