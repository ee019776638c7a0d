#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "univariate.hpp"

namespace newton_atlas {

// Exponent pair (p, q) of the monomial x^p y^q.
struct Exponent {
  std::int64_t p = 0;
  std::int64_t q = 0;

  auto operator<=>(const Exponent&) const = default;
  std::int64_t total() const { return p + q; }
};

enum class Variable { x, y };

inline bool is_zero_coefficient(const Rational& c) { return c == 0; }
inline bool is_zero_coefficient(const UnivariatePolynomial& c) { return c.is_zero(); }

// Sparse polynomial in x and y. Coeff is Rational for a single polynomial and
// UnivariatePolynomial (in the parameter s) for a one-parameter family.
// No stored coefficient is zero, so the key set is the support.
template <class Coeff>
class SparseBivariate {
 public:
  using coefficient_type = Coeff;
  using term_map = std::map<Exponent, Coeff>;

  SparseBivariate() = default;

  static SparseBivariate constant(const Coeff& c) {
    SparseBivariate f;
    f.add_term({0, 0}, c);
    return f;
  }

  static SparseBivariate monomial(Exponent e, const Coeff& c) {
    SparseBivariate f;
    f.add_term(e, c);
    return f;
  }

  void add_term(Exponent e, const Coeff& c) {
    if (e.p < 0 || e.q < 0) throw std::invalid_argument("negative exponent");
    if (is_zero_coefficient(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coefficient(it->second)) terms_.erase(it);
    }
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool contains(Exponent e) const { return terms_.count(e) != 0; }

  Coeff coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  std::vector<Exponent> support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  // -1 for the zero polynomial.
  std::int64_t total_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
  }

  std::int64_t degree_in(Variable v) const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Variable::x ? e.p : e.q);
    return d;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }

  SparseBivariate& operator+=(const SparseBivariate& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparseBivariate& operator-=(const SparseBivariate& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend SparseBivariate operator+(SparseBivariate a, const SparseBivariate& b) { return a += b; }
  friend SparseBivariate operator-(SparseBivariate a, const SparseBivariate& b) { return a -= b; }
  friend SparseBivariate operator-(const SparseBivariate& a) {
    SparseBivariate out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend SparseBivariate operator*(const SparseBivariate& a, const SparseBivariate& b) {
    SparseBivariate out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term({ea.p + eb.p, ea.q + eb.q}, ca * cb);
    return out;
  }

  SparseBivariate& operator*=(const SparseBivariate& o) { return *this = *this * o; }

  SparseBivariate scaled(const Rational& factor) const {
    SparseBivariate out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * factor);
    return out;
  }

  friend bool operator==(const SparseBivariate& a, const SparseBivariate& b) { return a.terms_ == b.terms_; }

 private:
  term_map terms_;
};

using BivariatePolynomial = SparseBivariate<Rational>;
using PolynomialFamily = SparseBivariate<UnivariatePolynomial>;

template <class Coeff>
SparseBivariate<Coeff> power(const SparseBivariate<Coeff>& f, unsigned long e) {
  auto result = SparseBivariate<Coeff>::constant(Coeff(Rational(1)));
  auto base = f;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class Coeff>
SparseBivariate<Coeff> partial_derivative(const SparseBivariate<Coeff>& f, Variable v) {
  SparseBivariate<Coeff> out;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t k = v == Variable::x ? e.p : e.q;
    if (k == 0) continue;
    Exponent d = v == Variable::x ? Exponent{e.p - 1, e.q} : Exponent{e.p, e.q - 1};
    out.add_term(d, c * Rational(static_cast<long>(k)));
  }
  return out;
}

// f(y, x): transposes the support.
template <class Coeff>
SparseBivariate<Coeff> swap_variables(const SparseBivariate<Coeff>& f) {
  SparseBivariate<Coeff> out;
  for (const auto& [e, c] : f.terms()) out.add_term({e.q, e.p}, c);
  return out;
}

// Sets every parameter-dependent coefficient to its value at s0.
inline BivariatePolynomial evaluate_family(const PolynomialFamily& family, const Rational& s0) {
  BivariatePolynomial out;
  for (const auto& [e, c] : family.terms()) out.add_term(e, c.evaluate(s0));
  return out;
}

// A polynomial viewed as a family that does not depend on s.
inline PolynomialFamily as_constant_family(const BivariatePolynomial& f) {
  PolynomialFamily out;
  for (const auto& [e, c] : f.terms()) out.add_term(e, UnivariatePolynomial::constant(c));
  return out;
}

inline bool depends_on_parameter(const PolynomialFamily& family) {
  for (const auto& [e, c] : family.terms())
    if (c.degree() > 0) return true;
  return false;
}

inline Rational constant_term(const BivariatePolynomial& f) { return f.coefficient({0, 0}); }

inline ComplexValue evaluate(const BivariatePolynomial& f, ComplexValue x, ComplexValue y) {
  ComplexValue acc = 0.0;
  for (const auto& [e, c] : f.terms())
    acc += c.get_d() * std::pow(x, static_cast<int>(e.p)) * std::pow(y, static_cast<int>(e.q));
  return acc;
}

inline Rational evaluate(const BivariatePolynomial& f, const Rational& x, const Rational& y) {
  Rational acc = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::int64_t k = 0; k < e.p; ++k) term *= x;
    for (std::int64_t k = 0; k < e.q; ++k) term *= y;
    acc += term;
  }
  return acc;
}

// Sum of |c| max(1, |x|)^p max(1, |y|)^q: a scale for the residual of f at
// (x, y). The floor at 1 keeps the ratio meaningful near the coordinate axes,
// where a single surviving term would otherwise make it 1.
inline double evaluation_scale(const BivariatePolynomial& f, ComplexValue x, ComplexValue y) {
  double acc = 0.0;
  double ax = std::max(1.0, std::abs(x)), ay = std::max(1.0, std::abs(y));
  for (const auto& [e, c] : f.terms())
    acc += std::fabs(c.get_d()) * std::pow(ax, static_cast<double>(e.p)) * std::pow(ay, static_cast<double>(e.q));
  return acc;
}

// Coefficients of f as a polynomial in `main`, each a univariate polynomial in
// the other variable. Entry k multiplies main^k.
inline std::vector<UnivariatePolynomial> coefficients_in(const BivariatePolynomial& f, Variable main) {
  std::int64_t d = f.degree_in(main);
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(std::max<std::int64_t>(d + 1, 0)));
  for (const auto& [e, c] : f.terms()) {
    std::int64_t k = main == Variable::x ? e.p : e.q;
    std::int64_t other = main == Variable::x ? e.q : e.p;
    auto& row = dense[static_cast<std::size_t>(k)];
    if (row.size() <= static_cast<std::size_t>(other)) row.resize(static_cast<std::size_t>(other) + 1);
    row[static_cast<std::size_t>(other)] = c;
  }
  std::vector<UnivariatePolynomial> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

// Substitutes a complex value for `fixed`; returns coefficients in the other
// variable, lowest degree first.
inline std::vector<ComplexValue> specialize(const BivariatePolynomial& f, Variable fixed, ComplexValue value) {
  Variable other = fixed == Variable::x ? Variable::y : Variable::x;
  std::int64_t d = std::max<std::int64_t>(f.degree_in(other), 0);
  std::vector<ComplexValue> out(static_cast<std::size_t>(d + 1), 0.0);
  for (const auto& [e, c] : f.terms()) {
    std::int64_t kf = fixed == Variable::x ? e.p : e.q;
    std::int64_t ko = fixed == Variable::x ? e.q : e.p;
    out[static_cast<std::size_t>(ko)] += c.get_d() * std::pow(value, static_cast<int>(kf));
  }
  while (out.size() > 1 && out.back() == ComplexValue(0.0)) out.pop_back();
  return out;
}

// True when f does not depend on `v`.
template <class Coeff>
bool independent_of(const SparseBivariate<Coeff>& f, Variable v) {
  return f.degree_in(v) <= 0;
}

}  // namespace newton_atlas
