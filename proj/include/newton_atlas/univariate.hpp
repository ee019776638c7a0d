#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace newton_atlas {

// Dense univariate polynomial over the rationals; coefficient k multiplies t^k.
// The coefficient list never ends in a zero, so the zero polynomial is empty.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;

  explicit UnivariatePolynomial(std::vector<Rational> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  UnivariatePolynomial(std::initializer_list<Rational> coefficients)
      : coefficients_(coefficients) {
    trim();
  }

  explicit UnivariatePolynomial(const Rational& c) : coefficients_{c} { trim(); }

  static UnivariatePolynomial constant(const Rational& c) { return UnivariatePolynomial(c); }

  static UnivariatePolynomial monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> coefficients(exponent + 1);
    coefficients[exponent] = c;
    return UnivariatePolynomial(std::move(coefficients));
  }

  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coefficients_; }

  const Rational& operator[](std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : zero();
  }

  const Rational& leading() const { return coefficients_.empty() ? zero() : coefficients_.back(); }

  Rational evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  ComplexValue evaluate(const ComplexValue& t) const {
    ComplexValue acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
      acc = acc * t + it->get_d();
    return acc;
  }

  UnivariatePolynomial derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<Rational> d(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k)
      d[k - 1] = coefficients_[k] * static_cast<unsigned long>(k);
    return UnivariatePolynomial(std::move(d));
  }

  // Divides by the leading coefficient; the zero polynomial stays zero.
  UnivariatePolynomial monic() const {
    if (is_zero()) return {};
    Rational lc = leading();
    std::vector<Rational> c(coefficients_);
    for (auto& x : c) x /= lc;
    return UnivariatePolynomial(std::move(c));
  }

  // Number of leading zero coefficients, i.e. the largest v with t^v | p.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < coefficients_.size() && coefficients_[v] == 0) ++v;
    return v;
  }

  UnivariatePolynomial shifted_down(std::size_t v) const {
    if (v >= coefficients_.size()) return {};
    return UnivariatePolynomial(
        std::vector<Rational>(coefficients_.begin() + static_cast<std::ptrdiff_t>(v), coefficients_.end()));
  }

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
    trim();
    return *this;
  }

  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] -= o.coefficients_[k];
    trim();
    return *this;
  }

  UnivariatePolynomial& operator*=(const Rational& c) {
    if (c == 0) {
      coefficients_.clear();
      return *this;
    }
    for (auto& x : coefficients_) x *= c;
    return *this;
  }

  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a) {
    for (auto& x : a.coefficients_) x = -x;
    return a;
  }
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
  friend UnivariatePolynomial operator*(const Rational& c, UnivariatePolynomial a) { return a *= c; }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      if (a.coefficients_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
        c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return UnivariatePolynomial(std::move(c));
  }

  UnivariatePolynomial& operator*=(const UnivariatePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  // Human readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const;

 private:
  static const Rational& zero() {
    static const Rational z(0);
    return z;
  }

  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Rational> coefficients_;
};

inline UnivariatePolynomial power(const UnivariatePolynomial& p, unsigned long e) {
  UnivariatePolynomial result = UnivariatePolynomial::constant(1);
  UnivariatePolynomial base = p;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                                    const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UnivariatePolynomial(), a};
  std::vector<Rational> rem(a.coefficients());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  const Rational& lb = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top] == 0) continue;
    Rational factor = rem[top] / lb;
    quo[static_cast<std::size_t>(k)] = factor;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= factor * bc[j];
  }
  return {UnivariatePolynomial(std::move(quo)), UnivariatePolynomial(std::move(rem))};
}

// Quotient of a division known to be exact; throws otherwise.
inline UnivariatePolynomial exact_quotient(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return q;
}

// Monic gcd over the rationals; gcd(0, 0) = 0.
inline UnivariatePolynomial univariate_gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    UnivariatePolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

struct SquarefreeFactor {
  UnivariatePolynomial factor;  // monic, squarefree, nonconstant
  std::size_t multiplicity;
};

// Yun's algorithm: p = lc * prod factor_i^i with pairwise coprime squarefree factors.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UnivariatePolynomial& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  UnivariatePolynomial f = p.monic();
  UnivariatePolynomial df = f.derivative();
  UnivariatePolynomial a = univariate_gcd(f, df);
  UnivariatePolynomial b = exact_quotient(f, a);
  UnivariatePolynomial c = exact_quotient(df, a) - b.derivative();
  std::size_t i = 1;
  while (b.degree() > 0) {
    UnivariatePolynomial d = univariate_gcd(b, c);
    if (d.degree() > 0) out.push_back({d, i});
    b = exact_quotient(b, d);
    c = exact_quotient(c, d) - b.derivative();
    ++i;
  }
  return out;
}

inline UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.degree() < 1) return p.monic();
  return exact_quotient(p.monic(), univariate_gcd(p, p.derivative()));
}

inline bool is_squarefree(const UnivariatePolynomial& p) {
  return univariate_gcd(p, p.derivative()).degree() <= 0;
}

// Scales p to a primitive polynomial with integer coefficients and positive
// leading coefficient.
inline UnivariatePolynomial primitive_integer_part(const UnivariatePolynomial& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading() < 0) factor = -factor;
  return p * factor;
}

// Coefficients as doubles after an exact power-of-two rescaling that brings the
// largest magnitude near 1. Returns the scaled list, lowest degree first.
inline std::vector<ComplexValue> normalized_complex_coefficients(const UnivariatePolynomial& p) {
  double top = -HUGE_VAL;
  for (const auto& c : p.coefficients()) top = std::max(top, log2_abs(c));
  long shift = top == -HUGE_VAL ? 0 : -static_cast<long>(std::floor(top));
  std::vector<ComplexValue> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(scaled_to_double(c, shift), 0.0);
  return out;
}

inline std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
    if (mono.empty()) {
      out += newton_atlas::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += newton_atlas::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace newton_atlas
