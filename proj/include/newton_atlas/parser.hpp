#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "bivariate.hpp"

namespace newton_atlas {

struct ParseOptions {
  std::int64_t max_exponent = 1'000'000;
  // Upper bound on total degree (and degree in s) of any intermediate result.
  std::int64_t max_degree = 1'000'000;
  // Upper bound on the number of coefficient products in one multiplication.
  std::int64_t max_work = 4'000'000;
};

using ParsedPolynomial = std::variant<BivariatePolynomial, PolynomialFamily>;

namespace detail {

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := rational | 'x' | 'y' | 's' | '(' expr ')'
//   rational := integer ('/' positive-integer)?
// The leading sign of expr is accepted so printed output parses back.
class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  PolynomialFamily parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    PolynomialFamily result = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

  bool saw_parameter() const { return saw_parameter_; }

 private:
  PolynomialFamily expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    PolynomialFamily acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      PolynomialFamily rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  PolynomialFamily term() {
    PolynomialFamily acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      std::size_t at = pos_++;
      PolynomialFamily rhs = factor();
      acc = multiply(acc, rhs, at);
    }
    return acc;
  }

  PolynomialFamily factor() {
    PolynomialFamily b = base();
    skip_space();
    if (peek() != '^') return b;
    std::size_t at = pos_++;
    skip_space();
    if (peek() == '-') throw ParseError("negative exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.size() > 18 || std::stoll(digits) > options_.max_exponent)
      throw ParseError("exponent exceeds bound " + std::to_string(options_.max_exponent), start);
    return raise(b, static_cast<unsigned long>(std::stoll(digits)), at);
  }

  PolynomialFamily base() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      PolynomialFamily inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return PolynomialFamily::monomial(c == 'x' ? Exponent{1, 0} : Exponent{0, 1},
                                        UnivariatePolynomial::constant(1));
    }
    if (c == 's') {
      ++pos_;
      saw_parameter_ = true;
      return PolynomialFamily::constant(UnivariatePolynomial::monomial(1, 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", at);
        den = Integer(read_digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational value(num, den);
      value.canonicalize();
      return PolynomialFamily::constant(UnivariatePolynomial::constant(value));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  PolynomialFamily multiply(const PolynomialFamily& a, const PolynomialFamily& b, std::size_t at) const {
    auto work = static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size());
    if (work > options_.max_work) throw ParseError("expansion too large", at);
    check_degree(a.total_degree() + b.total_degree(), parameter_degree(a) + parameter_degree(b), at);
    return a * b;
  }

  PolynomialFamily raise(const PolynomialFamily& b, unsigned long e, std::size_t at) const {
    if (e == 0) return PolynomialFamily::constant(UnivariatePolynomial::constant(1));
    if (b.is_zero()) return b;
    auto n = static_cast<std::int64_t>(e);
    check_degree(b.total_degree() * n, parameter_degree(b) * n, at);
    PolynomialFamily result = PolynomialFamily::constant(UnivariatePolynomial::constant(1));
    PolynomialFamily square = b;
    while (e > 0) {
      if (e & 1UL) result = multiply(result, square, at);
      e >>= 1;
      if (e > 0) square = multiply(square, square, at);
    }
    return result;
  }

  void check_degree(std::int64_t total, std::int64_t in_s, std::size_t at) const {
    if (total > options_.max_degree || in_s > options_.max_degree)
      throw ParseError("degree exceeds bound " + std::to_string(options_.max_degree), at);
  }

  static std::int64_t parameter_degree(const PolynomialFamily& f) {
    std::int64_t d = 0;
    for (const auto& [e, c] : f.terms()) d = std::max<std::int64_t>(d, c.degree());
    return d;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  bool saw_parameter_ = false;
};

}  // namespace detail

// Parses and expands an expression. The result is a family exactly when the
// parameter s occurs in the text.
inline ParsedPolynomial parse_polynomial(std::string_view text, const ParseOptions& options = {}) {
  detail::Parser parser(text, options);
  PolynomialFamily family = parser.parse();
  if (parser.saw_parameter()) return family;
  BivariatePolynomial f;
  for (const auto& [e, c] : family.terms()) f.add_term(e, c[0]);
  return f;
}

inline BivariatePolynomial parse_bivariate(std::string_view text, const ParseOptions& options = {}) {
  auto parsed = parse_polynomial(text, options);
  if (auto* f = std::get_if<BivariatePolynomial>(&parsed)) return *f;
  throw ParseError("expression depends on the parameter s", 0);
}

// Accepts expressions with or without s; a polynomial becomes a constant family.
inline PolynomialFamily parse_family(std::string_view text, const ParseOptions& options = {}) {
  auto parsed = parse_polynomial(text, options);
  if (auto* f = std::get_if<PolynomialFamily>(&parsed)) return *f;
  return as_constant_family(std::get<BivariatePolynomial>(parsed));
}

namespace detail {

inline std::string monomial_text(Exponent e) {
  std::string out;
  auto append = [&](const char* var, std::int64_t k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  };
  append("x", e.p);
  append("y", e.q);
  return out;
}

// Terms by decreasing total degree, then decreasing x exponent.
template <class Coeff>
std::vector<std::pair<Exponent, Coeff>> print_order(const SparseBivariate<Coeff>& f) {
  std::vector<std::pair<Exponent, Coeff>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.p > b.first.p;
  });
  return terms;
}

}  // namespace detail

// Prints in the parser's grammar, e.g. "x^2*y^2 + x*y - 1/2*x + 3".
inline std::string to_string(const BivariatePolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : detail::print_order(f)) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = detail::monomial_text(e);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

inline std::string to_string(const PolynomialFamily& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : detail::print_order(f)) {
    std::string mono = detail::monomial_text(e);
    std::size_t nonzero = 0, k = 0;
    for (std::size_t i = 0; i < c.coefficients().size(); ++i)
      if (c.coefficients()[i] != 0) {
        ++nonzero;
        k = i;
      }
    if (nonzero == 1) {
      // a*s^k: printed like a rational coefficient with s^k in front of the monomial.
      const Rational& v = c.coefficients()[k];
      Rational mag = abs(v);
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      std::string s_part = k == 0 ? "" : k == 1 ? "s" : "s^" + std::to_string(k);
      std::string rest = s_part.empty() ? mono : mono.empty() ? s_part : s_part + "*" + mono;
      if (rest.empty()) {
        out += to_string(mag);
      } else if (mag == 1) {
        out += rest;
      } else {
        out += to_string(mag) + "*" + rest;
      }
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string("s") + ")";
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

}  // namespace newton_atlas
