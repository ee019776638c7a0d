#pragma once

#include <cstdint>
#include <string>

#include "bivariate.hpp"

namespace newton_atlas {

// Triangular automorphism of the plane:
//   ShearXByY: (x, y) -> (x + y^l, y)
//   ShearYByX: (x, y) -> (x, y + x^l)
struct Automorphism {
  enum class Kind { ShearXByY, ShearYByX };

  Kind kind = Kind::ShearXByY;
  std::int64_t exponent = 1;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

inline std::string to_string(Automorphism::Kind kind) {
  return kind == Automorphism::Kind::ShearXByY ? "shear-x-by-y" : "shear-y-by-x";
}

namespace detail {

// f(x + c*y^l, y) for kind ShearXByY, f(x, y + c*x^l) otherwise.
template <class Coeff>
SparseBivariate<Coeff> shear(const SparseBivariate<Coeff>& f, Automorphism::Kind kind, std::int64_t l,
                             const Rational& c) {
  if (l < 1) throw std::invalid_argument("shear exponent must be at least 1");
  SparseBivariate<Coeff> out;
  for (const auto& [e, coeff] : f.terms()) {
    // Expand (main + c*other^l)^k with k the exponent of the sheared variable.
    std::int64_t k = kind == Automorphism::Kind::ShearXByY ? e.p : e.q;
    Integer binom = 1;
    Rational c_pow = 1;
    for (std::int64_t j = 0; j <= k; ++j) {
      // term: binom(k, j) * main^(k-j) * c^j * other^(l*j)
      Rational factor = Rational(binom) * c_pow;
      Exponent ex = kind == Automorphism::Kind::ShearXByY ? Exponent{k - j, e.q + l * j}
                                                          : Exponent{e.p + l * j, k - j};
      out.add_term(ex, coeff * factor);
      binom = binom * (k - j) / (j + 1);
      c_pow *= c;
    }
  }
  return out;
}

}  // namespace detail

// Exact expansion of f o phi.
template <class Coeff>
SparseBivariate<Coeff> compose_automorphism(const SparseBivariate<Coeff>& f, const Automorphism& phi) {
  return detail::shear(f, phi.kind, phi.exponent, Rational(1));
}

}  // namespace newton_atlas
