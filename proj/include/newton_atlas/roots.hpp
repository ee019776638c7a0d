#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "univariate.hpp"

namespace newton_atlas {

struct RootOptions {
  // Bound on the scaled residual |p(r)| / sum_k |c_k| |r|^k accepted for a root.
  double residual_tol = 1e-10;
  // Roots closer than this are reported as one value when clustering is requested.
  double cluster_tol = 1e-8;
  // Seeds the phase of the initial approximations.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int max_iterations = 800;
};

struct Root {
  ComplexValue value;
  std::size_t multiplicity = 1;
  // Set when the root was certified to be this rational number exactly.
  std::optional<Rational> exact;
};

namespace detail {

inline ComplexValue horner(std::span<const ComplexValue> c, ComplexValue z) {
  ComplexValue acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// p(z) and p'(z) in one pass.
inline std::pair<ComplexValue, ComplexValue> horner_with_derivative(std::span<const ComplexValue> c,
                                                                    ComplexValue z) {
  ComplexValue p = 0.0, dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

inline double residual_scale(std::span<const ComplexValue> c, ComplexValue z) {
  double az = std::abs(z), acc = 0.0, pw = 1.0;
  for (const auto& ck : c) {
    acc += std::abs(ck) * pw;
    pw *= az;
  }
  return acc;
}

inline double scaled_residual(std::span<const ComplexValue> c, ComplexValue z) {
  double scale = residual_scale(c, z);
  if (scale == 0.0) return 0.0;
  return std::abs(horner(c, z)) / scale;
}

inline bool is_finite_value(ComplexValue z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// splitmix64, used only to derive a reproducible starting phase.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Simultaneous Aberth-Ehrlich iteration for all roots of a polynomial with
// complex coefficients (lowest degree first, nonzero leading coefficient).
// Starting points lie on a circle whose radius is the geometric mean of the
// root moduli; the phase comes from `seed`. Throws SolverError when the
// iteration fails to converge.
inline std::vector<ComplexValue> aberth_roots(std::span<const ComplexValue> coeffs, const RootOptions& options = {}) {
  std::size_t n = coeffs.size() == 0 ? 0 : coeffs.size() - 1;
  if (n == 0) return {};
  if (coeffs.back() == ComplexValue(0.0)) throw std::invalid_argument("aberth_roots: zero leading coefficient");
  if (n == 1) return {-coeffs[0] / coeffs[1]};

  std::vector<ComplexValue> c(coeffs.begin(), coeffs.end());
  double radius = 1.0;
  if (std::abs(c[0]) > 0.0) radius = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / static_cast<double>(n));
  // Fujiwara bound keeps the circle inside a region containing every root.
  double fujiwara = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double term = std::pow(std::abs(c[k] / c[n]), 1.0 / static_cast<double>(n - k));
    if (k == 0) term *= std::pow(0.5, 1.0 / static_cast<double>(n));
    fujiwara = std::max(fujiwara, 2.0 * term);
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = std::max(fujiwara, 1.0);
  radius = std::min(radius, std::max(fujiwara, 1e-300));

  double phase = static_cast<double>(detail::mix(options.seed) >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
  std::vector<ComplexValue> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = phase + 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n);
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  constexpr double eps = 2.220446049250313e-16;
  int iteration = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto [p, dp] = detail::horner_with_derivative(c, z[i]);
      double scale = detail::residual_scale(c, z[i]);
      if (std::abs(p) <= 4.0 * eps * scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      ComplexValue ratio = p / dp;
      ComplexValue sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      ComplexValue correction = ratio / (1.0 - ratio * sum);
      if (!detail::is_finite_value(correction)) correction = ratio;
      z[i] -= correction;
      if (std::abs(correction) <= 4.0 * eps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }
  if (iteration == options.max_iterations) {
    for (std::size_t i = 0; i < n; ++i)
      if (detail::scaled_residual(c, z[i]) > options.residual_tol)
        throw SolverError("root solver did not converge");
  }
  return z;
}

namespace detail {

// Tries to certify that a numerically computed root of the rational
// polynomial p is an exact rational. Denominators of rational roots divide the
// leading coefficient of the primitive integer form.
inline std::optional<Rational> certify_rational_root(const UnivariatePolynomial& primitive, ComplexValue z) {
  if (std::fabs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) return std::nullopt;
  for (double tol : {1e-9, 1e-11, 1e-13}) {
    Rational candidate;
    if (!rationalize(z.real(), 1L << 40, tol, candidate)) continue;
    if (!mpz_divisible_p(primitive.leading().get_num_mpz_t(), candidate.get_den_mpz_t())) continue;
    if (primitive.evaluate(candidate) == 0) return candidate;
  }
  return std::nullopt;
}

}  // namespace detail

// Roots of p with multiplicities. The polynomial is first split exactly into
// squarefree factors (Yun); each factor is solved by Aberth iteration and
// polished with Newton steps. Every reported root satisfies
//   |q(r)| <= residual_tol * sum_k |q_k| |r|^k
// for the squarefree factor q it came from, with coefficients rescaled by a
// power of two. Rational roots are certified exactly and reported with `exact`.
// Results are sorted by (re, im).
inline std::vector<Root> complex_roots(const UnivariatePolynomial& p, const RootOptions& options = {}) {
  if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
  std::vector<Root> out;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    UnivariatePolynomial q = factor;
    if (q.valuation() > 0) {
      out.push_back({ComplexValue(0.0), multiplicity, Rational(0)});
      q = q.shifted_down(q.valuation());
    }
    if (q.degree() < 1) continue;
    UnivariatePolynomial primitive = primitive_integer_part(q);
    if (q.degree() == 1) {
      Rational r = -q[0] / q[1];
      out.push_back({ComplexValue(r.get_d(), 0.0), multiplicity, r});
      continue;
    }
    auto coeffs = normalized_complex_coefficients(q);
    RootOptions local = options;
    std::vector<ComplexValue> zs;
    bool accepted = false;
    for (int attempt = 0; attempt < 4 && !accepted; ++attempt) {
      local.seed = detail::mix(options.seed + static_cast<std::uint64_t>(attempt));
      try {
        zs = aberth_roots(coeffs, local);
      } catch (const SolverError&) {
        continue;
      }
      for (auto& z : zs) {
        for (int k = 0; k < 3; ++k) {
          auto [v, dv] = detail::horner_with_derivative(coeffs, z);
          if (dv == ComplexValue(0.0)) break;
          ComplexValue step = v / dv;
          if (!detail::is_finite_value(step)) break;
          ComplexValue next = z - step;
          if (detail::scaled_residual(coeffs, next) <= detail::scaled_residual(coeffs, z)) z = next;
        }
      }
      accepted = std::all_of(zs.begin(), zs.end(), [&](ComplexValue z) {
        return detail::scaled_residual(coeffs, z) <= options.residual_tol;
      });
    }
    if (!accepted) throw SolverError("complex_roots: residual above tolerance for " + q.to_string());
    for (auto z : zs) {
      auto exact = detail::certify_rational_root(primitive, z);
      if (exact) z = ComplexValue(exact->get_d(), 0.0);
      out.push_back({normalize_zero(z), multiplicity, exact});
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace newton_atlas
