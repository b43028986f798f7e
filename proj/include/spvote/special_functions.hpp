#pragma once

#include <cmath>
#include <limits>

#include "spvote/error.hpp"

namespace spvote {

namespace detail {

inline constexpr int gamma_max_iterations = 100000;
inline constexpr double gamma_eps = 1e-16;

// Lower regularized P(a, x) by its power series; converges fast for x < a+1.
inline double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < gamma_max_iterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * gamma_eps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized Q(a, x) by its continued fraction (modified Lentz);
// converges fast for x >= a+1.
inline double gamma_q_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / gamma_eps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < gamma_max_iterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < gamma_eps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace detail

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
inline double regularized_gamma_q(double a, double x) {
  if (!(a > 0) || !(x >= 0)) throw DomainError("regularized gamma needs a > 0 and x >= 0");
  if (x == 0) return 1.0;
  if (x < a + 1) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_fraction(a, x);
}

/// P(X >= x) for X ~ chi-square with df degrees of freedom.
inline double chi_square_survival(double x, unsigned df) {
  if (df == 0) throw DomainError("chi-square needs at least one degree of freedom");
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace spvote
