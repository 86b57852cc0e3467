#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "baileykit/monomial.hpp"
#include "baileykit/series.hpp"

namespace baileykit::testing {

inline Monomial qm(long qexp, const Rational& c = 1) { return Monomial::q_power(qexp, c); }
inline Monomial tmono(long texp, const Rational& c = 1) { return Monomial(c, texp); }

/// Exact polynomial from (q-exponent, coefficient) pairs.
inline TSeries qpoly(std::initializer_list<std::pair<long, Rational>> terms) {
  TSeries f;
  for (const auto& [e, c] : terms) f += TSeries::monomial(c, 2 * e);
  return f;
}

inline bool agree(const TSeries& f, const TSeries& g, long upto) {
  return !first_difference(f, g, upto).has_value();
}

/// Seeded source of small test data. Coefficients come from {2, 3, 5/2, -2} so that no
/// Pochhammer factor accidentally vanishes.
class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational coeff() {
    static const Rational pool[] = {Rational(2), Rational(3), Rational(5, 2), Rational(-2)};
    return pool[integer(0, 3)];
  }

  Monomial monomial(long texp_lo, long texp_hi) { return Monomial(coeff(), integer(texp_lo, texp_hi)); }

  /// Truncated series with random small coefficients on [lo, order].
  TSeries series(long lo, long order) {
    std::vector<Rational> c;
    for (long e = lo; e <= order; ++e) {
      Rational r(integer(-3, 3), integer(1, 3));
      r.canonicalize();
      c.push_back(r);
    }
    return TSeries::from_coeffs(lo, std::move(c), order);
  }

  /// Series with a nonzero leading coefficient, suitable for inversion.
  TSeries unit(long lo, long order) {
    TSeries f = series(lo + 1, order);
    return f + TSeries::monomial(coeff(), lo, order);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace baileykit::testing
