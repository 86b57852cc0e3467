#pragma once

#include <string>

#include "baileykit/rational.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

/// c * t^texp with t = q^(1/2), the zero monomial, or the INFINITY marker used for
/// limit specializations of free parameters. INFINITY never enters series arithmetic.
class Monomial {
 public:
  /// The zero monomial.
  Monomial() = default;
  Monomial(Rational coeff, long texp);

  static Monomial infinity();
  static Monomial constant(const Rational& c) { return Monomial(c, 0); }
  /// c * q^qexp.
  static Monomial q_power(long qexp, const Rational& c = 1) { return Monomial(c, 2 * qexp); }

  bool is_zero() const { return !infinite_ && coeff_ == 0; }
  bool is_infinite() const { return infinite_; }
  bool is_finite_nonzero() const { return !infinite_ && coeff_ != 0; }
  const Rational& coeff() const { return coeff_; }
  long texp() const { return texp_; }
  /// t-valuation; zero has +inf-like valuation and INFINITY a -inf-like one.
  long valuation() const;
  /// True when this is exactly q^j for an integer j (coefficient 1, even t-exponent).
  bool is_pure_q_power() const { return !infinite_ && coeff_ == 1 && texp_ % 2 == 0; }

  /// Product; INFINITY times a finite nonzero monomial stays INFINITY, INFINITY*0 throws.
  Monomial operator*(const Monomial& o) const;
  /// Quotient with 1/0 = INFINITY and 1/INFINITY = 0; 0/0 and INF/INF throw.
  Monomial operator/(const Monomial& o) const;
  Monomial reciprocal() const;
  Monomial pow(long k) const;
  Monomial operator-() const;

  TSeries to_series(long order = kExactOrder) const;
  std::string to_string() const;

  bool operator==(const Monomial& o) const;

 private:
  Rational coeff_ = 0;
  long texp_ = 0;
  bool infinite_ = false;
};

}  // namespace baileykit
