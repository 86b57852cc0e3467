#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "baileykit/rational.hpp"

namespace baileykit {

/// Order used for series known exactly (polynomials and Laurent polynomials).
inline constexpr long kExactOrder = std::numeric_limits<long>::max() / 4;

/// Saturating addition on truncation orders: anything at or above kExactOrder stays exact.
long add_order(long a, long b);

/// Truncated formal Laurent series in t = q^(1/2) with exact rational coefficients.
///
/// Coefficients are stored densely from the valuation up to the last nonzero
/// coefficient. Every exponent in (last stored, order] is a known zero; exponents
/// above order are unknown. An order of kExactOrder marks an exact Laurent polynomial.
/// Values are immutable in practice: all operations return new series.
class TSeries {
 public:
  /// The exact zero series.
  TSeries() = default;

  static TSeries zero(long order);
  static TSeries constant(const Rational& c, long order = kExactOrder);
  static TSeries monomial(const Rational& c, long texp, long order = kExactOrder);
  static TSeries from_coeffs(long min_exp, std::vector<Rational> coeffs, long order);

  long order() const { return order_; }
  bool is_exact() const { return order_ >= kExactOrder; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Exponent of the first nonzero coefficient, or order()+1 for a zero series.
  long valuation() const;
  long min_exp() const { return valuation(); }
  /// Exponent of the last stored nonzero coefficient (valuation()-1 when zero).
  long max_exp() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of t^e. Throws std::out_of_range when e lies above order().
  Rational coeff(long e) const;
  bool all_integral() const;

  TSeries truncated(long order) const;
  /// Multiplication by t^e.
  TSeries shifted(long e) const;
  TSeries scaled(const Rational& c) const;
  /// f * (1 - c t^e).
  TSeries mul_binomial(const Rational& c, long e) const;
  /// f / (1 - c t^e). Throws ZeroSeriesInversion when the binomial is 0.
  TSeries div_binomial(const Rational& c, long e) const;

  TSeries operator-() const;
  TSeries& operator+=(const TSeries& g);
  TSeries& operator-=(const TSeries& g);
  TSeries& operator*=(const TSeries& g);

  /// Identical known range and identical coefficients.
  bool operator==(const TSeries& g) const = default;

  std::string to_string() const;

 private:
  void normalize();

  long min_exp_ = 0;
  std::vector<Rational> coeffs_;
  long order_ = kExactOrder;
};

TSeries operator+(TSeries f, const TSeries& g);
TSeries operator-(TSeries f, const TSeries& g);
TSeries operator*(const TSeries& f, const TSeries& g);

TSeries series_add(const TSeries& f, const TSeries& g);
TSeries series_mul(const TSeries& f, const TSeries& g);

/// Multiplicative inverse. The result has valuation -f.valuation() and is known up to
/// f.order() - 2*f.valuation(), capped at max_order. Exact non-monomial input needs a cap.
TSeries series_inv(const TSeries& f, long max_order = kExactOrder);

/// Substitutes q -> q^k (every exponent multiplied by k), truncated at target_order.
TSeries series_scale_base(const TSeries& f, long k, long target_order = kExactOrder);

/// First exponent in [min(valuations), upto] where f and g differ. Both must be known to upto.
std::optional<long> first_difference(const TSeries& f, const TSeries& g, long upto);

}  // namespace baileykit
