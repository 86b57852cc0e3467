#include <doctest.h>

#include "baileykit/errors.hpp"
#include "baileykit/qfunctions.hpp"
#include "baileykit/series.hpp"
#include "test_util.hpp"

using namespace baileykit;
using namespace baileykit::testing;

TEST_SUITE("series") {
  TEST_CASE("multiplicative identity and exponent bookkeeping") {
    Sampler s(1);
    const TSeries f = s.series(-3, 20);
    CHECK(TSeries::constant(1) * f == f);
    CHECK(TSeries::monomial(1, 1) * TSeries::monomial(1, 1) == TSeries::monomial(1, 2));
  }

  TEST_CASE("geometric series times its denominator") {
    std::vector<Rational> ones(21, Rational(1));
    const TSeries geo = series_scale_base(TSeries::from_coeffs(0, ones, 20), 2, 40);
    const TSeries prod = qpoly({{0, 1}, {1, -1}}) * geo;
    CHECK(prod.order() == 40);
    CHECK(agree(prod, TSeries::constant(1), 40));
  }

  TEST_CASE("inversion") {
    CHECK(series_inv(TSeries::constant(1)) == TSeries::constant(1));
    const TSeries g = series_inv(qpoly({{0, 1}, {1, -1}}), 30);
    for (long e = 0; e <= 30; ++e) CHECK(g.coeff(e) == (e % 2 == 0 ? 1 : 0));
    CHECK_THROWS_AS(series_inv(TSeries::zero(20)), ZeroSeriesInversion);
    CHECK_THROWS_AS(series_inv(TSeries()), ZeroSeriesInversion);
  }

  TEST_CASE("inverse of a Laurent series has the negated valuation") {
    Sampler s(2);
    for (int i = 0; i < 100; ++i) {
      const TSeries f = s.unit(s.integer(-4, 4), 24);
      const TSeries g = series_inv(f);
      CHECK(g.valuation() == -f.valuation());
      const TSeries one = f * g;
      CHECK(one.order() >= 24 - f.valuation());
      CHECK(agree(one, TSeries::constant(1), one.order()));
    }
  }

  TEST_CASE("base scaling") {
    CHECK(series_scale_base(qpoly({{0, 1}, {1, 1}}), 2) == qpoly({{0, 1}, {2, 1}}));
    const TSeries b = qbinom(4, 2);
    CHECK(series_scale_base(b, 2) == qbinom(4, 2, 4));
    Sampler s(3);
    const TSeries f = s.series(-2, 30);
    CHECK(series_scale_base(f, 1) == f);
  }

  TEST_CASE("base scaling is a ring homomorphism") {
    Sampler s(4);
    for (int i = 0; i < 20; ++i) {
      const TSeries f = s.series(s.integer(-3, 3), 20);
      const TSeries g = s.series(s.integer(-3, 3), 20);
      const long k = s.integer(1, 4);
      const TSeries lhs = series_scale_base(f * g, k);
      const TSeries rhs = series_scale_base(f, k) * series_scale_base(g, k);
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("ring laws up to the shared order") {
    Sampler s(5);
    for (int i = 0; i < 50; ++i) {
      const TSeries f = s.series(s.integer(-3, 3), s.integer(10, 25));
      const TSeries g = s.series(s.integer(-3, 3), s.integer(10, 25));
      const TSeries h = s.series(s.integer(-3, 3), s.integer(10, 25));
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      const TSeries left = (f * g) * h;
      const TSeries right = f * (g * h);
      CHECK(left.order() == right.order());
      CHECK(agree(left, right, left.order()));
      const TSeries d1 = f * (g + h);
      const TSeries d2 = f * g + f * h;
      CHECK(agree(d1, d2, std::min(d1.order(), d2.order())));
      CHECK((f - f).is_zero());
    }
  }

  TEST_CASE("exact arithmetic stays exact") {
    const TSeries f = qpoly({{-1, 2}, {3, Rational(1, 3)}});
    const TSeries g = f * f - f;
    CHECK(g.is_exact());
    CHECK(g.valuation() == -4);
    CHECK(g.coeff(-4) == 4);
    CHECK(g.max_exp() == 12);
  }

  TEST_CASE("truncation bookkeeping") {
    const TSeries f = TSeries::from_coeffs(-2, {1, 0, 3, 0, 0}, 6);
    CHECK(f.valuation() == -2);
    CHECK(f.max_exp() == 0);
    CHECK(f.coeff(5) == 0);
    CHECK_THROWS_AS((void)f.coeff(7), std::out_of_range);
    CHECK(f.truncated(-1) == TSeries::from_coeffs(-2, {1}, -1));
    CHECK(TSeries::zero(5).valuation() == 6);
    CHECK(add_order(kExactOrder, 3) == kExactOrder);
  }

  TEST_CASE("binomial multiplication and division are inverse") {
    Sampler s(6);
    const TSeries f = s.series(0, 30);
    const TSeries g = f.mul_binomial(Rational(5, 2), 3).div_binomial(Rational(5, 2), 3);
    CHECK(agree(g, f, g.order()));
    CHECK_THROWS_AS(TSeries::constant(1).div_binomial(1, 0), ZeroSeriesInversion);
  }

  TEST_CASE("recomputing at a higher order and truncating reproduces the lower order") {
    Sampler s(7);
    for (int i = 0; i < 10; ++i) {
      const Monomial a = s.monomial(-2, 3);
      const long k = s.integer(-4, 5);
      CHECK(poch(a, k, 40).truncated(20) == poch(a, k, 20).truncated(20));
      const Monomial b = s.monomial(1, 4);
      CHECK(poch_inf(b, 40).truncated(20) == poch_inf(b, 20).truncated(20));
      CHECK(series_inv(poch_inf(b, 40)).truncated(20) == series_inv(poch_inf(b, 20)).truncated(20));
    }
  }

  TEST_CASE("first difference") {
    const TSeries f = qpoly({{0, 1}, {2, 1}});
    CHECK_FALSE(first_difference(f, f, 10).has_value());
    CHECK(first_difference(f, qpoly({{0, 1}, {3, 1}}), 10) == 4);
  }
}
