#include <doctest.h>

#include "baileykit/errors.hpp"
#include "baileykit/bailey.hpp"
#include "baileykit/oracle.hpp"
#include "baileykit/qfunctions.hpp"
#include "test_util.hpp"

using namespace baileykit;
using namespace baileykit::testing;

namespace {

TSeries q_pow(long e) { return TSeries::monomial(1, 2 * e); }

// Pochhammer built as a direct product of binomials, without poch().
TSeries direct_poch(const Monomial& a, long k, long order) {
  TSeries f = TSeries::constant(1, order);
  for (long j = 0; j < k; ++j) f = f.mul_binomial(a.coeff(), a.texp() + 2 * j).truncated(order);
  return f;
}

}  // namespace

TEST_SUITE("qfunctions") {
  TEST_CASE("finite Pochhammer symbols") {
    CHECK(poch(qm(1), 3, kExactOrder) ==
          qpoly({{0, 1}, {1, -1}, {2, -1}, {4, 1}, {5, 1}, {6, -1}}));
    CHECK(poch(qm(3, 2), 0, kExactOrder) == TSeries::constant(1));
    CHECK(poch(Monomial(), 4, kExactOrder) == TSeries::constant(1));
  }

  TEST_CASE("negative index Pochhammer") {
    // 1/(1 - 2q^-1) = -q/2 - q^2/4 - ...
    const TSeries f = poch(Monomial::constant(2), -1, 20);
    CHECK(f.valuation() == 2);
    for (long j = 1; j <= 10; ++j) CHECK(f.coeff(2 * j) == -Rational(1, 1L << j));
    CHECK(f.coeff(3) == 0);
    CHECK_THROWS_AS(poch(qm(1), -1, 20), ZeroSeriesInversion);
  }

  TEST_CASE("reciprocal of a negative index Pochhammer can vanish") {
    CHECK(poch_recip(qm(1), -1, 20).is_zero());
    CHECK(poch_recip(qm(1), -3, 20).is_zero());
    CHECK(agree(poch_recip(qm(2), -1, 20), qpoly({{0, 1}, {1, -1}}), 20));
  }

  TEST_CASE("Pochhammer recurrence for all integer indices") {
    Sampler s(11);
    for (int i = 0; i < 10; ++i) {
      const Monomial a = s.monomial(-3, 3);
      for (long k = -6; k <= 6; ++k) {
        const TSeries lhs = poch(a, k + 1, 30);
        const TSeries rhs = poch(a, k, 40).mul_binomial(a.coeff(), a.texp() + 2 * k);
        CHECK(agree(lhs, rhs, 30));
      }
      for (long k = 1; k <= 6; ++k) {
        const TSeries one = poch(a, -k, 40) * poch(a * qm(-k), k, kExactOrder);
        CHECK(agree(one, TSeries::constant(1), 30));
      }
    }
  }

  TEST_CASE("infinite products") {
    CHECK(agree(poch_inf(Monomial(), 10), TSeries::constant(1), 10));
    CHECK_THROWS_AS(poch_inf(Monomial::constant(2), 10), FormalDivergence);
    CHECK(poch_inf(qm(1), 80) == pentagonal_expansion(80));
    CHECK(agree(poch_inf(qm(1, 3), 40), direct_poch(qm(1, 3), 21, 40), 40));
  }

  TEST_CASE("products of Pochhammer symbols") {
    CHECK(poch_multi({{qm(1)}, {qm(2)}}, 1, kExactOrder) == qpoly({{0, 1}, {1, -1}}) * qpoly({{0, 1}, {2, -1}}));
    CHECK(poch_multi({}, 5, 20) == TSeries::constant(1));
    const TSeries inf = poch_multi({{qm(5)}, {qm(1)}}, std::nullopt, 40);
    CHECK(agree(inf, direct_poch(qm(5), 16, 40) * direct_poch(qm(1), 21, 40), 40));
  }

  TEST_CASE("Gaussian polynomials") {
    CHECK(qbinom(3, 1) == qpoly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(qbinom(5, -1).is_zero());
    CHECK(qbinom(5, 6).is_zero());
    CHECK(qbinom(4, 2) == qpoly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  }

  TEST_CASE("Gaussian polynomial recurrences and palindromy") {
    for (long n = 1; n <= 10; ++n) {
      for (long k = 0; k <= n; ++k) {
        CHECK(qbinom(n, k) == qbinom(n - 1, k - 1) + q_pow(k) * qbinom(n - 1, k));
        CHECK(qbinom(n, k) == q_pow(n - k) * qbinom(n - 1, k - 1) + qbinom(n - 1, k));
        const TSeries b = qbinom(n, k);
        const auto& c = b.coeffs();
        CHECK(std::equal(c.begin(), c.end(), c.rbegin()));
        CHECK(qbinom(n, k).max_exp() == 2 * k * (n - k));
      }
    }
  }

  TEST_CASE("triple products") {
    CHECK(triple_product(qm(1), 6, 60) == poch_inf(qm(1), 60));
    CHECK_THROWS_AS(triple_product(qm(2), 4, 20), FormalDivergence);
    // Bilateral side of the triple product identity with z = q and base q^2.
    const TermFn jtp = [](long n) {
      return TSeries::monomial(n % 2 == 0 ? 1 : -1, 2 * n + 2 * n * (n - 1), 40);
    };
    CHECK(agree(sum_bilateral(jtp, {-8, 8}, 40), triple_product(qm(1), 4, 40), 40));
    // The modulus-5 product with z = q^2 is the first Rogers-Ramanujan product times (q)_inf.
    const TSeries rr = triple_product(qm(2), 10, 60) * series_inv(poch_inf(qm(1), 60));
    CHECK(agree(rr, series_inv(poch_inf(qm(1), 60, 10) * poch_inf(qm(4), 60, 10)), 60));
  }

  TEST_CASE("unilateral sums") {
    CHECK(sum_unilateral([](long) { return TSeries(); }, {}, 20).is_zero());
    const TSeries geo = sum_unilateral([](long n) { return q_pow(n); }, {}, 30);
    CHECK(agree(geo, series_inv(qpoly({{0, 1}, {1, -1}}), 30), 30));
    // Partitions into parts differing by at least 2.
    const TSeries rr = sum_unilateral(
        [](long n) { return q_pow(n * n) * poch_recip(qm(1), n, 60); }, {}, 60);
    const auto counts = count_partitions({[](long) { return true; }, 2}, 30);
    for (long n = 0; n <= 30; ++n) CHECK(rr.coeff(2 * n) == Rational(counts[n]));
  }

  TEST_CASE("sums without valuation growth diverge") {
    CHECK_THROWS_AS(sum_unilateral([](long) { return TSeries::constant(1); }, {0, 4}, 10),
                    FormalDivergence);
    CHECK_THROWS_AS(sum_bilateral([](long n) { return q_pow(n); }, {-4, 4}, 10), FormalDivergence);
  }

  TEST_CASE("finite q-binomial theorem") {
    Sampler s(12);
    for (long n = 0; n <= 8; ++n) {
      const Monomial z = s.monomial(-2, 4);
      const TermFn term = [&](long k) {
        return to_order(30, [&](long w) {
          return poch(qm(-n), k, kExactOrder) * z.pow(k).to_series() * poch_recip(qm(1), k, w);
        });
      };
      const TSeries lhs = sum_unilateral(term, {0, n, false}, 30);
      CHECK(agree(lhs, poch(z * qm(-n), n, kExactOrder), 30));
    }
  }

  TEST_CASE("q-Pfaff-Saalschuetz summation") {
    Sampler s(13);
    for (long n = 0; n <= 6; ++n) {
      const Monomial a = s.monomial(-2, 2);
      const Monomial b = s.monomial(-2, 2);
      const Monomial c = Monomial(Rational(7, 3), s.integer(-2, 2));
      const Monomial x = a * b * qm(1 - n) / c;
      const long order = 30;
      const TermFn term = [&](long k) {
        return to_order(order, [&](long w) {
          return poch(qm(-n), k, w) * poch(a, k, w) * poch(b, k, w) * q_pow(k) *
                 poch_recip(qm(1), k, w) * poch_recip(c, k, w) * poch_recip(x, k, w);
        });
      };
      const TSeries lhs = sum_unilateral(term, {0, n, false}, order);
      const TSeries rhs = to_order(order, [&](long w) {
        return poch(c / a, n, w) * poch(c / b, n, w) * poch_recip(c, n, w) *
               poch_recip(c / (a * b), n, w);
      });
      CHECK(agree(lhs, rhs, order));
    }
  }

  TEST_CASE("Jacobi triple product for admissible z") {
    Sampler s(14);
    for (int i = 0; i < 5; ++i) {
      const Monomial z = Monomial(s.coeff(), s.integer(1, 1));
      const TermFn term = [&](long n) {
        return (z.pow(n).to_series() * TSeries::monomial(n % 2 == 0 ? 1 : -1, n * (n - 1)))
            .truncated(40);
      };
      CHECK(agree(sum_bilateral(term, {-8, 8}, 40), triple_product(z, 2, 40), 40));
    }
  }

  TEST_CASE("doubling the window does not change a sum") {
    const TermFn term = [](long n) { return q_pow(n * n) * poch_recip(qm(1), n, 50); };
    CHECK(sum_unilateral(term, {}, 50) == sum_unilateral(term, SumWindow{}.scaled(2), 50));
  }
}
