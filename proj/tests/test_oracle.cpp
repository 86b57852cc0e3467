#include <doctest.h>

#include "baileykit/errors.hpp"
#include "baileykit/instance.hpp"
#include "baileykit/oracle.hpp"
#include "baileykit/qfunctions.hpp"
#include "test_util.hpp"

using namespace baileykit;
using namespace baileykit::testing;

TEST_SUITE("oracle") {
  TEST_CASE("partition counts") {
    const auto rr = count_partitions({[](long p) { return p % 5 == 1 || p % 5 == 4; }, {}}, 10);
    CHECK(rr[4] == 2);
    const auto all = count_partitions({[](long) { return true; }, {}}, 10);
    CHECK(all[5] == 7);
    CHECK(all[10] == 42);
    const auto none = count_partitions({[](long) { return false; }, {}}, 5);
    CHECK(none[0] == 1);
    for (long n = 1; n <= 5; ++n) CHECK(none[n] == 0);
    const auto distinct = count_partitions({[](long) { return true; }, 1}, 10);
    CHECK(distinct[10] == 10);
  }

  TEST_CASE("gap conditions match the Rogers-Ramanujan sides") {
    const auto gap2 = count_partitions({[](long) { return true; }, 2}, 40);
    const auto mod5 = count_partitions({[](long p) { return p % 5 == 1 || p % 5 == 4; }, {}}, 40);
    CHECK(gap2 == mod5);
    const auto gap2_no1 = count_partitions({[](long p) { return p >= 2; }, 2}, 40);
    const auto mod5b = count_partitions({[](long p) { return p % 5 == 2 || p % 5 == 3; }, {}}, 40);
    CHECK(gap2_no1 == mod5b);
  }

  TEST_CASE("pentagonal expansion is the Euler product") {
    CHECK(agree(pentagonal_expansion(100), poch_inf(qm(1), 100), 100));
    const TSeries p = pentagonal_expansion(30);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(4) == -1);
    CHECK(p.coeff(10) == 1);
    CHECK(p.coeff(6) == 0);
    CHECK(pentagonal_expansion(0) == TSeries::constant(1, 0));
  }

  TEST_CASE("resummation leaves verified instances unchanged") {
    for (const char* line : {"RR1 order=80", "RR2 order=40", "KMRR k=2 m=1 order=40", "R1PSI1 order=30", "B6PSI6 order=30"}) {
      CAPTURE(line);
      const ResummationReport r = resummation_check(parse_instance(line));
      CHECK(r.identical);
    }
  }

  TEST_CASE("resummation flags a summand that dips below the order late") {
    const TermFn adversarial = [](long n) {
      return n == 9 ? TSeries::monomial(1, 2) : TSeries::monomial(1, 2 * n + 2);
    };
    bool flagged = false;
    try {
      flagged = !resummation_check(adversarial, {0, 4}, 10).identical;
    } catch (const FormalDivergence&) {
      flagged = true;
    }
    CHECK(flagged);
    const TermFn honest = [](long n) { return TSeries::monomial(1, n * n); };
    CHECK(resummation_check(honest, {0, 4}, 30).identical);
  }
}
