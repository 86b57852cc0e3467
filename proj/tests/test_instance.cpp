#include <doctest.h>

#include "baileykit/errors.hpp"
#include "baileykit/instance.hpp"
#include "baileykit/report.hpp"
#include "test_util.hpp"

using namespace baileykit;
using namespace baileykit::testing;

namespace {

std::size_t error_column(const std::string& text) {
  try {
    (void)parse_value(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_SUITE("instance") {
  TEST_CASE("value grammar") {
    CHECK(parse_value("-3/2q^(5/2)") == Monomial(Rational(-3, 2), 5));
    CHECK(parse_value("q") == qm(1));
    CHECK(parse_value("q^-3") == qm(-3));
    CHECK(parse_value("2") == Monomial::constant(2));
    CHECK(parse_value("+4/6q^2") == qm(2, Rational(2, 3)));
    CHECK(parse_value("0") == Monomial());
    CHECK(parse_value("inf").is_infinite());
    CHECK(parse_value("q^(-1/2)") == tmono(-1));
  }

  TEST_CASE("value grammar errors carry columns") {
    CHECK(error_column("2x") == 2);
    CHECK(error_column("") == 1);
    CHECK(error_column("1/0") == 3);
    CHECK(error_column("q^(3/4)") == 5);
    CHECK(error_column("q^") == 3);
    CHECK_THROWS_AS(parse_value("1/"), ParseError);
  }

  TEST_CASE("monomials print in the value grammar") {
    Sampler s(21);
    for (int i = 0; i < 50; ++i) {
      const Monomial m = s.monomial(-7, 7);
      CHECK(parse_value(m.to_string()) == m);
    }
    CHECK(parse_value(Monomial::infinity().to_string()).is_infinite());
  }

  TEST_CASE("instance lines") {
    const IdentityInstance inst = parse_instance("  KMRR k=3 m=2 order=50  # comment");
    CHECK(inst.id == "KMRR");
    CHECK(inst.order == 50);
    REQUIRE(inst.bindings.size() == 2);
    CHECK(inst.bindings[0].first == "k");
    CHECK(inst.bindings[1].second == Monomial::constant(2));
  }

  TEST_CASE("documented instance lines") {
    const IdentityInstance k = parse_instance("KMRR k=2 m=3 order=120");
    CHECK(k.id == "KMRR");
    CHECK(k.order == 120);
    const IdentityInstance t =
        parse_instance("T8PSI8 m=1 rho1=2q rho2=3q mu1=2q^2 mu2=5q alpha=3q^3 order=80");
    const std::vector<std::pair<std::string, Monomial>> expected{
        {"m", Monomial::constant(1)}, {"rho1", qm(1, 2)}, {"rho2", qm(1, 3)},
        {"mu1", qm(2, 2)},            {"mu2", qm(1, 5)},  {"alpha", qm(3, 3)}};
    CHECK(t.bindings == expected);
    CHECK_THROWS_AS(parse_instance("KMRR k=0 m=1 order=40"), ConstraintViolation);
  }

  TEST_CASE("instance line errors") {
    CHECK_THROWS_AS(parse_instance("NOPE k=1"), UnknownIdentity);
    CHECK_THROWS_AS(parse_instance("KMRR j=1"), UnknownParameter);
    CHECK_THROWS_AS(parse_instance("KMRR k=1 k=2"), ParseError);
    CHECK_THROWS_AS(parse_instance("KMRR k"), ParseError);
    CHECK_THROWS_AS(parse_instance("KMRR order=-1"), ParseError);
    CHECK_THROWS_AS(parse_instance("kmrr"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
  }

  TEST_CASE("files") {
    const std::string text = "# header\n\nRR1 order=20\nT8PSI8 m=0 alpha=3q^4 order=20\n";
    const InstanceFile f = parse_instances(text);
    REQUIRE(f.lines.size() == 2);
    CHECK(f.lines[0].line == 3);
    CHECK(f.lines[1].line == 4);
    try {
      (void)parse_instances("RR1\nKMRR k=2 m=1 order=4x\n");
      FAIL("bad file accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 21);
    }
  }

  TEST_CASE("serialization round trip") {
    const std::string text =
        "EXT63 m=2 beta=5/2q^(-1/2) gamma=7 rho=2q^(1/2) order=30\n"
        "QULTRA_CONN n=3 beta=2q c=-3/2q order=24\n"
        "R1PSI1 b=2 c=2q^2 z=q\n";
    const InstanceFile f = parse_instances(text);
    const std::string once = serialize(f);
    CHECK(serialize(parse_instances(once)) == once);
    CHECK(once.find("order=" + std::to_string(default_order())) != std::string::npos);
  }

  TEST_CASE("reports") {
    const VerificationReport r = verify(parse_instance("K1MRR m=4"));
    const std::string line = report_line(r);
    CHECK(line.find("K1MRR") != std::string::npos);
    CHECK(line.find("pass") != std::string::npos);
    const std::string json = reports_json({r});
    CHECK(json.front() == '[');
    CHECK(json.find("\"status\"") != std::string::npos);
  }
}
