// Acceptance gate: one line per criterion, exact equality throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "baileykit/bailey.hpp"
#include "baileykit/corpus.hpp"
#include "baileykit/errors.hpp"
#include "baileykit/instance.hpp"
#include "baileykit/oracle.hpp"
#include "baileykit/qfunctions.hpp"
#include "baileykit/specializations.hpp"
#include "baileykit/wp_bailey.hpp"

using namespace baileykit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  long checks = 0;
  std::string first_problem;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) first_problem = what;
    pass = pass && ok;
  }
};

// Instances from criteria 1-9 that passed verify, revisited by the robustness criterion.
std::vector<IdentityInstance> g_passed;

void verify_lines(Outcome& o, const std::vector<std::string>& lines) {
  for (const auto& line : lines) {
    VerificationReport r;
    try {
      r = verify(parse_instance(line));
    } catch (const std::exception& e) {
      o.expect(false, line + ": " + e.what());
      continue;
    }
    const bool ok = r.status == Status::Pass;
    o.expect(ok, line + ": " + status_name(r.status) +
                     (r.first_mismatch_texp ? " at t^" + std::to_string(*r.first_mismatch_texp) : "") +
                     (r.message.empty() ? "" : " (" + r.message + ")"));
    if (ok) g_passed.push_back(r.instance);
  }
}

Sides sides(const std::string& line) { return build_sides(parse_instance(line)); }

bool same_series(const TSeries& f, const TSeries& g, long order) {
  return !first_difference(f, g, order).has_value();
}

TSeries q_pow(long qexp) { return TSeries::monomial(1, 2 * qexp); }
Monomial qm(long qexp, const Rational& c = 1) { return Monomial::q_power(qexp, c); }

Outcome criterion1() {
  Outcome o;
  std::vector<std::string> lines;
  for (long m = 0; m <= 40; ++m) lines.push_back("K1MRR m=" + std::to_string(m));
  for (long m = 0; m <= 30; ++m) {
    lines.push_back("K1MGG_EVEN m=" + std::to_string(m));
    lines.push_back("K1MGG_ODD m=" + std::to_string(m));
  }
  verify_lines(o, lines);
  // The zero branches are genuinely zero on both sides.
  for (long m : {2L, 5L, 38L}) {
    Sides s = sides("K1MRR m=" + std::to_string(m));
    o.expect(s.lhs.is_zero() && s.rhs.is_zero(), "K1MRR m=" + std::to_string(m) + " is not zero");
  }
  for (long m : {1L, 7L, 29L}) {
    Sides s = sides("K1MGG_ODD m=" + std::to_string(m));
    o.expect(s.lhs.is_zero() && s.rhs.is_zero(), "K1MGG_ODD m=" + std::to_string(m) + " is not zero");
  }
  return o;
}

std::vector<Integer> rr_counts(long residue_a, long residue_b, long n_max) {
  PartitionSpec spec;
  spec.allowed = [=](long part) { return part % 5 == residue_a || part % 5 == residue_b; };
  return count_partitions(spec, n_max);
}

Outcome criterion2() {
  Outcome o;
  std::vector<std::string> lines;
  for (long k = 1; k <= 3; ++k) {
    for (long m = 0; m <= 6; ++m) {
      lines.push_back("KMRR k=" + std::to_string(k) + " m=" + std::to_string(m) + " order=120");
    }
  }
  verify_lines(o, lines);
  const Sides rr1 = sides("RR1 order=120");
  const Sides rr2 = sides("RR2 order=120");
  const Sides k20 = sides("KMRR k=2 m=0 order=120");
  const Sides k21 = sides("KMRR k=2 m=1 order=120");
  o.expect(same_series(k20.lhs, rr1.lhs, 120) && same_series(k20.rhs, rr1.rhs, 120),
           "KMRR(2,0) differs from RR1");
  o.expect(same_series(k21.lhs, rr2.lhs, 120) && same_series(k21.rhs, rr2.rhs, 120),
           "KMRR(2,1) differs from RR2");
  for (long m = 0; m <= 6; ++m) {
    const std::string ms = std::to_string(m);
    o.expect(same_series(sides("KMRR k=2 m=" + ms + " order=120").lhs,
                         sides("MRR m=" + ms + " order=120").lhs, 120),
             "KMRR(2," + ms + ") differs from the rearranged MRR sum");
  }
  const auto c1 = rr_counts(1, 4, 60);
  const auto c2 = rr_counts(2, 3, 60);
  for (long n = 0; n <= 60; ++n) {
    o.expect(rr1.rhs.coeff(2 * n) == Rational(c1[n]), "RR1 vs partitions at q^" + std::to_string(n));
    o.expect(rr2.rhs.coeff(2 * n) == Rational(c2[n]), "RR2 vs partitions at q^" + std::to_string(n));
    o.expect(rr1.lhs.coeff(2 * n) == Rational(c1[n]), "RR1 sum vs partitions at q^" + std::to_string(n));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<std::string> lines;
  for (long k = 1; k <= 2; ++k) {
    for (long m = 0; m <= 6; ++m) {
      lines.push_back("KMGG k=" + std::to_string(k) + " m=" + std::to_string(m) + " order=120");
    }
  }
  verify_lines(o, lines);
  return o;
}

// b_m = q^{km^2-m}/(q)_{2m} * (KMRR_INV sum at shift 2m), a_m its product side, for the
// classical inversion at a = q.
void inversion_sequences(Outcome& o, long k, long m_max, long order) {
  SeriesSequence a_seq([k](long m, long w) {
    TSeries prod = poch_inf_laurent(qm(2 * k + 1), w, 2 * (2 * k + 1)) *
                   poch_inf_laurent(qm(k * (2 * m + 1)), w, 2 * (2 * k + 1)) *
                   poch_inf_laurent(qm(k * (1 - 2 * m) + 1), w, 2 * (2 * k + 1)) *
                   poch_inf_recip_laurent(qm(1), w);
    return q_pow(k * m * m - m) * (TSeries::constant(1) - q_pow(2 * m + 1)) *
           poch_recip(qm(1), 1, w) * prod;
  });
  SeriesSequence b_seq([k](long m, long w) {
    const TSeries inner =
        k == 1 ? TSeries::constant(1)
               : sides("KMRR_INV k=" + std::to_string(k) + " m=" + std::to_string(2 * m) +
                       " order=" + std::to_string(w))
                     .lhs;
    return q_pow(k * m * m - m) * poch_recip(qm(1), 2 * m, w) * inner;
  });
  const RelationCheck r = classical_inversion_check(a_seq, b_seq, m_max, order);
  o.expect(r.pass, "classical inversion k=" + std::to_string(k) + ": " + r.to_string());
}

Outcome criterion4() {
  Outcome o;
  std::vector<std::string> lines;
  for (long m = 0; m <= 8; ++m) {
    for (const char* id : {"MRR", "MGG", "GIS"}) {
      lines.push_back(std::string(id) + " m=" + std::to_string(m) + " order=120");
    }
  }
  for (long k = 1; k <= 3; ++k) {
    for (long m = 0; m <= 5; ++m) {
      for (const char* id : {"KMRR_INV", "KMRR_CHANGE", "KMGG_INV"}) {
        lines.push_back(std::string(id) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                        " order=120");
      }
    }
  }
  for (long k = 2; k <= 4; ++k) {
    for (long m = 0; m <= 2 * k; ++m) {
      lines.push_back("K2MRR k=" + std::to_string(k) + " m=" + std::to_string(m) + " order=120");
    }
    for (long m = 1; m <= k - 1; ++m) {
      lines.push_back("LHS_FULL_AG k=" + std::to_string(k) + " m=" + std::to_string(m) +
                      " order=120");
    }
  }
  verify_lines(o, lines);

  // The theta-product rewriting behind the doubled-shift form, as a product identity and as
  // an equality of the two multisums.
  for (long k = 2; k <= 4; ++k) {
    for (long m = 0; m <= k; ++m) {
      const long w = 120;
      const long base = 2 * (2 * k + 1);
      TSeries left = poch_inf_laurent(qm(k * (2 * m + 1)), 3 * w, base) *
                     poch_inf_laurent(qm(k * (1 - 2 * m) + 1), 3 * w, base);
      const long shift = -k * m * m + m * (m + 1) / 2;
      TSeries right = TSeries::constant(m % 2 == 0 ? 1 : -1) * q_pow(shift) *
                      poch_inf_laurent(qm(k + m + 1), 3 * w, base) *
                      poch_inf_laurent(qm(k - m), 3 * w, base);
      const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      o.expect(same_series(left, right, w), "theta rewriting " + tag);
      if (k <= 3) {
        TSeries kmrr =
            sides("KMRR k=" + std::to_string(k) + " m=" + std::to_string(2 * m) + " order=120").lhs;
        TSeries k2 = sides("K2MRR " + tag + " order=" + std::to_string(w + 2 * k * m * m)).lhs;
        TSeries scaled = TSeries::constant(m % 2 == 0 ? 1 : -1) * q_pow(shift) * k2;
        o.expect(same_series(kmrr, scaled, std::min(w, scaled.order())),
                 "doubled-shift multisum " + tag);
      }
    }
  }
  for (long k = 1; k <= 3; ++k) inversion_sequences(o, k, 4, 60);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const long order = 80;
  const Monomial inf = Monomial::infinity();
  for (long m = 0; m <= 8; ++m) {
    const BaileyPair p = shifted_pair(m);
    const std::string ms = "m=" + std::to_string(m);
    auto check = [&](const BaileyPair& x, const std::string& what) {
      try {
        const RelationCheck r = check_pair(x, -6, 8, order);
        o.expect(r.pass, what + " " + ms + ": " + r.to_string());
      } catch (const std::exception& e) {
        o.expect(false, what + " " + ms + ": " + e.what());
      }
    };
    check(p, "shifted_pair");
    check(apply_lemma(p, qm(1, 2), qm(1, 3)), "apply_lemma(2q,3q)");
    check(apply_lemma(p, inf, inf), "apply_lemma(INF,INF)");
    check(apply_lemma(p, qm(1, 2), inf), "apply_lemma(2q,INF)");
    check(apply_s1(p), "apply_s1");
    check(apply_s2(p), "apply_s2");
    const BaileyPair squared = scale_pair_base(p, 2);
    check(change_base(squared, inf), "change_base(INF)");
    check(change_base(squared, qm(1, 2)), "change_base(2q)");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const long order = 60;
  const std::vector<Monomial> alphas{qm(2, 2), qm(3, 3), qm(4, Rational(5, 2))};
  for (long m = 0; m <= 3; ++m) {
    for (const auto& alpha : alphas) {
      const std::string tag = "m=" + std::to_string(m) + " alpha=" + alpha.to_string();
      for (const auto& p : {wp_unit_pair(m, alpha), wp_shifted_pair(m, alpha)}) {
        try {
          const RelationCheck fwd = check_wp_pair(p, -4, 4, order);
          o.expect(fwd.pass, p.label + " " + tag + ": " + fwd.to_string());
          const RelationCheck inv = wp_inversion_check(p, -4, 4, order);
          o.expect(inv.pass, "inversion of " + p.label + " " + tag + ": " + inv.to_string());
        } catch (const std::exception& e) {
          o.expect(false, p.label + " " + tag + ": " + e.what());
        }
      }
    }
  }
  const Monomial inf = Monomial::infinity();
  const std::vector<std::pair<Monomial, Monomial>> rhos{
      {qm(1, 2), qm(1, 3)}, {inf, inf}, {qm(1, 2), inf}};
  for (long m = 0; m <= 3; ++m) {
    for (const auto& [r1, r2] : rhos) {
      const std::string tag = "m=" + std::to_string(m) + " rho=(" + r1.to_string() + "," +
                              r2.to_string() + ")";
      const WPBaileyPair wp = wp_lemma_first(wp_shifted_family(m), r1, r2, Monomial());
      const BaileyPair classical = apply_lemma(shifted_pair(m), r1, r2);
      for (long n = -4; n <= 4; ++n) {
        o.expect(wp.alpha(n, order) == classical.alpha(n, order) &&
                     wp.beta(n, order) == classical.beta(n, order),
                 "WP lemma at alpha = 0 vs Bailey lemma " + tag + " n=" + std::to_string(n));
      }
    }
  }
  // A WP parameter of valuation 100 is invisible below t^80.
  for (long m = 0; m <= 3; ++m) {
    const WPBaileyPair wp = wp_shifted_pair(m, qm(50));
    const BaileyPair classical = shifted_pair(m);
    for (long n = -4; n <= 4; ++n) {
      o.expect(same_series(wp.alpha(n, 80), classical.alpha(n, 80), 80) &&
                   same_series(wp.beta(n, 80), classical.beta(n, 80), 80),
               "alpha = q^50 vs shifted pair m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<std::string> t8{
      "a=2q^(5/2) alpha=3q^3 rho1=2q rho2=3q mu1=2q^2 mu2=5q",
      "a=3q^(3/2) alpha=2q^2 rho1=7q^(1/2) rho2=-2q mu1=3q mu2=5/2q",
      "a=5/2q alpha=0 rho1=3q^2 rho2=2 mu1=2q mu2=3",
  };
  std::vector<std::string> lines;
  for (long m = 0; m <= 2; ++m) {
    for (const auto& a : t8) lines.push_back("T8PSI8 m=" + std::to_string(m) + " " + a + " order=80");
  }
  for (const char* a : {"b=2 c=2q^2 z=q", "b=3q c=5q^3 z=q^(1/2)", "b=-1/2 c=3q z=2q^(1/2)"}) {
    lines.push_back(std::string("R1PSI1 ") + a + " order=100");
  }
  for (const char* a : {"a=q^2 b=2q c=3q d=5q e=7q", "a=3q^2 b=2q c=3q d=5q^(1/2) e=7q",
                        "a=2q^2 b=3q c=5q^(1/2) d=-q e=7/2q^(3/2)"}) {
    lines.push_back(std::string("B6PSI6 ") + a + " order=100");
  }
  verify_lines(o, lines);
  for (const auto& r : degeneration_suite(80)) o.expect(r.pass, r.name + ": " + r.detail);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::vector<std::string> lines;
  for (long m = 0; m <= 4; ++m) {
    for (const char* a : {"beta=2 gamma=3 rho=5q", "beta=3 gamma=2q rho=7/2",
                          "beta=5/2q^(-1/2) gamma=7 rho=2q^(1/2)"}) {
      lines.push_back("EXT63 m=" + std::to_string(m) + " " + a + " order=80");
    }
  }
  verify_lines(o, lines);
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::vector<std::string> lines;
  for (long n = 0; n <= 8; ++n) {
    for (const char* a : {"beta=2q c=3q", "beta=3q^2 c=2q", "beta=2q c=2q"}) {
      lines.push_back("QULTRA_CONN n=" + std::to_string(n) + " " + a + " order=80");
    }
  }
  verify_lines(o, lines);
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto& inst : g_passed) {
    const ResummationReport r = resummation_check(inst);
    o.expect(r.identical, serialize(inst) + ": " + r.detail);
  }
  // Negative control 1: the Andrews-Gordon m-version with modulus 2k instead of 2k+1.
  {
    Sides s = sides("KMRR k=2 m=1 order=80");
    const long k = 2, m = 1, w = 80;
    s.rhs = poch_inf_laurent(qm(2 * k), w, 4 * k) * poch_inf_laurent(qm(k * (m + 1)), w, 4 * k) *
            poch_inf_laurent(qm(k * (1 - m) + 1), w, 4 * k) * poch_inf_recip_laurent(qm(1), w);
    const Comparison c = compare_sides(s, w);
    o.expect(!c.equal && c.texp.has_value(), "corrupted modulus was not detected");
  }
  // Negative control 2: a summand whose valuation dips after the window has been passed.
  {
    const TermFn adversarial = [](long n) {
      return n == 9 ? TSeries::monomial(1, 2) : TSeries::monomial(1, 2 * n + 2);
    };
    SumWindow win;
    win.lo = 0;
    win.hi = 4;
    bool flagged = false;
    try {
      flagged = !resummation_check(adversarial, win, 10).identical;
    } catch (const FormalDivergence&) {
      flagged = true;
    }
    o.expect(flagged, "adversarial term generator was not flagged");
  }
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    std::string title;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Entry> criteria{
      {1, "polynomial identities, m up to 40 and 30", criterion1, 10},
      {2, "Andrews-Gordon m-versions, k <= 3, m <= 6, q-order 60, with partition oracle", criterion2, 60},
      {3, "Goellnitz-Gordon m-versions, k <= 2, m <= 6, t-order 120", criterion3, 0},
      {4, "m-versions, inversions, doubled shift and full Andrews-Gordon left sides", criterion4, 0},
      {5, "Bailey relation and transform closure, m <= 8, n in [-6, 8]", criterion5, 0},
      {6, "WP relation, inversion, alpha = 0 and small-alpha degenerations", criterion6, 0},
      {7, "8psi8 transformation, 1psi1 and 6psi6 routes and direct sums", criterion7, 0},
      {8, "6psi6 extension with a 4phi3 tail, m <= 4, three assignments", criterion8, 0},
      {9, "continuous q-ultraspherical connection coefficients, n <= 8", criterion9, 0},
      {10, "resummation stability and negative controls", criterion10, 0},
  };
  bool all = true;
  const auto start = Clock::now();
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0) o.expect(secs < c.budget_s, "runtime budget exceeded");
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.number << ": " << c.title
              << " (" << o.checks << " checks, " << static_cast<long>(secs * 1000) << " ms)";
    if (!o.pass) std::cout << " first problem: " << o.first_problem;
    std::cout << std::endl;
  }
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << "total " << static_cast<long>(total * 1000) << " ms" << std::endl;
  return all ? 0 : 1;
}
