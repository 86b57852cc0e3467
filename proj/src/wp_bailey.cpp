#include "baileykit/wp_bailey.hpp"

#include <algorithm>

#include "baileykit/errors.hpp"
#include "baileykit/qfunctions.hpp"

namespace baileykit {

namespace {

const Monomial kOne = Monomial::constant(1);
const Monomial kQ = Monomial::q_power(1);

bool is_one(const Monomial& x) { return x == kOne; }

TSeries one_minus(const Monomial& x) { return TSeries::constant(1) - x.to_series(); }

// 1 / (1 - x) for a monomial x, known up to order.
TSeries one_minus_recip(const Monomial& x, long order) {
  if (is_one(x)) throw ZeroSeriesInversion("division by 1 - 1");
  return poch_recip(x, 1, order);
}

// Lower end of the WP defining sum for beta_n.
long relation_lo(const WPBaileyPair& p, long n) {
  std::optional<long> lo;
  if (p.m) lo = -*p.m - n;
  if (p.alpha_lo) lo = lo ? std::max(*lo, *p.alpha_lo) : *p.alpha_lo;
  if (!lo) throw std::invalid_argument("WP pair has neither a = q^m nor bounded alpha support");
  return *lo;
}

void compare_into(RelationCheck& report, long n, const TSeries& expected, const TSeries& actual,
                  long order) {
  if (!report.pass) return;
  auto diff = first_difference(expected, actual, order);
  if (!diff) return;
  report.pass = false;
  report.first_bad_n = n;
  report.first_bad_texp = *diff;
  report.expected = expected.coeff(*diff);
  report.actual = actual.coeff(*diff);
}

// (x q^m; q)_k in the limit x -> 1: the factors equal to 1 - x are removed and counted
// (positive count for numerator factors, negative for denominator factors).
struct Regularized {
  TSeries value;
  long zero_order = 0;
};

Regularized regularized_poch(long m, long k, long order) {
  Regularized out;
  out.value = TSeries::constant(1, order);
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      if (m + i == 0) {
        ++out.zero_order;
      } else {
        out.value = out.value.mul_binomial(1, 2 * (m + i));
      }
    }
  } else {
    for (long i = k; i <= -1; ++i) {
      if (m + i == 0) {
        --out.zero_order;
      } else {
        out.value = out.value.div_binomial(1, 2 * (m + i));
      }
    }
  }
  return out;
}

}  // namespace

Monomial default_wp_unit_a() { return Monomial::constant(Rational(7, 3)); }

WPBaileyPair wp_unit_pair(long m, const Monomial& alpha, const Monomial& a) {
  if (m < 0) throw UnsupportedShift("the unit WP pair needs m >= 0");
  if (!alpha.is_finite_nonzero()) throw DegenerateParameter("the unit WP pair needs alpha != 0");
  if (!a.is_finite_nonzero()) throw DegenerateParameter("the unit WP pair needs a finite a != 0");
  if (a.is_pure_q_power()) {
    throw DegenerateParameter("the unit WP pair has poles at a = q^j; choose a generic a");
  }
  if (is_one(alpha)) throw DegenerateParameter("the unit WP pair needs alpha != 1");
  WPBaileyPair p;
  p.a = a;
  p.alpha_param = alpha;
  p.alpha_lo = -m;
  p.beta_lo = -m;
  p.label = "wp_unit(" + std::to_string(m) + ", " + alpha.to_string() + ", a=" + a.to_string() + ")";
  const Monomial a_over_alpha = a / alpha;
  const Monomial alpha_over_a = alpha / a;
  const Monomial alpha_q = alpha * kQ;
  const Monomial alpha_q2m = alpha * Monomial::q_power(-2 * m);
  p.alpha = SeriesSequence([=](long n, long order) {
    if (n < -m) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      return one_minus(a * Monomial::q_power(2 * n)) * one_minus_recip(a, w) *
             poch(a, n - m, w) * poch_recip(kQ, n + m, w) * poch(a_over_alpha, n + m, w) *
             poch_recip(alpha_q, n - m, w) * one_minus(alpha_q2m) * one_minus_recip(alpha, w) *
             alpha_over_a.pow(n + m).to_series();
    });
  });
  p.beta = SeriesSequence([m](long n, long) {
    return n + m == 0 ? TSeries::constant(1) : TSeries::zero(kExactOrder);
  });
  return p;
}

WPFamily wp_unit_family(long m, const Monomial& a) {
  WPFamily f;
  f.a = a;
  f.label = "wp_unit(" + std::to_string(m) + ")";
  f.make = [m, a](const Monomial& alpha) { return wp_unit_pair(m, alpha, a); };
  return f;
}

WPBaileyPair wp_shifted_pair(long m, const Monomial& alpha) {
  if (m < 0) throw UnsupportedShift("WP-shifted pairs need m >= 0");
  if (!alpha.is_finite_nonzero()) {
    throw DegenerateParameter("the WP-shifted pair needs alpha != 0 (alpha = 0 is the shifted pair)");
  }
  const Monomial q_over_alpha = kQ / alpha;
  const Monomial alpha_qm = alpha * Monomial::q_power(-m);
  TSeries d1 = poch(q_over_alpha, m, kExactOrder);
  TSeries d2 = poch(alpha_qm, m, kExactOrder);
  if (d1.is_zero() || d2.is_zero()) {
    throw DegenerateParameter("(q/alpha, alpha q^-m)_m vanishes for alpha = " + alpha.to_string());
  }
  WPBaileyPair p;
  p.a = Monomial::q_power(m);
  p.m = m;
  p.alpha_param = alpha;
  p.beta_lo = -(m / 2);
  p.label = "wp_shifted(" + std::to_string(m) + ", " + alpha.to_string() + ")";
  const Monomial qm_over_alpha = Monomial::q_power(m) / alpha;
  const Monomial alpha_sq_q2m = alpha * alpha * Monomial::q_power(-2 * m);
  const Monomial alpha_q1m = alpha * Monomial::q_power(1 - m);
  const TSeries qm = poch(kQ, m, kExactOrder);
  p.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      return poch(qm_over_alpha, n, w) * poch_recip(alpha_qm, n, w) * alpha_qm.pow(n).to_series();
    });
  });
  p.beta = SeriesSequence([=](long n, long order) {
    if (2 * n + m < 0 || n > 0) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      long inv_order = add_order(w, std::max(0L, -d1.valuation() - d2.valuation()) + 8);
      return qm * poch(q_over_alpha, m - n, w) * poch(alpha_sq_q2m, m + 2 * n, w) *
             series_inv(d1 * d2, inv_order) * poch_recip(alpha_q1m, m + n, w) *
             qbinom(m + n, m + 2 * n) * qm_over_alpha.pow(n).to_series();
    });
  });
  return p;
}

WPBaileyPair as_wp_pair(const BaileyPair& p) {
  if (p.base_texp != 2) throw std::invalid_argument("WP pairs are taken in base q");
  WPBaileyPair out;
  out.a = Monomial::q_power(p.m);
  out.m = p.m;
  out.alpha_param = Monomial();
  out.alpha = p.alpha;
  out.beta = p.beta;
  out.beta_lo = p.beta_lo;
  out.label = p.label;
  return out;
}

WPFamily wp_shifted_family(long m) {
  WPFamily f;
  f.a = Monomial::q_power(m);
  f.m = m;
  f.label = "wp_shifted(" + std::to_string(m) + ")";
  f.make = [m](const Monomial& alpha) {
    return alpha.is_zero() ? as_wp_pair(shifted_pair(m)) : wp_shifted_pair(m, alpha);
  };
  return f;
}

RelationCheck check_wp_pair(const WPBaileyPair& p, long n_lo, long n_hi, long order) {
  RelationCheck report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.order = order;
  const Monomial alpha_over_a = p.alpha_param / p.a;
  const Monomial aq = p.a * kQ;
  for (long n = n_lo; n <= n_hi && report.pass; ++n) {
    TSeries expected = p.beta(n, order);
    TSeries actual = to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long r = relation_lo(p, n); r <= n; ++r) {
        TSeries ar = p.alpha(r, w);
        if (ar.is_zero() && ar.is_exact()) continue;
        sum += poch(alpha_over_a, n - r, w) * poch(p.alpha_param, n + r, w) *
               poch_recip(kQ, n - r, w) * poch_recip(aq, n + r, w) * ar;
      }
      return sum.is_exact() ? sum.truncated(w) : sum;
    });
    compare_into(report, n, expected, actual, order);
  }
  return report;
}

WPBaileyPair wp_lemma_first(const WPFamily& family, const Monomial& rho1, const Monomial& rho2,
                            const Monomial& alpha) {
  if (rho1.is_zero() || rho2.is_zero()) throw DegenerateParameter("rho parameters must be nonzero");
  const Monomial a = family.a;
  const Monomial aq = a * kQ;
  Monomial c;
  Monomial alpha_rho1_a;
  Monomial alpha_rho2_a;
  if (!alpha.is_zero()) {
    if (!rho1.is_finite_nonzero() || !rho2.is_finite_nonzero()) {
      throw DegenerateParameter("rho -> infinity needs alpha = 0 in the first WP lemma");
    }
    c = alpha * rho1 * rho2 / aq;
    alpha_rho1_a = alpha * rho1 / a;
    alpha_rho2_a = alpha * rho2 / a;
  }
  if (is_one(c)) throw DegenerateParameter("c = alpha rho1 rho2 / aq equals 1");
  WPBaileyPair in = family(c);
  const Monomial s1 = rho1.reciprocal();
  const Monomial s2 = rho2.reciprocal();
  const Monomial aq_s1 = aq * s1;
  const Monomial aq_s2 = aq * s2;
  const Monomial aq_s12 = aq * s1 * s2;
  const Monomial qc = kQ * c;

  WPBaileyPair out;
  out.a = a;
  out.m = family.m;
  out.alpha_param = alpha;
  out.alpha_lo = in.alpha_lo;
  out.beta_lo = in.beta_lo;
  out.label = "wp_first(" + in.label + ", " + rho1.to_string() + ", " + rho2.to_string() + ")";
  out.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      return poch_scaled(kOne, s1, n, w) * poch_scaled(kOne, s2, n, w) * aq.pow(n).to_series() *
             poch_recip(aq_s1, n, w) * poch_recip(aq_s2, n, w) * in.alpha(n, w);
    });
  });
  out.beta = SeriesSequence([=](long n, long order) {
    if (n < in.beta_lo) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      TSeries c_scale = c.is_zero() ? TSeries::constant(1) : one_minus_recip(c, w);
      TSeries sum = TSeries::zero(kExactOrder);
      for (long j = in.beta_lo; j <= n; ++j) {
        TSeries bj = in.beta(j, w);
        if (bj.is_zero() && bj.is_exact()) continue;
        sum += poch_scaled(kOne, s1, j, w) * poch_scaled(kOne, s2, j, w) * aq.pow(j).to_series() *
               poch_recip(alpha_rho1_a, j, w) * poch_recip(alpha_rho2_a, j, w) *
               one_minus(c * Monomial::q_power(2 * j)) * poch(aq_s12, n - j, w) *
               poch(alpha, n + j, w) * poch_recip(kQ, n - j, w) * poch_recip(qc, n + j, w) * bj;
      }
      return sum * c_scale * poch(alpha_rho1_a, n, w) * poch(alpha_rho2_a, n, w) *
             poch_recip(aq_s1, n, w) * poch_recip(aq_s2, n, w);
    });
  });
  return out;
}

WPFamily wp_lemma_first_family(const WPFamily& family, const Monomial& rho1, const Monomial& rho2) {
  WPFamily f;
  f.a = family.a;
  f.m = family.m;
  f.label = "wp_first(" + family.label + ", " + rho1.to_string() + ", " + rho2.to_string() + ")";
  f.make = [family, rho1, rho2](const Monomial& alpha) {
    return wp_lemma_first(family, rho1, rho2, alpha);
  };
  return f;
}

WPBaileyPair wp_lemma_second(const WPFamily& family, const Monomial& alpha) {
  if (!alpha.is_finite_nonzero()) throw DegenerateParameter("the second WP lemma needs alpha != 0");
  const Monomial a = family.a;
  const Monomial c2 = kQ * a * a / alpha;
  const Monomial kappa = alpha * alpha / (kQ * a * a);
  WPBaileyPair in = family(c2);

  WPBaileyPair out;
  out.a = a;
  out.m = family.m;
  out.alpha_param = alpha;
  out.alpha_lo = in.alpha_lo;
  out.beta_lo = in.beta_lo;
  out.label = "wp_second(" + in.label + ")";
  out.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      return poch(c2, 2 * n, w) * poch_recip(alpha, 2 * n, w) * kappa.pow(n).to_series() *
             in.alpha(n, w);
    });
  });
  out.beta = SeriesSequence([=](long n, long order) {
    if (n < in.beta_lo) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long j = in.beta_lo; j <= n; ++j) {
        TSeries bj = in.beta(j, w);
        if (bj.is_zero() && bj.is_exact()) continue;
        sum += poch(kappa, n - j, w) * poch_recip(kQ, n - j, w) * kappa.pow(j).to_series() * bj;
      }
      return sum;
    });
  });
  return out;
}

WPFamily wp_lemma_second_family(const WPFamily& family) {
  WPFamily f;
  f.a = family.a;
  f.m = family.m;
  f.label = "wp_second(" + family.label + ")";
  f.make = [family](const Monomial& alpha) { return wp_lemma_second(family, alpha); };
  return f;
}

namespace {

// alpha_n recovered from beta through the inverse WP relation. For a = q^m the a-dependent
// factors are taken in the limit a -> q^m; returns nullopt when that limit has a pole.
std::optional<TSeries> inverse_alpha(const WPBaileyPair& p, long n, long order) {
  const Monomial& alpha = p.alpha_param;
  const Monomial a_over_alpha = p.a / alpha;
  const Monomial alpha_over_a = alpha / p.a;
  const Monomial alpha_q = alpha * kQ;
  bool singular = false;
  TSeries value = to_order(order, [&](long w) {
    TSeries sum = TSeries::zero(kExactOrder);
    singular = false;
    for (long r = p.beta_lo; r <= n; ++r) {
      TSeries br = p.beta(r, w);
      if (br.is_zero() && br.is_exact()) continue;
      TSeries rest = poch_recip(kQ, n - r, w) * poch(a_over_alpha, n - r, w) *
                     poch_recip(alpha_q, n + r, w) * one_minus(alpha * Monomial::q_power(2 * r)) *
                     one_minus_recip(alpha, w) * alpha_over_a.pow(n - r).to_series() * br;
      if (!p.m) {
        sum += poch(p.a, n + r, w) * rest;
        continue;
      }
      long m = *p.m;
      Regularized pa = regularized_poch(m, n + r, w);
      long zeros = pa.zero_order;
      TSeries factor = pa.value;
      if (m + 2 * n == 0) {
        ++zeros;
      } else {
        factor = factor * one_minus(Monomial::q_power(m + 2 * n));
      }
      if (m == 0) {
        --zeros;
      } else {
        factor = factor * one_minus_recip(Monomial::q_power(m), w);
      }
      if (zeros > 0) continue;
      if (zeros < 0) {
        singular = true;
        return TSeries::zero(w);
      }
      sum += factor * rest;
    }
    if (!p.m) sum = sum * one_minus(p.a * Monomial::q_power(2 * n)) * one_minus_recip(p.a, w);
    return sum.is_exact() ? sum.truncated(w) : sum;
  });
  if (singular) return std::nullopt;
  return value;
}

}  // namespace

RelationCheck wp_inversion_check(const WPBaileyPair& p, long n_lo, long n_hi, long order) {
  RelationCheck report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.order = order;
  if (is_one(p.alpha_param) || p.alpha_param.is_zero()) {
    throw DegenerateParameter("the inverse WP relation needs alpha not in {0, 1}");
  }
  if (!p.m) {
    for (long n = n_lo; n <= n_hi && report.pass; ++n) {
      auto recovered = inverse_alpha(p, n, order);
      if (!recovered) {
        report.singular.push_back(n);
        continue;
      }
      compare_into(report, n, p.alpha(n, order), *recovered, order);
    }
    return report;
  }
  // a = q^m: the forward relation pairs alpha_r with alpha_{-m-r} and is not injective, so
  // the recovered sequence is checked to be a preimage of beta.
  WPBaileyPair recovered = p;
  recovered.alpha = SeriesSequence([p](long n, long order) {
    if (n < p.beta_lo) return TSeries::zero(kExactOrder);
    auto value = inverse_alpha(p, n, order);
    if (!value) {
      throw ZeroSeriesInversion("inverse WP kernel has a pole at n = " + std::to_string(n));
    }
    return *value;
  });
  for (long n = n_lo; n <= n_hi; ++n) {
    auto value = inverse_alpha(p, n, order);
    if (!value) {
      report.singular.push_back(n);
    } else if (first_difference(*value, p.alpha(n, order), order)) {
      report.non_unique.push_back(n);
    }
  }
  if (!report.singular.empty()) {
    report.pass = false;
    return report;
  }
  RelationCheck forward = check_wp_pair(recovered, n_lo, n_hi, order);
  forward.non_unique = report.non_unique;
  return forward;
}

}  // namespace baileykit
