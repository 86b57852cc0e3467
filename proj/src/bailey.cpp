#include "baileykit/bailey.hpp"

#include <sstream>
#include <stdexcept>

#include "baileykit/errors.hpp"
#include "baileykit/qfunctions.hpp"

namespace baileykit {

TSeries to_order(long order, const std::function<TSeries(long)>& f) {
  long working = order;
  TSeries result;
  for (int attempt = 0; attempt < 10; ++attempt) {
    result = f(working);
    if (result.order() >= order) {
      return result.is_exact() ? result : result.truncated(order);
    }
    working += (order - result.order()) + 2;
  }
  throw std::runtime_error("could not reach truncation order " + std::to_string(order) +
                           " (best " + std::to_string(result.order()) + ")");
}

SeriesSequence::SeriesSequence(Generator gen) : state_(std::make_shared<State>()) {
  state_->gen = std::move(gen);
}

TSeries SeriesSequence::operator()(long n, long order) const {
  if (!state_) throw std::logic_error("empty sequence");
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(n);
    if (it != state_->cache.end() && it->second.order() >= order) return it->second;
  }
  TSeries value = state_->gen(n, order);
  if (value.order() < order) {
    throw std::logic_error("sequence generator returned order " + std::to_string(value.order()) +
                           " < requested " + std::to_string(order));
  }
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto [it, inserted] = state_->cache.emplace(n, value);
  if (!inserted && it->second.order() < value.order()) it->second = value;
  return value;
}

std::string RelationCheck::to_string() const {
  std::ostringstream os;
  os << (pass ? "pass" : "FAIL") << " n in [" << n_lo << ", " << n_hi << "] to t^" << order;
  if (!pass && first_bad_n) {
    os << ": first mismatch at n = " << *first_bad_n;
    if (first_bad_texp) {
      os << ", t^" << *first_bad_texp << " (expected " << expected.get_str() << ", got "
         << actual.get_str() << ")";
    }
  }
  if (!singular.empty()) {
    os << "; singular at n =";
    for (long n : singular) os << ' ' << n;
  }
  if (!non_unique.empty()) {
    os << "; other preimage at n =";
    for (long n : non_unique) os << ' ' << n;
  }
  return os.str();
}

namespace {

Monomial base_power(long e, int base_texp, const Rational& c = 1) {
  return Monomial(c, e * base_texp);
}

long binom2(long n) { return n * (n - 1) / 2; }

TSeries sign_monomial(long n, long texp) {
  return TSeries::monomial(n % 2 == 0 ? 1 : -1, texp);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// 1 / poch_scaled(x, s, k).
TSeries poch_scaled_recip(const Monomial& x, const Monomial& s, long k, long order, int base) {
  if (k == 0) return TSeries::constant(1);
  if (s.is_zero()) {
    Monomial lead = (-x).pow(k);
    if (lead.is_zero()) throw ZeroSeriesInversion("reciprocal of a vanishing scaled Pochhammer");
    return TSeries::monomial(1 / lead.coeff(), -(lead.texp() + base * binom2(k)));
  }
  Monomial sk = s.pow(k);
  long inner = add_order(order, sk.texp());
  return TSeries::monomial(1 / sk.coeff(), -sk.texp()) * poch_recip(x / s, k, inner, base);
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

}  // namespace

BaileyPair shifted_pair(long m, int base_texp) {
  if (m < 0) throw UnsupportedShift("shifted pairs need m >= 0");
  BaileyPair p;
  p.m = m;
  p.base_texp = base_texp;
  p.beta_lo = -(m / 2);
  p.label = "shifted(" + std::to_string(m) + ")";
  const int b = base_texp;
  p.alpha = SeriesSequence([b](long n, long) { return sign_monomial(n, b * binom2(n)); });
  TSeries prefix = poch(base_power(1, b), m, kExactOrder, b);
  p.beta = SeriesSequence([b, m, prefix](long n, long) {
    if (2 * n + m < 0 || n > 0) return TSeries::zero(kExactOrder);
    return prefix * sign_monomial(n, b * binom2(n)) * qbinom(m + n, m + 2 * n, b);
  });
  return p;
}

BaileyPair unit_pair(long m) {
  if (m != 0 && m != 1) {
    throw UnsupportedShift("the unit pair is defined here for a = 1 and a = q only (m in {0, 1})");
  }
  BaileyPair p = shifted_pair(m);
  p.label = "unit(" + std::to_string(m) + ")";
  return p;
}

RelationCheck check_pair(const BaileyPair& p, long n_lo, long n_hi, long order) {
  RelationCheck report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.order = order;
  const int b = p.base_texp;
  Monomial base = base_power(1, b);
  Monomial aq = base_power(p.m + 1, b);
  for (long n = n_lo; n <= n_hi && report.pass; ++n) {
    TSeries expected = p.beta(n, order);
    TSeries actual = to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long r = -p.m - n; r <= n; ++r) {
        TSeries a = p.alpha(r, w);
        if (a.is_zero() && a.is_exact()) continue;
        sum += a * poch_recip(base, n - r, w, b) * poch_recip(aq, n + r, w, b);
      }
      return sum.is_exact() ? sum.truncated(w) : sum;
    });
    compare_into(report, n, expected, actual, order);
  }
  return report;
}

BaileyPair apply_lemma(const BaileyPair& p, const Monomial& rho1, const Monomial& rho2) {
  if (rho1.is_zero() || rho2.is_zero()) throw DegenerateParameter("rho parameters must be nonzero");
  const int b = p.base_texp;
  const Monomial s1 = rho1.reciprocal();
  const Monomial s2 = rho2.reciprocal();
  const Monomial one = Monomial::constant(1);
  const Monomial base = base_power(1, b);
  const Monomial aq = base_power(p.m + 1, b);
  const Monomial aq_s1 = aq * s1;
  const Monomial aq_s2 = aq * s2;
  const Monomial aq_s12 = aq * s1 * s2;

  BaileyPair out;
  out.m = p.m;
  out.base_texp = b;
  out.beta_lo = p.beta_lo;
  out.label = "lemma(" + p.label + ", " + rho1.to_string() + ", " + rho2.to_string() + ")";
  BaileyPair in = p;
  out.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      return poch_scaled(one, s1, n, w, b) * poch_scaled(one, s2, n, w, b) *
             aq.pow(n).to_series() * poch_recip(aq_s1, n, w, b) * poch_recip(aq_s2, n, w, b) *
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
        sum += poch_scaled(one, s1, j, w, b) * poch_scaled(one, s2, j, w, b) *
               aq.pow(j).to_series() * poch(aq_s12, n - j, w, b) *
               poch_recip(base, n - j, w, b) * bj;
      }
      return sum * poch_recip(aq_s1, n, w, b) * poch_recip(aq_s2, n, w, b);
    });
  });
  return out;
}

BaileyPair apply_s1(const BaileyPair& p) {
  const int b = p.base_texp;
  const long m = p.m;
  const Monomial base = base_power(1, b);
  BaileyPair out;
  out.m = m;
  out.base_texp = b;
  out.beta_lo = p.beta_lo;
  out.label = "s1(" + p.label + ")";
  BaileyPair in = p;
  out.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      return TSeries::monomial(1, b * (n * n + m * n)) * in.alpha(n, w - b * (n * n + m * n));
    });
  });
  out.beta = SeriesSequence([=](long n, long order) {
    if (n < in.beta_lo) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long j = in.beta_lo; j <= n; ++j) {
        long e = b * (j * j + m * j);
        TSeries bj = in.beta(j, w - e);
        if (bj.is_zero() && bj.is_exact()) continue;
        sum += TSeries::monomial(1, e) * poch_recip(base, n - j, w - e, b) * bj;
      }
      return sum;
    });
  });
  return out;
}

BaileyPair apply_s2(const BaileyPair& p) {
  const int b = p.base_texp;
  const long m = p.m;
  if ((b * (m + 1)) % 2 != 0) {
    throw UnsupportedShift("sqrt(aq) is not on the t-grid for this base and shift");
  }
  const Monomial base = base_power(1, b);
  const Monomial neg_sqrt_aq(-1, b * (m + 1) / 2);
  BaileyPair out;
  out.m = m;
  out.base_texp = b;
  out.beta_lo = p.beta_lo;
  out.label = "s2(" + p.label + ")";
  BaileyPair in = p;
  auto quad = [b, m](long n) -> long {
    long v = b * (n * n + m * n);
    if (v % 2 != 0) throw UnsupportedShift("half-grid exponent in apply_s2");
    return v / 2;
  };
  out.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      long e = quad(n);
      return TSeries::monomial(1, e) * in.alpha(n, w - e);
    });
  });
  out.beta = SeriesSequence([=](long n, long order) {
    if (n < in.beta_lo) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long j = in.beta_lo; j <= n; ++j) {
        long e = quad(j);
        TSeries bj = in.beta(j, w - e);
        if (bj.is_zero() && bj.is_exact()) continue;
        sum += TSeries::monomial(1, e) * poch_recip(base, n - j, w - e, b) *
               poch(neg_sqrt_aq, j, w, b) * bj;
      }
      return sum * poch_recip(neg_sqrt_aq, n, w, b);
    });
  });
  return out;
}

BaileyPair scale_pair_base(const BaileyPair& p, int k) {
  if (k < 1) throw std::invalid_argument("base scaling factor must be positive");
  BaileyPair out;
  out.m = p.m;
  out.base_texp = p.base_texp * k;
  out.beta_lo = p.beta_lo;
  out.label = "scale" + std::to_string(k) + "(" + p.label + ")";
  BaileyPair in = p;
  auto scale = [k](const SeriesSequence& seq) {
    return SeriesSequence([seq, k](long n, long order) {
      return series_scale_base(seq(n, floor_div(order, k)), k);
    });
  };
  out.alpha = scale(in.alpha);
  out.beta = scale(in.beta);
  return out;
}

BaileyPair change_base(const BaileyPair& p, const Monomial& bparam) {
  if (p.base_texp % 2 != 0) {
    throw std::invalid_argument("change_base needs a pair related to (a^2, q^2)");
  }
  if (bparam.is_zero()) throw DegenerateParameter("change of base needs b != 0");
  const int ob = p.base_texp / 2;
  const long m = p.m;
  const Monomial sigma = bparam.reciprocal();
  const Monomial sigma2 = sigma * sigma;
  const Monomial one = Monomial::constant(1);
  const Monomial base = base_power(1, ob);
  const Monomial base2 = base_power(1, 2 * ob);
  const Monomial neg_aq = base_power(m + 1, ob, -1);
  const Monomial neg_aq_sigma = neg_aq * sigma;

  BaileyPair out;
  out.m = m;
  out.base_texp = ob;
  out.beta_lo = p.beta_lo;
  out.label = "change_base(" + p.label + ", " + bparam.to_string() + ")";
  BaileyPair in = p;
  out.alpha = SeriesSequence([=](long n, long order) {
    return to_order(order, [&](long w) {
      return poch_scaled(-one, sigma, n, w, ob) * poch_recip(neg_aq_sigma, n, w, ob) *
             TSeries::monomial(1, -ob * binom2(n)) * in.alpha(n, w + ob * binom2(n));
    });
  });
  out.beta = SeriesSequence([=](long n, long order) {
    if (n < in.beta_lo) return TSeries::zero(kExactOrder);
    return to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long k = in.beta_lo; k <= n; ++k) {
        TSeries bk = in.beta(k, w + ob * binom2(k));
        if (bk.is_zero() && bk.is_exact()) continue;
        sum += poch(neg_aq, 2 * k, w, ob) * poch_scaled(one, sigma2, k, w, 2 * ob) *
               poch(base_power(-k, ob) * sigma, n - k, w, ob) *
               poch_scaled(base_power(k + 1, ob), sigma, n - k, w, ob) *
               poch_recip(base2, n - k, w, 2 * ob) * TSeries::monomial(1, -ob * binom2(k)) * bk;
      }
      return sum * poch_scaled_recip(one, sigma, n, w, ob) * poch_recip(neg_aq_sigma, n, w, ob);
    });
  });
  return out;
}

RelationCheck classical_inversion_check(const SeriesSequence& a_seq, const SeriesSequence& b_seq,
                                        long m_max, long order) {
  RelationCheck report;
  report.n_lo = 0;
  report.n_hi = m_max;
  report.order = order;
  const Monomial q = Monomial::q_power(1);
  const Monomial q2 = Monomial::q_power(2);
  for (long mm = 0; mm <= m_max && report.pass; ++mm) {
    TSeries b_expected = b_seq(mm, order);
    TSeries b_actual = to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long j = 0; j <= mm; ++j) {
        sum += a_seq(j, w) * poch_recip(q, mm - j, w) * poch_recip(q2, mm + j, w);
      }
      return sum;
    });
    compare_into(report, mm, b_expected, b_actual, order);
    if (!report.pass) break;
    TSeries a_expected = a_seq(mm, order);
    TSeries a_actual = to_order(order, [&](long w) {
      TSeries sum = TSeries::zero(kExactOrder);
      for (long j = 0; j <= mm; ++j) {
        sum += sign_monomial(mm - j, 2 * binom2(mm - j)) * poch(q, mm + j, w) *
               poch_recip(q, mm - j, w) * b_seq(j, w);
      }
      return sum * (TSeries::constant(1) - TSeries::monomial(1, 2 * (2 * mm + 1))) *
             poch_recip(q, 1, w);
    });
    compare_into(report, mm, a_expected, a_actual, order);
  }
  return report;
}

}  // namespace baileykit
