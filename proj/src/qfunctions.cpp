#include "baileykit/qfunctions.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "baileykit/errors.hpp"

namespace baileykit {

namespace {

void require_finite(const Monomial& a, const char* what) {
  if (a.is_infinite()) throw std::domain_error(std::string(what) + ": INFINITY is not a series value");
}

// prod_{j=0}^{count-1} (1 - c t^{e0 + step*j}), exact when order == kExactOrder.
TSeries binomial_product(const Rational& c, long e0, long step, long count, long order) {
  if (c == 0 || count <= 0) return TSeries::constant(1);
  long negative = 0;
  while (negative < count && e0 + step * negative <= 0) ++negative;
  TSeries prefix = TSeries::constant(1);
  for (long j = 0; j < negative; ++j) prefix = prefix.mul_binomial(c, e0 + step * j);
  if (negative == count) return order >= kExactOrder ? prefix : prefix.truncated(order);
  if (prefix.is_zero()) return prefix;
  long inner_order = order >= kExactOrder ? kExactOrder : order - prefix.valuation();
  TSeries rest = TSeries::constant(1, inner_order);
  for (long j = negative; j < count; ++j) {
    long e = e0 + step * j;
    if (!rest.is_exact() && e > rest.order() - rest.valuation()) break;
    rest = rest.mul_binomial(c, e);
  }
  return prefix * rest;
}

// 1 / prod_{j=0}^{count-1} (1 - c t^{e0 + step*j}), known to at least `order`.
TSeries binomial_product_recip(const Rational& c, long e0, long step, long count, long order) {
  if (c == 0 || count <= 0) return TSeries::constant(1);
  if (order >= kExactOrder) {
    // Only reciprocals of products of monomial-like factors are exact.
    throw std::invalid_argument("reciprocal Pochhammer product needs a truncation order");
  }
  TSeries s = TSeries::constant(1, order);
  for (long j = 0; j < count; ++j) {
    long e = e0 + step * j;
    if (e > 0 && e > s.order() - s.valuation()) break;
    s = s.div_binomial(c, e);
  }
  return s;
}

}  // namespace

TSeries poch(const Monomial& a, long k, long order, int base_texp) {
  require_finite(a, "poch");
  if (base_texp < 1) throw std::invalid_argument("base_texp must be positive");
  if (a.is_zero() || k == 0) return TSeries::constant(1);
  if (k > 0) return binomial_product(a.coeff(), a.texp(), base_texp, k, order);
  return binomial_product_recip(a.coeff(), a.texp() + base_texp * k, base_texp, -k, order);
}

TSeries poch(const PochhammerArg& arg, long k, long order) {
  if (const auto* m = std::get_if<Monomial>(&arg.value)) return poch(*m, k, order, arg.base_texp);
  const TSeries& a = std::get<TSeries>(arg.value);
  if (k == 0) return TSeries::constant(1);
  long lo = k > 0 ? 0 : k;
  long hi = k > 0 ? k - 1 : -1;
  long work = order >= kExactOrder ? kExactOrder : order;
  TSeries prod = TSeries::constant(1, work);
  for (long j = lo; j <= hi; ++j) {
    prod = prod * (TSeries::constant(1) - a.shifted(arg.base_texp * j));
  }
  if (k > 0) return prod;
  if (work >= kExactOrder) work = 0;
  return series_inv(prod, std::max(order, work));
}

TSeries poch_recip(const Monomial& a, long k, long order, int base_texp) {
  require_finite(a, "poch_recip");
  if (a.is_zero() || k == 0) return TSeries::constant(1);
  if (k > 0) return binomial_product_recip(a.coeff(), a.texp(), base_texp, k, order);
  return binomial_product(a.coeff(), a.texp() + base_texp * k, base_texp, -k, order);
}

TSeries poch_scaled(const Monomial& x, const Monomial& s, long k, long order, int base_texp) {
  require_finite(x, "poch_scaled");
  require_finite(s, "poch_scaled");
  if (k == 0) return TSeries::constant(1);
  if (s.is_zero()) {
    if (x.is_zero()) {
      if (k < 0) throw ZeroSeriesInversion("scaled Pochhammer (0/0)_k with k < 0");
      return TSeries::zero(kExactOrder);
    }
    Monomial lead = (-x).pow(k);
    return TSeries::monomial(lead.coeff(), lead.texp() + base_texp * (k * (k - 1) / 2));
  }
  Monomial sk = s.pow(k);
  long inner = order >= kExactOrder ? kExactOrder : order - sk.texp();
  return sk.to_series() * poch(x / s, k, inner, base_texp);
}

TSeries poch_inf(const Monomial& a, long order, int base_texp) {
  require_finite(a, "poch_inf");
  if (a.is_zero()) return TSeries::constant(1);
  if (a.texp() <= 0) {
    throw FormalDivergence("(a;q)_inf needs val(a) >= 1, got a = " + a.to_string());
  }
  if (order >= kExactOrder) throw std::invalid_argument("infinite product needs a truncation order");
  TSeries s = TSeries::constant(1, order);
  for (long e = a.texp(); e <= order; e += base_texp) s = s.mul_binomial(a.coeff(), e);
  return s;
}

TSeries poch_inf(const PochhammerArg& arg, long order) {
  if (const auto* m = std::get_if<Monomial>(&arg.value)) return poch_inf(*m, order, arg.base_texp);
  const TSeries& a = std::get<TSeries>(arg.value);
  if (a.is_zero()) return TSeries::constant(1);
  if (a.valuation() <= 0) throw FormalDivergence("(a;q)_inf needs val(a) >= 1");
  TSeries s = TSeries::constant(1, order);
  for (long j = 0; a.valuation() + arg.base_texp * j <= order; ++j) {
    s = s * (TSeries::constant(1) - a.shifted(arg.base_texp * j));
  }
  return s;
}

TSeries poch_inf_laurent(const Monomial& a, long order, int base_texp) {
  require_finite(a, "poch_inf_laurent");
  if (a.is_zero()) return TSeries::constant(1);
  long prefix_count = a.texp() <= 0 ? (-a.texp()) / base_texp + 1 : 0;
  TSeries prefix = binomial_product(a.coeff(), a.texp(), base_texp, prefix_count, kExactOrder);
  if (prefix.is_zero()) return prefix;
  Monomial tail(a.coeff(), a.texp() + base_texp * prefix_count);
  return prefix * poch_inf(tail, order - prefix.valuation(), base_texp);
}

TSeries poch_inf_recip_laurent(const Monomial& a, long order, int base_texp) {
  require_finite(a, "poch_inf_recip_laurent");
  if (a.is_zero()) return TSeries::constant(1);
  if (order >= kExactOrder) throw std::invalid_argument("infinite product needs a truncation order");
  TSeries s = TSeries::constant(1, order);
  for (long e = a.texp();; e += base_texp) {
    if (e > 0 && e > s.order() - s.valuation()) break;
    s = s.div_binomial(a.coeff(), e);
  }
  return s;
}

TSeries poch_multi(const std::vector<PochhammerArg>& args, std::optional<long> k, long order) {
  TSeries prod = TSeries::constant(1);
  for (const auto& arg : args) {
    prod = prod * (k ? poch(arg, *k, order) : poch_inf(arg, order));
  }
  return prod;
}

TSeries qbinom(long n, long k, int base_texp) {
  if (k < 0 || k > n) return TSeries::zero(kExactOrder);
  k = std::min(k, n - k);
  if (k == 0) return TSeries::constant(1);
  thread_local std::map<std::tuple<long, long, int>, TSeries> cache;
  auto key = std::make_tuple(n, k, base_texp);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  long degree = k * (n - k) * base_texp;
  TSeries num = binomial_product(1, base_texp * (n - k + 1), base_texp, k, kExactOrder).truncated(degree);
  for (long i = 1; i <= k; ++i) num = num.div_binomial(1, base_texp * i);
  TSeries exact = TSeries::from_coeffs(num.min_exp(), num.coeffs(), kExactOrder);
  if (cache.size() < 20000) cache.emplace(key, exact);
  return exact;
}

TSeries triple_product(const Monomial& z, int modulus_texp, long order) {
  require_finite(z, "triple_product");
  if (z.is_zero() || z.texp() <= 0 || z.texp() >= modulus_texp) {
    throw FormalDivergence("triple product needs 0 < val(z) < modulus, got z = " + z.to_string());
  }
  Monomial base(1, modulus_texp);
  return poch_inf(base, order, modulus_texp) * poch_inf(z, order, modulus_texp) *
         poch_inf(base / z, order, modulus_texp);
}

SumWindow SumWindow::scaled(long factor) const {
  SumWindow w = *this;
  if (lo < 0) w.lo = lo * factor;
  w.hi = lo >= 0 ? lo + (hi - lo + 1) * factor - 1 : hi * factor + (factor - 1);
  return w;
}

namespace {

class StopRule {
 public:
  StopRule(long order, int cap) : order_(order), cap_(cap) {}

  // Records a term and reports whether the run of over-order terms is long enough.
  bool record(const TSeries& term) {
    long v = term.is_zero() ? kExactOrder : term.valuation();
    recent_.push_back(v);
    if (static_cast<int>(recent_.size()) > cap_) recent_.pop_front();
    if (static_cast<int>(recent_.size()) < cap_) return false;
    for (std::size_t i = 0; i < recent_.size(); ++i) {
      if (recent_[i] <= order_) return false;
      if (i > 0 && recent_[i] < recent_[i - 1]) return false;
    }
    return true;
  }

 private:
  long order_;
  int cap_;
  std::deque<long> recent_;
};

// Sums term(start), term(start+dir), ... covering at least `count` terms.
void sum_direction(const TermFn& term, long start, long dir, long count, const SumWindow& w,
                   long order, std::vector<TSeries>& collected, long& last_index) {
  StopRule rule(order, w.stall_cap);
  long chunk = std::max<long>(count, 8);
  long limit = count + (w.adaptive ? 4L * w.stall_cap * chunk : 0);
  bool fired = false;
  long i = 0;
  for (; i < limit; ++i) {
    long n = start + dir * i;
    TSeries t = term(n);
    fired = rule.record(t);
    collected.push_back(std::move(t));
    last_index = n;
    if (i + 1 >= count && (!w.adaptive || fired)) break;
  }
  if (w.adaptive && !fired) {
    throw FormalDivergence("summation window did not stabilise after " + std::to_string(limit) +
                           " terms starting at n = " + std::to_string(start));
  }
}

TSeries accumulate(std::vector<TSeries>& terms, long order, bool reverse) {
  TSeries total = TSeries::zero(order);
  if (reverse) {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) total += *it;
  } else {
    for (const auto& t : terms) total += t;
  }
  return total;
}

}  // namespace

TSeries sum_unilateral(const TermFn& term, const SumWindow& window, long order, SumStats* stats,
                       bool reverse) {
  if (window.hi < window.lo) throw std::invalid_argument("summation window has hi < lo");
  std::vector<TSeries> terms;
  long last = window.lo;
  sum_direction(term, window.lo, 1, window.hi - window.lo + 1, window, order, terms, last);
  if (stats) {
    stats->terms += static_cast<long>(terms.size());
    stats->lo_used = window.lo;
    stats->hi_used = last;
  }
  return accumulate(terms, order, reverse);
}

TSeries sum_bilateral(const TermFn& term, const SumWindow& window, long order, SumStats* stats,
                      bool reverse) {
  if (window.hi < 0 || window.lo > -1) {
    throw std::invalid_argument("bilateral window must straddle 0 (lo <= -1, hi >= 0)");
  }
  std::vector<TSeries> terms;
  long hi_used = 0;
  long lo_used = -1;
  sum_direction(term, 0, 1, window.hi + 1, window, order, terms, hi_used);
  sum_direction(term, -1, -1, -window.lo, window, order, terms, lo_used);
  if (stats) {
    stats->terms += static_cast<long>(terms.size());
    stats->lo_used = lo_used;
    stats->hi_used = hi_used;
  }
  return accumulate(terms, order, reverse);
}

}  // namespace baileykit
