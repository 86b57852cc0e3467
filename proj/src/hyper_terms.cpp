#include "baileykit/hyper_terms.hpp"

#include <utility>

#include "baileykit/errors.hpp"

namespace baileykit {

namespace {

// v * (s - y), with y = x base^j.
TSeries times_linear(const TSeries& v, const Monomial& s, const Monomial& y) {
  if (s.is_zero()) return v.shifted(y.texp()).scaled(-y.coeff());
  if (y == s) return TSeries();
  const Monomial r = y / s;
  return v.mul_binomial(r.coeff(), r.texp()).shifted(s.texp()).scaled(s.coeff());
}

// v / (s - y).
TSeries over_linear(const TSeries& v, const Monomial& s, const Monomial& y) {
  if (s.is_zero()) return v.shifted(-y.texp()).scaled(-1 / y.coeff());
  if (y == s) throw ZeroSeriesInversion("a denominator factor of the summand vanishes");
  const Monomial r = y / s;
  return v.div_binomial(r.coeff(), r.texp()).shifted(-s.texp()).scaled(1 / s.coeff());
}

Monomial power_term(const Monomial& x, int base_texp, long k) {
  return x * Monomial(1, base_texp * k);
}

}  // namespace

HyperTerms::HyperTerms(std::vector<PochFactor> factors, Monomial z, long order,
                       std::vector<LinearFactor> linear)
    : factors_(std::move(factors)), linear_(std::move(linear)), z_(std::move(z)), order_(order) {
  TSeries start = TSeries::constant(1, order);
  for (const auto& l : linear_) {
    const Monomial y = power_term(l.x, l.base_texp, 0);
    if (!(y == Monomial::constant(1))) start = times_linear(start, Monomial::constant(1), y);
  }
  cache_.emplace(0, start);
}

bool HyperTerms::linear_vanishes(long k) const {
  for (const auto& l : linear_) {
    if (power_term(l.x, l.base_texp, k) == Monomial::constant(1)) return true;
  }
  return false;
}

TSeries HyperTerms::step(const TSeries& v, long from, bool up) const {
  if (v.is_zero() && v.is_exact()) return v;
  TSeries out = v;
  for (const auto& f : factors_) {
    // Moving k -> k+1 brings in indices stride*k .. stride*k + stride-1; moving down removes
    // stride*(k-1) .. stride*k - 1.
    const long k0 = up ? f.stride * from : f.stride * (from - 1);
    for (long i = 0; i < f.stride; ++i) {
      const Monomial y = f.x * Monomial(1, f.base_texp * (k0 + i));
      const bool multiply = up != f.reciprocal;
      out = multiply ? times_linear(out, f.scale, y) : over_linear(out, f.scale, y);
      if (out.is_zero() && out.is_exact()) return out;
    }
  }
  const long to = up ? from + 1 : from - 1;
  for (const auto& l : linear_) {
    const Monomial one = Monomial::constant(1);
    const Monomial y0 = power_term(l.x, l.base_texp, from);
    const Monomial y1 = power_term(l.x, l.base_texp, to);
    if (!(y0 == one)) out = over_linear(out, one, y0);
    if (!(y1 == one)) out = times_linear(out, one, y1);
  }
  if (!z_.is_zero()) {
    out = up ? out.shifted(z_.texp()).scaled(z_.coeff())
             : out.shifted(-z_.texp()).scaled(1 / z_.coeff());
  } else if (up) {
    return TSeries();
  } else {
    throw ZeroSeriesInversion("negative powers of a zero argument");
  }
  return out.truncated(order_);
}

const TSeries& HyperTerms::operator()(long k) {
  if (linear_vanishes(k)) {
    // Still advance the running product so later summands remain reachable.
    if (!cache_.count(k)) (void)advance(k);
    return zero_;
  }
  return advance(k);
}

const TSeries& HyperTerms::advance(long k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  const bool up = k > 0;
  auto from = up ? std::prev(cache_.lower_bound(k)) : cache_.upper_bound(k);
  long cur = from->first;
  TSeries v = from->second;
  while (cur != k) {
    v = step(v, cur, up);
    cur += up ? 1 : -1;
    cache_.emplace(cur, v);
  }
  return cache_.at(k);
}

}  // namespace baileykit
