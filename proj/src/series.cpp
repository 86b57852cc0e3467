#include "baileykit/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "baileykit/errors.hpp"

namespace baileykit {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

long add_order(long a, long b) {
  if (a >= kExactOrder || b >= kExactOrder) return kExactOrder;
  long s = a + b;
  return std::min(s, kExactOrder);
}

TSeries TSeries::zero(long order) {
  TSeries s;
  s.order_ = std::min(order, kExactOrder);
  return s;
}

TSeries TSeries::constant(const Rational& c, long order) { return monomial(c, 0, order); }

TSeries TSeries::monomial(const Rational& c, long texp, long order) {
  TSeries s;
  s.order_ = std::min(order, kExactOrder);
  if (c != 0 && texp <= s.order_) {
    s.min_exp_ = texp;
    s.coeffs_.push_back(c);
  }
  return s;
}

TSeries TSeries::from_coeffs(long min_exp, std::vector<Rational> coeffs, long order) {
  TSeries s;
  s.min_exp_ = min_exp;
  s.coeffs_ = std::move(coeffs);
  s.order_ = std::min(order, kExactOrder);
  s.normalize();
  return s;
}

void TSeries::normalize() {
  if (!coeffs_.empty() && order_ < kExactOrder) {
    long keep = order_ - min_exp_ + 1;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

long TSeries::valuation() const {
  if (coeffs_.empty()) return add_order(order_, 1);
  return min_exp_;
}

long TSeries::max_exp() const {
  if (coeffs_.empty()) return valuation() - 1;
  return min_exp_ + static_cast<long>(coeffs_.size()) - 1;
}

Rational TSeries::coeff(long e) const {
  if (e > order_) {
    throw std::out_of_range("coefficient of t^" + std::to_string(e) + " lies above order " +
                            std::to_string(order_));
  }
  if (coeffs_.empty() || e < min_exp_ || e > max_exp()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

bool TSeries::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

TSeries TSeries::truncated(long order) const {
  if (order >= order_) return *this;
  TSeries s = *this;
  s.order_ = order;
  s.normalize();
  return s;
}

TSeries TSeries::shifted(long e) const {
  TSeries s = *this;
  s.order_ = add_order(order_, e);
  if (!s.coeffs_.empty()) s.min_exp_ += e;
  return s;
}

TSeries TSeries::scaled(const Rational& c) const {
  if (c == 0) return zero(order_);
  TSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

TSeries TSeries::mul_binomial(const Rational& c, long e) const {
  if (c == 0) return *this;
  TSeries s = *this;
  s -= shifted(e).scaled(c);
  return s;
}

TSeries TSeries::div_binomial(const Rational& c, long e) const {
  if (c == 0) return *this;
  if (e == 0) {
    if (c == 1) throw ZeroSeriesInversion("division by the zero factor (1 - 1)");
    Rational inv = 1 / (1 - c);
    return scaled(inv);
  }
  if (e < 0) {
    // 1 - c t^e = -c t^e (1 - t^{-e}/c)
    Rational ic = 1 / c;
    return shifted(-e).scaled(-ic).div_binomial(ic, -e);
  }
  if (coeffs_.empty()) return *this;
  if (is_exact()) {
    throw std::invalid_argument("division of an exact polynomial by a binomial needs a truncation order");
  }
  TSeries s;
  s.order_ = order_;
  s.min_exp_ = min_exp_;
  long n = order_ - min_exp_ + 1;
  s.coeffs_.assign(static_cast<std::size_t>(n), Rational(0));
  for (long k = 0; k < n; ++k) {
    Rational& g = s.coeffs_[static_cast<std::size_t>(k)];
    if (k < static_cast<long>(coeffs_.size())) g = coeffs_[static_cast<std::size_t>(k)];
    if (k >= e) {
      const Rational& prev = s.coeffs_[static_cast<std::size_t>(k - e)];
      if (prev != 0) g += c * prev;
    }
  }
  s.normalize();
  return s;
}

TSeries TSeries::operator-() const { return scaled(Rational(-1)); }

TSeries& TSeries::operator+=(const TSeries& g) {
  long order = std::min(order_, g.order_);
  if (g.coeffs_.empty()) {
    order_ = order;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    coeffs_ = g.coeffs_;
    min_exp_ = g.min_exp_;
    order_ = order;
    normalize();
    return *this;
  }
  long lo = std::min(min_exp_, g.min_exp_);
  long hi = std::max(max_exp(), g.max_exp());
  if (order < kExactOrder) hi = std::min(hi, order);
  if (hi < lo) {
    coeffs_.clear();
    order_ = order;
    return *this;
  }
  if (lo < min_exp_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Rational(0));
    min_exp_ = lo;
  }
  if (static_cast<long>(coeffs_.size()) < hi - lo + 1) {
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  }
  for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
    long e = g.min_exp_ + static_cast<long>(j);
    if (e > hi) break;
    if (g.coeffs_[j] != 0) coeffs_[static_cast<std::size_t>(e - lo)] += g.coeffs_[j];
  }
  order_ = order;
  normalize();
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& g) { return *this += -g; }

namespace {

// Integer numerators over a common denominator, for fast convolution.
struct ScaledIntegers {
  std::vector<Integer> nums;
  Integer den;
};

ScaledIntegers to_common_denominator(const std::vector<Rational>& cs, std::size_t count) {
  ScaledIntegers out;
  out.den = 1;
  for (std::size_t i = 0; i < count; ++i) {
    const Integer& d = cs[i].get_den();
    if (d != 1) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), d.get_mpz_t());
  }
  out.nums.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (cs[i] == 0) continue;
    if (out.den == 1) {
      out.nums[i] = cs[i].get_num();
    } else {
      Integer factor = out.den / cs[i].get_den();
      out.nums[i] = cs[i].get_num() * factor;
    }
  }
  return out;
}

}  // namespace

TSeries& TSeries::operator*=(const TSeries& g) {
  *this = *this * g;
  return *this;
}

TSeries operator+(TSeries f, const TSeries& g) {
  f += g;
  return f;
}

TSeries operator-(TSeries f, const TSeries& g) {
  f -= g;
  return f;
}

TSeries operator*(const TSeries& f, const TSeries& g) {
  long order = std::min(add_order(f.order(), g.valuation()), add_order(g.order(), f.valuation()));
  if (f.is_zero() || g.is_zero()) return TSeries::zero(order);
  long base = f.min_exp() + g.min_exp();
  long top = f.max_exp() + g.max_exp();
  if (order < kExactOrder) top = std::min(top, order);
  if (top < base) return TSeries::zero(order);
  std::size_t n = static_cast<std::size_t>(top - base + 1);
  std::size_t nf = std::min(f.coeffs().size(), n);
  std::size_t ng = std::min(g.coeffs().size(), n);

  ScaledIntegers a = to_common_denominator(f.coeffs(), nf);
  ScaledIntegers b = to_common_denominator(g.coeffs(), ng);
  std::vector<Integer> acc(n);
  for (std::size_t i = 0; i < nf; ++i) {
    if (a.nums[i] == 0) continue;
    std::size_t jmax = std::min(ng, n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b.nums[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), a.nums[i].get_mpz_t(), b.nums[j].get_mpz_t());
    }
  }
  Integer den = a.den * b.den;
  std::vector<Rational> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (acc[k] == 0) continue;
    out[k] = Rational(acc[k], den);
    out[k].canonicalize();
  }
  return TSeries::from_coeffs(base, std::move(out), order);
}

TSeries series_add(const TSeries& f, const TSeries& g) { return f + g; }

TSeries series_mul(const TSeries& f, const TSeries& g) { return f * g; }

TSeries series_inv(const TSeries& f, long max_order) {
  if (f.is_zero()) throw ZeroSeriesInversion("inverse of a series with no nonzero known coefficient");
  long v = f.valuation();
  const auto& h = f.coeffs();
  if (h.size() == 1 && f.is_exact()) {
    return TSeries::monomial(1 / h[0], -v, max_order);
  }
  long order = std::min(add_order(f.order(), -2 * v), max_order);
  if (order >= kExactOrder) {
    throw std::invalid_argument("inverse of an exact non-monomial series needs a truncation order");
  }
  long n = order + v + 1;
  if (n <= 0) return TSeries::zero(order);
  std::vector<Rational> g(static_cast<std::size_t>(n));
  Rational inv0 = 1 / h[0];
  g[0] = inv0;
  Rational acc;
  for (long k = 1; k < n; ++k) {
    acc = 0;
    long jmax = std::min<long>(k, static_cast<long>(h.size()) - 1);
    for (long j = 1; j <= jmax; ++j) {
      const Rational& hj = h[static_cast<std::size_t>(j)];
      const Rational& gk = g[static_cast<std::size_t>(k - j)];
      if (hj != 0 && gk != 0) acc += hj * gk;
    }
    g[static_cast<std::size_t>(k)] = -inv0 * acc;
  }
  return TSeries::from_coeffs(-v, std::move(g), order);
}

TSeries series_scale_base(const TSeries& f, long k, long target_order) {
  if (k <= 0) throw std::invalid_argument("base scaling factor must be positive");
  if (k == 1) return f.truncated(target_order);
  long order = f.is_exact() ? kExactOrder : f.order() * k + (k - 1);
  order = std::min(order, target_order);
  if (f.is_zero()) return TSeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>((f.max_exp() - f.min_exp()) * k + 1));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * static_cast<std::size_t>(k)] = f.coeffs()[i];
  return TSeries::from_coeffs(f.min_exp() * k, std::move(out), order);
}

std::optional<long> first_difference(const TSeries& f, const TSeries& g, long upto) {
  if (f.order() < upto || g.order() < upto) {
    throw std::invalid_argument("comparison range exceeds a series' known order");
  }
  long lo = std::min(f.valuation(), g.valuation());
  long hi = std::min(upto, std::max(f.max_exp(), g.max_exp()));
  for (long e = lo; e <= hi; ++e) {
    if (f.coeff(e) != g.coeff(e)) return e;
  }
  return std::nullopt;
}

std::string TSeries::to_string() const {
  std::ostringstream os;
  if (coeffs_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << coeffs_[i].get_str() << "*t^" << (min_exp_ + static_cast<long>(i));
    }
  }
  if (is_exact()) {
    os << " (exact)";
  } else {
    os << " + O(t^" << (order_ + 1) << ")";
  }
  return os.str();
}

}  // namespace baileykit
