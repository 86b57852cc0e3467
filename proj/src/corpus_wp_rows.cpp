#include <algorithm>

#include "baileykit/hyper_terms.hpp"
#include "baileykit/specializations.hpp"
#include "corpus_support.hpp"

namespace baileykit {

namespace {

using rows::poch_ratio;
using rows::prod_inf;
using rows::prod_inf_recip;
using rows::qm;
using rows::side;
using rows::tm;
using rows::vwp_factor;

TSeries mono_pow(const Monomial& x, long k) {
  if (k == 0) return TSeries::constant(1);
  return x.pow(k).to_series();
}

// (x/s)_k s^k and its reciprocal; s may be zero.
TSeries ps(const Monomial& x, const Monomial& s, long k, long order) {
  return poch_scaled(x, s, k, order);
}

TSeries ps_recip(const Monomial& x, const Monomial& s, long k, long order) {
  if (s.is_zero()) return series_inv(poch_scaled(x, s, k, kExactOrder));
  return poch_recip(x / s, k, order) * mono_pow(s, -k);
}

// (big/alpha)_k (alpha/a)^k, including the alpha -> 0 limit (-big)^k q^{C(k,2)} a^{-k}.
TSeries big_factor(const Monomial& big, const Monomial& alpha, const Monomial& a, long k,
                   long order) {
  if (alpha.is_zero()) return poch_scaled(big, alpha, k, kExactOrder) * mono_pow(a, -k);
  return poch(big / alpha, k, order) * mono_pow(alpha / a, k);
}

void cancel_common(std::vector<Monomial>& num, std::vector<Monomial>& den) {
  for (auto it = num.begin(); it != num.end();) {
    auto jt = std::find(den.begin(), den.end(), *it);
    if (jt != den.end()) {
      den.erase(jt);
      it = num.erase(it);
    } else {
      ++it;
    }
  }
}

std::vector<Monomial> nonzero(std::vector<Monomial> xs) {
  xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Monomial& x) { return x.is_zero(); }),
           xs.end());
  return xs;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

std::vector<PochFactor> factors(const std::vector<Monomial>& num, const std::vector<Monomial>& den) {
  std::vector<PochFactor> out;
  for (const auto& x : num) out.push_back({x});
  for (const auto& y : den) out.push_back({y, true});
  return out;
}

// 1 - a q^{2k}; the constant 1/(1 - a) multiplies the finished sum.
std::vector<LinearFactor> vwp_top(const Monomial& a) {
  if (a.is_zero()) return {};
  return {LinearFactor{a, 4}};
}

TSeries vwp_bottom(const Monomial& a, long order) {
  return a.is_zero() ? TSeries::constant(1) : poch_recip(a, 1, order);
}

std::string mismatch_text(const TSeries& f, const TSeries& g, long order) {
  auto d = first_difference(f, g, order);
  if (!d) return "";
  return "first mismatch at t^" + std::to_string(*d) + ": " + to_string(f.coeff(*d)) + " vs " +
         to_string(g.coeff(*d));
}

TSeries r1psi1_lhs(const Monomial& b, const Monomial& c, const Monomial& z, long w, SumStats& st,
                   const BuildOptions& opt) {
  const long h = w / std::max<long>(1, z.valuation()) + 4;
  HyperTerms terms(factors({b}, {c}), z, w);
  return sum_bilateral([&](long k) { return terms(k); }, rows::bilateral_window(h, opt), w, &st,
                       opt.reverse);
}

TSeries r1psi1_rhs(const Monomial& b, const Monomial& c, const Monomial& z, long w) {
  const Monomial q = qm(1);
  return prod_inf({q, c / b, b * z, q / (b * z)}, 2, w) *
         prod_inf_recip({c, q / b, z, c / (b * z)}, 2, w);
}

TSeries b6psi6_lhs(const std::vector<Monomial>& v, long w, SumStats& st, const BuildOptions& opt) {
  const Monomial &a = v[0], &b = v[1], &c = v[2], &d = v[3], &e = v[4];
  const Monomial q = qm(1);
  const Monomial z = q * a * a / (b * c * d * e);
  const long h = w / std::max<long>(1, z.valuation()) + 4;
  std::vector<PochFactor> f = factors({b, c, d, e}, {a * q / b, a * q / c, a * q / d, a * q / e});
  HyperTerms terms(std::move(f), z, w, vwp_top(a));
  return sum_bilateral([&](long k) { return terms(k); }, rows::bilateral_window(h, opt), w, &st,
                       opt.reverse) *
         vwp_bottom(a, w);
}

TSeries b6psi6_rhs(const std::vector<Monomial>& v, long w) {
  const Monomial &a = v[0], &b = v[1], &c = v[2], &d = v[3], &e = v[4];
  const Monomial q = qm(1);
  return prod_inf({q, a * q, q / a, a * q / (b * c), a * q / (b * d), a * q / (b * e),
                   a * q / (c * d), a * q / (c * e), a * q / (d * e)},
                  2, w) *
         prod_inf_recip({q / b, q / c, q / d, q / e, a * q / b, a * q / c, a * q / d, a * q / e,
                         a * a * q / (b * c * d * e)},
                        2, w);
}

}  // namespace

T8psi8Parts t8psi8_parts(const T8psi8Params& p, long w, const BuildOptions& opt,
                         bool cancel_pairs) {
  const long m = p.m;
  const Monomial& a = p.a;
  const Monomial q = qm(1);
  const Monomial lambda = p.alpha * p.mu1 * p.mu2 / (a * q);
  const Monomial big = a.pow(3) * qm(2 + m) / (p.rho1 * p.rho2 * p.mu1 * p.mu2);
  const Monomial small = p.alpha * p.rho1 * p.rho2 * p.mu1 * p.mu2 * qm(-m) / (q * a * a);

  T8psi8Parts out;
  out.lambda = lambda;

  std::vector<Monomial> lnum{p.rho1, p.rho2, p.mu1, p.mu2, a * qm(-m)};
  std::vector<Monomial> lden{a * q / p.rho1, a * q / p.rho2, a * q / p.mu1, a * q / p.mu2,
                             qm(1 + m)};
  std::vector<Monomial> rnum{p.mu1,          p.mu2,           lambda * p.rho1 / a,
                             lambda * p.rho2 / a, lambda * qm(-m), a * qm(1 + m) / (p.rho1 * p.rho2)};
  std::vector<Monomial> rden{lambda * q / p.mu1, lambda * q / p.mu2, a * q / p.rho1,
                             a * q / p.rho2,     qm(1 + m),          lambda * p.rho1 * p.rho2 * qm(-m) / a};
  if (cancel_pairs) {
    cancel_common(lnum, lden);
    cancel_common(rnum, rden);
  }
  lnum = nonzero(lnum);
  lden = nonzero(lden);
  rnum = nonzero(rnum);
  rden = nonzero(rden);

  const SumWindow win = rows::window(-m, std::max<long>(8, w / 2), opt);
  SumStats st;
  std::vector<PochFactor> lf = factors(lnum, lden);
  lf.insert(lf.begin() + static_cast<long>(lnum.size()), PochFactor{big, false, p.alpha});
  if (!small.is_zero()) lf.push_back({small, true});
  HyperTerms lterms(std::move(lf), a.reciprocal(), w, vwp_top(a));
  out.lhs = sum_unilateral([&](long k) { return lterms(k); }, win, w, &st, opt.reverse) *
            vwp_bottom(a, w);
  const Monomial arg = a * q / (p.mu1 * p.mu2);
  std::vector<PochFactor> rf = factors(rnum, rden);
  HyperTerms rterms(std::move(rf), arg, w, vwp_top(lambda));
  out.rhs_sum = sum_unilateral([&](long k) { return rterms(k); }, win, w, &st, opt.reverse) *
                vwp_bottom(lambda, w);
  out.terms = st.terms;

  out.prefactor = prod_inf(nonzero({a * q, lambda * q / p.mu1, lambda * q / p.mu2, arg}), 2, w) *
                  prod_inf_recip(nonzero({p.alpha / a, a * q / p.mu1, a * q / p.mu2, lambda * q}),
                                 2, w);
  out.m_factor = poch(q / a, m, w) * ps(a * q / p.rho1, lambda, m, w) *
                 ps(a * q / p.rho2, lambda, m, w) * poch(a * q / (p.rho1 * p.rho2), m, w) *
                 poch_recip(q / p.rho1, m, w) * poch_recip(q / p.rho2, m, w) *
                 ps_recip(q, lambda, m, w) * ps_recip(q * a * a / (p.rho1 * p.rho2), lambda, m, w);
  return out;
}

TSeries t8psi8_lhs_term(const T8psi8Params& p, long k, long w) {
  const long m = p.m;
  const Monomial& a = p.a;
  const Monomial q = qm(1);
  const Monomial big = a.pow(3) * qm(2 + m) / (p.rho1 * p.rho2 * p.mu1 * p.mu2);
  const Monomial small = p.alpha * p.rho1 * p.rho2 * p.mu1 * p.mu2 * qm(-m) / (q * a * a);
  TSeries t = vwp_factor(a, k, w) *
              poch_ratio({p.rho1, p.rho2, p.mu1, p.mu2, a * qm(-m)},
                         {a * q / p.rho1, a * q / p.rho2, a * q / p.mu1, a * q / p.mu2, qm(1 + m)},
                         k, w) *
              big_factor(big, p.alpha, a, k, w);
  if (!small.is_zero()) t = t * poch_recip(small, k, w);
  return t;
}

namespace rows {

namespace {

T8psi8Params t8_from(const Params& p) {
  T8psi8Params t;
  t.m = p.integer("m");
  t.a = p.mono("a");
  t.alpha = p.mono("alpha");
  t.rho1 = p.mono("rho1");
  t.rho2 = p.mono("rho2");
  t.mu1 = p.mono("mu1");
  t.mu2 = p.mono("mu2");
  return t;
}

}  // namespace

void validate_t8psi8(const Params& p) {
  for (const char* n : {"a", "rho1", "rho2", "mu1", "mu2"}) require_finite_nonzero(p, n);
  const Monomial& alpha = p.mono("alpha");
  require(!alpha.is_infinite(), "alpha must be finite");
  const Monomial& a = p.mono("a");
  require(alpha.is_zero() || alpha.valuation() - a.valuation() >= 1,
          "|alpha/a| < 1 is read as val(alpha) - val(a) >= 1");
  require(a.valuation() + 2 - p.mono("mu1").valuation() - p.mono("mu2").valuation() >= 1,
          "|aq/mu1 mu2| < 1 is read as val(a q / (mu1 mu2)) >= 1");
}

Sides build_t8psi8(const Params& p, long order, const BuildOptions& opt) {
  const T8psi8Params t = t8_from(p);
  Sides s;
  long tl = 0;
  long tr = 0;
  Monomial lambda;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    T8psi8Parts parts = t8psi8_parts(t, w, opt);
    st.terms = parts.terms / 2;
    lambda = parts.lambda;
    return parts.lhs;
  });
  s.rhs = side(order, tr, [&](long w, SumStats& st) {
    T8psi8Parts parts = t8psi8_parts(t, w, opt);
    st.terms = parts.terms - parts.terms / 2;
    return parts.prefactor * parts.m_factor * parts.rhs_sum;
  });
  s.terms = tl + tr;
  s.derived = {{"lambda", lambda.to_string()},
               {"c", (t.alpha * t.rho1 * t.rho2 / (t.a * qm(1))).to_string()}};
  return s;
}

void validate_r1psi1(const Params& p) {
  for (const char* n : {"b", "c", "z"}) require_finite_nonzero(p, n);
  const long vz = p.mono("z").valuation();
  const long vcb = p.mono("c").valuation() - p.mono("b").valuation();
  require(vz >= 1, "|z| < 1 is read as val(z) >= 1");
  require(vcb - vz >= 1, "|c/b| < |z| is read as val(c/b) >= val(z) + 1");
}

Sides build_r1psi1(const Params& p, long order, const BuildOptions& opt) {
  const Monomial b = p.mono("b"), c = p.mono("c"), z = p.mono("z");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) { return r1psi1_lhs(b, c, z, w, st, opt); });
  s.rhs = side(order, tr, [&](long w, SumStats&) { return r1psi1_rhs(b, c, z, w); });
  s.terms = tl + tr;
  return s;
}

void validate_b6psi6(const Params& p) {
  for (const char* n : {"a", "b", "c", "d", "e"}) require_finite_nonzero(p, n);
  const Monomial z = qm(1) * p.mono("a") * p.mono("a") /
                     (p.mono("b") * p.mono("c") * p.mono("d") * p.mono("e"));
  require(z.valuation() >= 1, "|a^2 q / bcde| < 1 is read as val(a^2 q / bcde) >= 1");
}

Sides build_b6psi6(const Params& p, long order, const BuildOptions& opt) {
  const std::vector<Monomial> v{p.mono("a"), p.mono("b"), p.mono("c"), p.mono("d"), p.mono("e")};
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) { return b6psi6_lhs(v, w, st, opt); });
  s.rhs = side(order, tr, [&](long w, SumStats&) { return b6psi6_rhs(v, w); });
  s.terms = tl + tr;
  return s;
}

void validate_ext63(const Params& p) {
  for (const char* n : {"beta", "gamma", "rho"}) require_finite_nonzero(p, n);
  require(p.mono("beta").valuation() <= 0, "|q/beta^2| < 1 is read as val(beta) <= 0");
}

Sides build_ext63(const Params& p, long order, const BuildOptions& opt) {
  const long m = p.integer("m");
  const Monomial beta = p.mono("beta"), gamma = p.mono("gamma"), rho = p.mono("rho");
  const Monomial q = qm(1);
  const Monomial z = q / beta;
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    const long h = w / z.valuation() + m + 4;
    std::vector<PochFactor> f = factors({gamma.reciprocal(), rho, gamma * qm(1 + m) / (beta * rho)},
                                        {gamma, qm(1 + m) / rho, beta * rho / gamma});
    f.push_back({beta * qm(m), false, Monomial::constant(1), 2});
    f.push_back({qm(1 + m) / beta, true, Monomial::constant(1), 2});
    HyperTerms terms(std::move(f), z, w);
    TSeries sum = sum_bilateral([&](long n) { return terms(n); }, rows::bilateral_window(h, opt),
                                w, &st, opt.reverse);
    return poch(beta, m, w) * poch_recip(q / beta, m, w) * sum;
  });
  s.rhs = side(order, tr, [&](long w, SumStats& st) {
    const Monomial x = q / (beta * beta);
    std::vector<TSeries> terms;
    for (long sidx = 0; sidx <= m / 2; ++sidx) {
      HyperTerms phi(factors({beta / gamma, beta * qm(m - 2 * sidx), rho * beta * qm(-sidx),
                                gamma * qm(1 + m - sidx) / rho},
                               {q, gamma * qm(1 + m - 2 * sidx), beta * rho * qm(-sidx) / gamma,
                                qm(1 + m - sidx) / rho}),
                       x, w);
      TSeries inner = sum_unilateral([&](long j) { return phi(j); },
                                     rows::window(0, w / x.valuation() + 4, opt), w, &st,
                                     opt.reverse);
      TSeries vwp = (TSeries::constant(1) - (gamma * qm(m - 2 * sidx)).to_series()) *
                    poch_recip(gamma, 1, w);
      terms.push_back(mono_pow(beta.pow(3) / q, sidx) *
                      poch_ratio({q / gamma, gamma * q / (beta * rho), rho * qm(-m)},
                                 {q, q / rho, beta * rho * qm(-m) / gamma}, sidx, w) *
                      vwp * poch_ratio({beta, gamma * gamma}, {q, gamma * q}, m - 2 * sidx, w) *
                      poch(q, m - sidx, w) * poch_recip(gamma * q, m - sidx, w) * inner);
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    return prod_inf({q, x}, 2, w) * prod_inf_recip({z, z}, 2, w) * out;
  });
  s.terms = tl + tr;
  s.derived = {{"alpha", (qm(1 + m) / beta).to_string()}};
  return s;
}

void validate_qultra(const Params& p) {
  const long n = p.integer("n");
  require(n <= 12, "n must be at most 12");
  const Monomial beta = p.mono("beta");
  require(beta.is_finite_nonzero(), "beta must be a finite nonzero monomial");
  require(!p.mono("c").is_infinite(), "c must be finite");
  for (long j = 0; j <= n; ++j) {
    require(!(beta * qm(j) == Monomial::constant(1)), "beta q^j = 1 makes a denominator vanish");
  }
}

Sides build_qultra(const Params& p, long order, const BuildOptions&) {
  const long n = p.integer("n");
  const Monomial beta = p.mono("beta"), c = p.mono("c");
  const Monomial q = qm(1);
  Sides s;
  s.kind = IdentityKind::Bivariate;
  s.lhs_x = side_x(order, [&](long w) { return qultra_poly(n, c, w); });
  s.rhs_x = side_x(order, [&](long w) {
    LaurentPolyX out;
    for (long k = 0; k <= n / 2; ++k) {
      TSeries coef = poch_scaled(c, beta, k, w) * poch(c, n - k, w) * poch_recip(q, k, w) *
                     poch_recip(q * beta, n - k, w) *
                     (TSeries::constant(1) - (beta * qm(n - 2 * k)).to_series()) *
                     poch_recip(beta, 1, w);
      out += qultra_poly(n - 2 * k, beta, w).scaled(coef);
    }
    return out;
  });
  s.terms = n / 2 + 1;
  return s;
}

}  // namespace rows

LaurentPolyX qultra_poly(long n, const Monomial& beta, long order) {
  const Monomial q = qm(1);
  LaurentPolyX out;
  for (long k = 0; k <= n; ++k) {
    out.add(2 * k - n, poch(beta, k, order) * poch(beta, n - k, order) * poch_recip(q, k, order) *
                           poch_recip(q, n - k, order));
  }
  return out;
}

CheckResult connection_check(long n, const Monomial& beta, const Monomial& c, long order) {
  Params p;
  p.set("n", Monomial::constant(n));
  p.set("beta", beta);
  p.set("c", c);
  CheckResult r;
  r.name = "connection n=" + std::to_string(n) + " beta=" + beta.to_string() + " c=" + c.to_string();
  Sides s = rows::build_qultra(p, order, {});
  Comparison cmp = compare_sides(s, order);
  r.pass = cmp.equal;
  if (!cmp.equal) {
    r.detail = "first mismatch at x^" + std::to_string(*cmp.xexp) + " t^" +
               std::to_string(*cmp.texp);
  }
  return r;
}

CheckResult psi11_route(const Monomial& b, const Monomial& c, const Monomial& z, long order) {
  CheckResult r;
  r.name = "1psi1 route b=" + b.to_string() + " c=" + c.to_string() + " z=" + z.to_string();
  T8psi8Params t;
  // m only enters through factors whose deviation from their limit has valuation >= 2m.
  t.m = ceil_div(order, 2) + 4;
  t.a = b;
  t.alpha = Monomial();
  t.mu1 = b;
  t.mu2 = b * qm(1) / (b * z);
  t.rho1 = b * qm(1) / c;
  t.rho2 = b * z;
  long terms = 0;
  TSeries sum_side = side(order, terms, [&](long w, SumStats&) {
    return t8psi8_parts(t, w, {}, true).rhs_sum;
  });
  TSeries product_side = side(order, terms, [&](long w, SumStats&) {
    T8psi8Parts parts = t8psi8_parts(t, w, {}, true);
    return parts.lhs * series_inv(parts.prefactor * parts.m_factor, w);
  });
  TSeries direct_sum = side(order, terms, [&](long w, SumStats& st) {
    return r1psi1_lhs(b, c, z, w, st, {});
  });
  TSeries direct_product = to_order(order, [&](long w) { return r1psi1_rhs(b, c, z, w); });
  std::string d1 = mismatch_text(sum_side, direct_sum, order);
  std::string d2 = mismatch_text(product_side, direct_product, order);
  r.pass = d1.empty() && d2.empty();
  r.detail = "m=" + std::to_string(t.m) + (d1.empty() ? "" : "; sum side " + d1) +
             (d2.empty() ? "" : "; product side " + d2);
  return r;
}


CheckResult psi66_route(const Monomial& a, const Monomial& b, const Monomial& c,
                        const Monomial& d, const Monomial& e, long order) {
  CheckResult r;
  r.name = "6psi6 route a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() +
           " d=" + d.to_string() + " e=" + e.to_string();
  T8psi8Params t;
  // Summand k differs from its limit at valuation >= 2m - k while having valuation >= k.
  t.m = order + 4;
  t.a = a;
  t.rho1 = b;
  t.rho2 = c;
  t.mu1 = d;
  t.mu2 = e;
  t.alpha = a * qm(1) / d;
  const std::vector<Monomial> v{a, b, c, d, e};
  long terms = 0;
  TSeries sum_side = side(order, terms, [&](long w, SumStats&) {
    return t8psi8_parts(t, w, {}, true).lhs;
  });
  TSeries product_side = side(order, terms, [&](long w, SumStats&) {
    T8psi8Parts parts = t8psi8_parts(t, w, {}, true);
    return parts.prefactor * parts.m_factor * parts.rhs_sum;
  });
  TSeries direct_sum = side(order, terms, [&](long w, SumStats& st) {
    return b6psi6_lhs(v, w, st, {});
  });
  TSeries direct_product = to_order(order, [&](long w) { return b6psi6_rhs(v, w); });
  std::string d1 = mismatch_text(sum_side, direct_sum, order);
  std::string d2 = mismatch_text(product_side, direct_product, order);
  r.pass = d1.empty() && d2.empty();
  r.detail = "m=" + std::to_string(t.m) + (d1.empty() ? "" : "; sum side " + d1) +
             (d2.empty() ? "" : "; product side " + d2);
  return r;
}

CheckResult index_shift_check(const T8psi8Params& p, long terms, long order) {
  CheckResult r;
  r.name = "index shift m=" + std::to_string(p.m);
  if (p.alpha.is_zero()) throw DegenerateParameter("the index-shift check needs alpha != 0");
  const long m = p.m;
  const Monomial& a = p.a;
  const Monomial q = qm(1);
  const Monomial shift = qm(-m);
  const Monomial a2 = a * qm(-2 * m);
  const Monomial big = a.pow(3) * qm(2 + m) / (p.rho1 * p.rho2 * p.mu1 * p.mu2);
  const Monomial small = p.alpha * p.rho1 * p.rho2 * p.mu1 * p.mu2 * qm(-m) / (q * a * a);
  std::vector<Monomial> num{p.rho1, p.rho2, p.mu1, p.mu2, a * qm(-m), big / p.alpha};
  std::vector<Monomial> den{a * q / p.rho1, a * q / p.rho2, a * q / p.mu1, a * q / p.mu2,
                            qm(1 + m), small};
  for (auto& x : num) x = x * shift;
  for (auto& y : den) y = y * shift;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (!(a2 * q / num[i] == den[i])) {
      r.detail = "shifted parameters are not well-poised in a q^{-2m}";
      return r;
    }
  }
  const Monomial z = p.alpha / a;
  const TSeries base = t8psi8_lhs_term(p, -m, order);
  for (long k = 0; k < terms; ++k) {
    TSeries shifted = vwp_factor(a2, k, order) * poch_ratio(num, den, k, order) * mono_pow(z, k);
    TSeries lhs = t8psi8_lhs_term(p, k - m, order);
    TSeries rhs = base * shifted;
    const long upto = std::min(lhs.order(), rhs.order());
    std::string d = mismatch_text(lhs, rhs, upto);
    if (!d.empty()) {
      r.detail = "summand " + std::to_string(k - m) + ": " + d;
      return r;
    }
  }
  r.pass = true;
  r.detail = std::to_string(terms) + " summands";
  return r;
}

std::vector<CheckResult> degeneration_suite(long order) {
  std::vector<CheckResult> out;
  out.push_back(psi11_route(Monomial::constant(2), qm(2, 2), qm(1), order));
  out.push_back(psi11_route(qm(1, 3), qm(3, 5), tm(1), order));
  out.push_back(psi66_route(qm(2, 3), qm(1, 2), qm(1, 3), tm(1, 5), qm(1, 7), order));
  out.push_back(psi66_route(qm(2, 2), tm(1, 3), qm(1, 2), Monomial::constant(5),
                            qm(1, Rational(7, 2)), order));
  T8psi8Params t;
  t.m = 2;
  t.a = tm(5, 2);
  t.alpha = qm(3, 3);
  t.rho1 = qm(1, 2);
  t.rho2 = qm(1, 3);
  t.mu1 = qm(2, 2);
  t.mu2 = qm(1, 5);
  out.push_back(index_shift_check(t, 5, order));
  return out;
}

}  // namespace baileykit
