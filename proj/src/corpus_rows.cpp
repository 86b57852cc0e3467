#include <algorithm>

#include "baileykit/chain_sum.hpp"
#include "corpus_support.hpp"

namespace baileykit::rows {

TSeries prod_inf(const std::vector<Monomial>& xs, int base_texp, long order) {
  TSeries out = TSeries::constant(1);
  for (const auto& x : xs) out *= poch_inf_laurent(x, order, base_texp);
  return out;
}

TSeries prod_inf_recip(const std::vector<Monomial>& xs, int base_texp, long order) {
  TSeries out = TSeries::constant(1);
  for (const auto& x : xs) out *= poch_inf_recip_laurent(x, order, base_texp);
  return out;
}

TSeries poch_ratio(const std::vector<Monomial>& num, const std::vector<Monomial>& den, long k,
                   long order) {
  TSeries out = TSeries::constant(1);
  for (const auto& x : num) {
    out *= poch(x, k, order);
    if (out.is_zero() && out.is_exact()) return out;
  }
  for (const auto& x : den) out *= poch_recip(x, k, order);
  return out;
}

TSeries vwp_factor(const Monomial& x, long k, long order) {
  if (x.is_zero()) return TSeries::constant(1);
  TSeries top = TSeries::constant(1) - (x * Monomial::q_power(2 * k)).to_series();
  return top * poch_recip(x, 1, order);
}

TSeries side(long order, long& terms, const std::function<TSeries(long, SumStats&)>& f) {
  return to_order(order, [&](long working) {
    SumStats stats;
    TSeries r = f(working, stats);
    terms = stats.terms;
    return r;
  });
}

LaurentPolyX side_x(long order, const std::function<LaurentPolyX(long)>& f) {
  long working = order;
  LaurentPolyX result;
  for (int attempt = 0; attempt < 10; ++attempt) {
    result = f(working);
    if (result.order() >= order) return result.truncated(order);
    working += (order - result.order()) + 2;
  }
  throw std::runtime_error("could not reach truncation order " + std::to_string(order));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstraintViolation(what);
}

void require_finite_nonzero(const Params& p, const std::string& name) {
  require(p.mono(name).is_finite_nonzero(), name + " must be a finite nonzero monomial");
}

namespace {

TSeries tpow(long texp, const Rational& c = 1) { return TSeries::monomial(c, texp); }
TSeries sign(long n) { return TSeries::constant(n % 2 == 0 ? 1 : -1); }
TSeries mono_pow(const Monomial& x, long k) {
  if (k == 0) return TSeries::constant(1);
  return x.pow(k).to_series();
}

TSeries euler_recip(long order) { return poch_inf_recip_laurent(qm(1), order); }

}  // namespace

Sides build_rr(const Params&, long order, const BuildOptions& opt, int which) {
  Sides s;
  long tl = 0;
  long tr = 0;
  const long lin = which == 1 ? 0 : 1;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    return sum_unilateral(
        [&](long n) { return tpow(2 * (n * n + lin * n)) * poch_recip(qm(1), n, w); },
        window(0, quad_hi(w, 1, 2), opt), w, &st, opt.reverse);
  });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return which == 1 ? prod_inf_recip({qm(1), qm(4)}, 10, w)
                      : prod_inf_recip({qm(2), qm(3)}, 10, w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_qbi(const Params& p, long order, const BuildOptions& opt) {
  const long n = p.integer("n");
  const Monomial z = p.mono("z");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    std::vector<TSeries> terms;
    for (long k = 0; k <= n; ++k) {
      terms.push_back(poch(qm(-n), k, w) * poch_recip(qm(1), k, w) * mono_pow(z, k));
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    st.terms = n + 1;
    return out;
  });
  s.rhs = side(order, tr, [&](long, SumStats&) { return poch(z * qm(-n), n, kExactOrder); });
  s.terms = tl + tr;
  return s;
}

Sides build_qps(const Params& p, long order, const BuildOptions& opt) {
  const long n = p.integer("n");
  const Monomial a = p.mono("a");
  const Monomial b = p.mono("b");
  const Monomial c = p.mono("c");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    std::vector<TSeries> terms;
    for (long k = 0; k <= n; ++k) {
      terms.push_back(poch_ratio({a, b, qm(-n)}, {qm(1), c, a * b * qm(1 - n) / c}, k, w) *
                      tpow(2 * k));
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    st.terms = n + 1;
    return out;
  });
  s.rhs = side(order, tr,
               [&](long w, SumStats&) { return poch_ratio({c / a, c / b}, {c, c / (a * b)}, n, w); });
  s.terms = tl + tr;
  return s;
}

Sides build_jtp(const Params& p, long order, const BuildOptions& opt) {
  const Monomial z = p.mono("z");
  Sides s;
  long tl = 0;
  long tr = 0;
  const long slack = std::abs(z.texp()) / 2 + 2;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    return sum_bilateral([&](long n) { return mono_pow(-z, n) * tpow(2 * binom2(n)); },
                         bilateral_window(quad_hi(w, 0.5, slack), opt), w, &st, opt.reverse);
  });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return poch_inf(qm(1), w) * poch_inf_laurent(z, w) * poch_inf_laurent(qm(1) / z, w);
  });
  s.terms = tl + tr;
  return s;
}

namespace {

// Edges 1/(q)_d, or 1/(q^2;q^2)_d where requested.
TSeries edge_q(long d, long w) { return poch_recip(qm(1), d, w); }
TSeries edge_q2(long d, long w) { return poch_recip(qm(2), d, w, 4); }

}  // namespace

Sides build_kmrr(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    ChainSpec spec;
    spec.levels = static_cast<int>(k);
    spec.lo = -floor_half(m);
    spec.weight = [&](int level, long n, long) {
      TSeries v = tpow(2 * (n * n + m * n));
      if (level == k - 1) v = v * sign(n) * tpow(2 * binom2(n)) * qbinom(m + n, m + 2 * n);
      return v;
    };
    spec.edge = [](int, long d, long wo) { return edge_q(d, wo); };
    return chain_sum(spec, window(spec.lo, quad_hi(w, 1, m + 2), opt), w, &st, opt.reverse);
  });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return prod_inf({qm(2 * k + 1), qm(k * (m + 1)), qm(k * (1 - m) + 1)}, 2 * (2 * k + 1), w) *
           euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_kmgg(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    ChainSpec spec;
    spec.levels = static_cast<int>(k);
    spec.lo = -floor_half(m);
    spec.weight = [&](int level, long n, long wo) {
      TSeries v = level == 0 ? tpow(n * n + m * n) * poch(tm(m + 1, -1), n, wo)
                             : tpow(2 * (n * n + m * n));
      if (level == k - 1) v = v * sign(n) * tpow(2 * binom2(n)) * qbinom(m + n, m + 2 * n);
      return v;
    };
    spec.edge = [](int, long d, long wo) { return edge_q(d, wo); };
    return chain_sum(spec, window(spec.lo, quad_hi(w, 0.5, m + 2), opt), w, &st, opt.reverse);
  });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return poch_inf_laurent(tm(m + 1, -1), w) * euler_recip(w) *
           prod_inf({qm(2 * k), tm((2 * k - 1) * (m + 1)), tm(2 * k * (1 - m) + m + 1)}, 4 * k, w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_k1mrr(const Params& p, long, const BuildOptions& opt) {
  const long m = p.integer("m");
  Sides s;
  s.kind = IdentityKind::Polynomial;
  std::vector<TSeries> terms;
  for (long j = 0; j <= m / 2; ++j) {
    terms.push_back(sign(j) * tpow(2 * binom2(j)) * qbinom(m - j, j));
  }
  if (opt.reverse) std::reverse(terms.begin(), terms.end());
  for (const auto& t : terms) s.lhs += t;
  s.rhs = m % 3 == 2 ? TSeries() : sign(m / 3) * tpow(m * (m - 1) / 3);
  s.terms = static_cast<long>(terms.size());
  return s;
}

Sides build_k1mgg_even(const Params& p, long, const BuildOptions& opt) {
  const long m = p.integer("m");
  Sides s;
  s.kind = IdentityKind::Polynomial;
  std::vector<TSeries> terms;
  for (long j = 0; j <= m; ++j) {
    terms.push_back(sign(j) * tpow(4 * binom2(j)) * qbinom(2 * m - j, j, 4) *
                    poch(qm(1, -1), m - j, kExactOrder, 4));
  }
  if (opt.reverse) std::reverse(terms.begin(), terms.end());
  for (const auto& t : terms) s.lhs += t;
  s.rhs = sign(m / 2) * tpow(m * (3 * m - 1));
  s.terms = static_cast<long>(terms.size());
  return s;
}

Sides build_k1mgg_odd(const Params& p, long, const BuildOptions& opt) {
  const long m = p.integer("m");
  Sides s;
  s.kind = IdentityKind::Polynomial;
  std::vector<TSeries> terms;
  for (long j = 0; j <= m; ++j) {
    terms.push_back(sign(j) * tpow(2 * binom2(j)) * qbinom(2 * m + 1 - j, j) *
                    poch(qm(1, -1), m - j, kExactOrder));
  }
  if (opt.reverse) std::reverse(terms.begin(), terms.end());
  for (const auto& t : terms) s.lhs += t;
  s.rhs = m % 2 == 1 ? TSeries() : sign(m / 2) * tpow(m * (3 * m + 2) / 2);
  s.terms = static_cast<long>(terms.size());
  return s;
}

namespace {

// sum_{k >= 0} q^{k^2 + r k} / (q)_k
TSeries rr_inner(long r, long w, SumStats& st, const BuildOptions& opt) {
  return sum_unilateral(
      [&](long k) { return tpow(2 * (k * k + r * k)) * poch_recip(qm(1), k, w); },
      window(0, quad_hi(w, 1, 2), opt), w, &st, opt.reverse);
}

}  // namespace

Sides build_mrr(const Params& p, long order, const BuildOptions& opt) {
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    std::vector<TSeries> terms;
    for (long j = 0; j <= m / 2; ++j) {
      terms.push_back(sign(j) * tpow(2 * (5 * binom2(j) - (2 * m - 3) * j)) * qbinom(m - j, j) *
                      rr_inner(m - 2 * j, w, st, opt));
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    return out;
  });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return prod_inf({qm(5), qm(2 * m + 2), qm(3 - 2 * m)}, 10, w) * euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

// The k = 2 case of the KMGG row with q -> q^2. Writing the inner Pochhammer as
// (-q^{m+1};q^2)_k with linear exponent -(3m-4)j instead only holds for m <= 1.
Sides build_mgg(const Params& p, long order, const BuildOptions& opt) {
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) {
    std::vector<TSeries> terms;
    for (long j = 0; j <= m / 2; ++j) {
      const long r = m - 2 * j;
      TSeries inner = sum_unilateral(
          [&](long kk) {
            return tpow(2 * (kk * kk + r * kk)) * poch(qm(m + 1, -1), kk - j, w, 4) *
                   poch_recip(qm(2), kk, w, 4);
          },
          window(0, quad_hi(w, 1, j + 2), opt), w, &st, opt.reverse);
      terms.push_back(sign(j) * tpow(2 * (8 * binom2(j) - (3 * m - 5) * j)) *
                      qbinom(m - j, j, 4) * inner);
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    return out;
  });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return poch_inf_laurent(qm(m + 1, -1), w, 4) * poch_inf_recip_laurent(qm(2), w, 4) *
           prod_inf({qm(8), qm(3 * m + 3), qm(5 - 3 * m)}, 16, w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_gis(const Params& p, long order, const BuildOptions& opt) {
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) { return rr_inner(m, w, st, opt); });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    std::vector<TSeries> terms;
    for (long k = 0; k <= m; ++k) {
      terms.push_back(qbinom(m, k) * tpow(4 * k * (k - m)) *
                      prod_inf({qm(5), qm(3 + 4 * k - 2 * m), qm(2 - 4 * k + 2 * m)}, 10, w));
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    return out * euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_kmrr_inv(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  if (k == 1) {
    s.lhs = TSeries::constant(1);
  } else {
    s.lhs = side(order, tl, [&](long w, SumStats& st) {
      ChainSpec spec;
      spec.levels = static_cast<int>(k - 1);
      spec.lo = 0;
      spec.weight = [&](int level, long n, long wo) {
        TSeries v = tpow(2 * (n * n + m * n));
        if (level == k - 2) v = v * poch_recip(qm(1), n, wo);
        return v;
      };
      spec.edge = [](int, long d, long wo) { return edge_q(d, wo); };
      return chain_sum(spec, window(0, quad_hi(w, 1, m + 2), opt), w, &st, opt.reverse);
    });
  }
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    std::vector<TSeries> terms;
    for (long j = 0; j <= m; ++j) {
      terms.push_back(qbinom(m, j) * tpow(2 * k * j * (j - m)) *
                      prod_inf({qm(2 * k + 1), qm(k * (m - 2 * j + 1)), qm(k * (1 - m + 2 * j) + 1)},
                               2 * (2 * k + 1), w));
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    return out * euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

namespace {

TSeries k2mrr_lhs(long k, long m, long w, SumStats& st, const BuildOptions& opt) {
  ChainSpec spec;
  spec.levels = static_cast<int>(k);
  spec.lo = 0;
  spec.weight = [&](int level, long n, long) {
    TSeries v = tpow(2 * n * n);
    if (level == k - 1) v = v * sign(n) * tpow(2 * (binom2(n) - m * n)) * qbinom(m + n, 2 * n);
    return v;
  };
  spec.edge = [](int, long d, long wo) { return edge_q(d, wo); };
  return chain_sum(spec, window(0, quad_hi(w, 1, m + 2), opt), w, &st, opt.reverse);
}

}  // namespace

Sides build_k2mrr(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) { return k2mrr_lhs(k, m, w, st, opt); });
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return prod_inf({qm(2 * k + 1), qm(k + m + 1), qm(k - m)}, 2 * (2 * k + 1), w) *
           euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_lhs_full_ag(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  s.lhs = side(order, tl, [&](long w, SumStats& st) { return k2mrr_lhs(k, m, w, st, opt); });
  s.rhs = side(order, tr, [&](long w, SumStats& st) {
    ChainSpec spec;
    spec.levels = static_cast<int>(k - 1);
    spec.lo = 0;
    spec.weight = [&](int level, long n, long wo) {
      // level i carries n_{i+1}; the linear part covers n_{k-m}, ..., n_{k-1}
      TSeries v = tpow(2 * n * n + (level + 1 >= k - m ? 2 * n : 0));
      if (level == k - 2) v = v * poch_recip(qm(1), n, wo);
      return v;
    };
    spec.edge = [](int, long d, long wo) { return edge_q(d, wo); };
    return chain_sum(spec, window(0, quad_hi(w, 1, 2), opt), w, &st, opt.reverse);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_kmrr_change(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  if (k == 1) {
    // The single index n_0 of the outer factor q^{n_0} tends to infinity: the limit is 0.
    s.lhs = TSeries();
  } else {
    s.lhs = side(order, tl, [&](long w, SumStats& st) {
      ChainSpec spec;
      spec.levels = static_cast<int>(k);
      spec.lo = -floor_half(m);
      spec.weight = [&](int level, long n, long wo) {
        if (level < k - 1) return tpow(2 * (n * n + m * n) + (level == k - 2 ? 2 * n : 0));
        return tpow(2 * (n * n - 2 * n)) * poch(qm(1, -1), 2 * n + m, wo) * sign(n) *
               qbinom(m + n, m + 2 * n, 4);
      };
      spec.edge = [&](int edge, long d, long wo) {
        return edge == k - 2 ? edge_q2(d, wo) : edge_q(d, wo);
      };
      return chain_sum(spec, window(spec.lo, quad_hi(w, 1, m + 2), opt), w, &st, opt.reverse);
    });
  }
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    return prod_inf({qm(2 * k), qm((k - 1) * (m + 1)), qm((k - 1) * (1 - m) + 2)}, 4 * k, w) *
           euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

Sides build_kmgg_inv(const Params& p, long order, const BuildOptions& opt) {
  const long k = p.integer("k");
  const long m = p.integer("m");
  Sides s;
  long tl = 0;
  long tr = 0;
  if (k == 1) {
    // Same limit as the k = 1 case of the change-of-base identity: q^{n_0} with n_0 -> infinity.
    s.lhs = TSeries();
  } else {
    s.lhs = side(order, tl, [&](long w, SumStats& st) {
      ChainSpec spec;
      spec.levels = static_cast<int>(k - 1);
      spec.lo = 0;
      spec.weight = [&](int level, long n, long wo) {
        TSeries v = tpow(2 * (n * n + m * n));
        if (level == k - 2) v = v * tpow(2 * n) * poch_recip(qm(2), n, wo, 4);
        return v;
      };
      spec.edge = [](int, long d, long wo) { return edge_q(d, wo); };
      return chain_sum(spec, window(0, quad_hi(w, 1, m + 2), opt), w, &st, opt.reverse);
    });
  }
  s.rhs = side(order, tr, [&](long w, SumStats&) {
    std::vector<TSeries> terms;
    for (long j = 0; j <= m; ++j) {
      terms.push_back(qbinom(m, j, 4) * tpow(2 * (k - 1) * j * (j - m)) *
                      prod_inf({qm(2 * k), qm((k - 1) * (m - 2 * j + 1)),
                                qm((k - 1) * (1 - m + 2 * j) + 2)},
                               4 * k, w));
    }
    if (opt.reverse) std::reverse(terms.begin(), terms.end());
    TSeries out;
    for (const auto& t : terms) out += t;
    return out * poch_recip(qm(1, -1), m, w) * euler_recip(w);
  });
  s.terms = tl + tr;
  return s;
}

}  // namespace baileykit::rows
