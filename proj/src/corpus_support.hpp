#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "baileykit/bailey.hpp"
#include "baileykit/corpus.hpp"
#include "baileykit/errors.hpp"
#include "baileykit/qfunctions.hpp"

namespace baileykit::rows {

inline Monomial qm(long qexp, const Rational& c = 1) { return Monomial::q_power(qexp, c); }
inline Monomial tm(long texp, const Rational& c = 1) { return Monomial(c, texp); }

inline long floor_half(long m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }
inline long binom2(long n) { return n * (n - 1) / 2; }

/// Static upper end for a variable whose q-exponent grows like c n^2:
/// ceil(sqrt(2 order / c)) + slack, with order in t-units.
inline long quad_hi(long order, double c, long slack) {
  return static_cast<long>(std::ceil(std::sqrt(2.0 * static_cast<double>(order) / c))) + slack;
}

/// Unilateral window: the lower end is a hard limit and only the upper end grows.
inline SumWindow window(long lo, long hi, const BuildOptions& opt) {
  SumWindow w;
  w.lo = lo;
  w.hi = lo + ((hi < lo ? lo : hi) - lo + 1) * opt.window_scale - 1;
  return w;
}

/// Bilateral window [-h, h] scaled at both ends.
inline SumWindow bilateral_window(long h, const BuildOptions& opt) {
  SumWindow w;
  w.lo = -h;
  w.hi = h;
  return w.scaled(opt.window_scale);
}

/// Product of (x; base)_inf over xs, allowing finitely many nonpositive-valuation factors.
TSeries prod_inf(const std::vector<Monomial>& xs, int base_texp, long order);
TSeries prod_inf_recip(const std::vector<Monomial>& xs, int base_texp, long order);

/// prod (num_i)_k / prod (den_i)_k in base q.
TSeries poch_ratio(const std::vector<Monomial>& num, const std::vector<Monomial>& den, long k,
                   long order);

/// (1 - x q^{2k}) / (1 - x), the very-well-poised factor.
TSeries vwp_factor(const Monomial& x, long k, long order);

/// Evaluates one side through to_order, recording the terms summed by the final attempt.
TSeries side(long order, long& terms, const std::function<TSeries(long working, SumStats&)>& f);

/// Both sides as a Laurent polynomial in x, known to `order`.
LaurentPolyX side_x(long order, const std::function<LaurentPolyX(long working)>& f);

void require(bool ok, const std::string& what);
void require_finite_nonzero(const Params& p, const std::string& name);

// Rows with classical Bailey-pair origin.
Sides build_rr(const Params& p, long order, const BuildOptions& opt, int which);
Sides build_qbi(const Params& p, long order, const BuildOptions& opt);
Sides build_qps(const Params& p, long order, const BuildOptions& opt);
Sides build_jtp(const Params& p, long order, const BuildOptions& opt);
Sides build_kmrr(const Params& p, long order, const BuildOptions& opt);
Sides build_kmgg(const Params& p, long order, const BuildOptions& opt);
Sides build_k1mrr(const Params& p, long order, const BuildOptions& opt);
Sides build_k1mgg_even(const Params& p, long order, const BuildOptions& opt);
Sides build_k1mgg_odd(const Params& p, long order, const BuildOptions& opt);
Sides build_mrr(const Params& p, long order, const BuildOptions& opt);
Sides build_mgg(const Params& p, long order, const BuildOptions& opt);
Sides build_gis(const Params& p, long order, const BuildOptions& opt);
Sides build_kmrr_inv(const Params& p, long order, const BuildOptions& opt);
Sides build_k2mrr(const Params& p, long order, const BuildOptions& opt);
Sides build_lhs_full_ag(const Params& p, long order, const BuildOptions& opt);
Sides build_kmrr_change(const Params& p, long order, const BuildOptions& opt);
Sides build_kmgg_inv(const Params& p, long order, const BuildOptions& opt);

// Rows with WP-Bailey origin and the ultraspherical connection formula.
void validate_t8psi8(const Params& p);
Sides build_t8psi8(const Params& p, long order, const BuildOptions& opt);
void validate_r1psi1(const Params& p);
Sides build_r1psi1(const Params& p, long order, const BuildOptions& opt);
void validate_b6psi6(const Params& p);
Sides build_b6psi6(const Params& p, long order, const BuildOptions& opt);
void validate_ext63(const Params& p);
Sides build_ext63(const Params& p, long order, const BuildOptions& opt);
void validate_qultra(const Params& p);
Sides build_qultra(const Params& p, long order, const BuildOptions& opt);

}  // namespace baileykit::rows
