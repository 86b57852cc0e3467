#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "baileykit/monomial.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

/// Argument of a q-shifted factorial: a monomial or series value and the base t^base_texp.
/// Ordinary base q has base_texp = 2.
struct PochhammerArg {
  std::variant<Monomial, TSeries> value;
  int base_texp = 2;
};

/// (a; base)_k for any integer k. For k < 0 this is 1/(a base^k; base)_{-k}.
/// Exact when k >= 0 and order == kExactOrder; otherwise known up to at least `order`.
/// Throws ZeroSeriesInversion when a negative-index factor is zero.
TSeries poch(const Monomial& a, long k, long order, int base_texp = 2);
TSeries poch(const PochhammerArg& a, long k, long order);

/// 1 / (a; base)_k. For k < 0 this is the finite product (a base^k; base)_{-k}, which may
/// be exactly zero.
TSeries poch_recip(const Monomial& a, long k, long order, int base_texp = 2);

/// (x/s; base)_k * s^k = prod (s - x base^i), well defined at s = 0 where it becomes
/// (-x)^k base^{k(k-1)/2}. This is how limits of parameters tending to infinity enter.
TSeries poch_scaled(const Monomial& x, const Monomial& s, long k, long order, int base_texp = 2);

/// (a; base)_inf for val(a) >= 1 (or a = 0). Throws FormalDivergence otherwise.
TSeries poch_inf(const Monomial& a, long order, int base_texp = 2);
TSeries poch_inf(const PochhammerArg& a, long order);

/// (a; base)_inf allowing finitely many factors of nonpositive valuation, which are
/// multiplied out exactly. A factor equal to zero makes the product exactly zero.
TSeries poch_inf_laurent(const Monomial& a, long order, int base_texp = 2);
/// 1 / (a; base)_inf, same admissibility as poch_inf_laurent.
TSeries poch_inf_recip_laurent(const Monomial& a, long order, int base_texp = 2);

/// (a_1, ..., a_r)_k; k == nullopt means k = infinity.
TSeries poch_multi(const std::vector<PochhammerArg>& args, std::optional<long> k, long order);

/// Gaussian polynomial [n, k] in base t^base_texp; zero when k < 0 or k > n.
TSeries qbinom(long n, long k, int base_texp = 2);

/// (base, z, base/z; base)_inf with base = t^modulus_texp. Requires 0 < val(z) < modulus.
TSeries triple_product(const Monomial& z, int modulus_texp, long order);

struct SumWindow {
  long lo = 0;
  long hi = 16;
  bool adaptive = true;
  int stall_cap = 3;

  /// Window with the same lower end and `factor` times as many terms (bilateral windows
  /// scale both ends).
  SumWindow scaled(long factor) const;
};

using TermFn = std::function<TSeries(long n)>;

struct SumStats {
  long terms = 0;
  long lo_used = 0;
  long hi_used = 0;
};

/// Sum over n >= window.lo of term(n), truncated at order. Terms lo..hi are always summed;
/// adaptive windows then continue until stall_cap consecutive terms have valuation above
/// order with nondecreasing valuations. Throws FormalDivergence if that never happens
/// within 4*stall_cap extensions.
TSeries sum_unilateral(const TermFn& term, const SumWindow& window, long order,
                       SumStats* stats = nullptr, bool reverse = false);

/// Sum over all integers n; the stop rule is applied independently upward from 0 and
/// downward from -1.
TSeries sum_bilateral(const TermFn& term, const SumWindow& window, long order,
                      SumStats* stats = nullptr, bool reverse = false);

}  // namespace baileykit
