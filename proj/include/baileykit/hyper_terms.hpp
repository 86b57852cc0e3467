#pragma once

#include <map>
#include <vector>

#include "baileykit/monomial.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

/// One factor (x/s; t^base_texp)_{stride*k} s^{stride*k} of a hypergeometric summand, or its
/// reciprocal. With s = 1 this is the ordinary (x; base)_{stride*k}; s = 0 gives the limit
/// (-x)^{stride*k} base^{C(stride*k, 2)}.
struct PochFactor {
  Monomial x;
  bool reciprocal = false;
  Monomial scale = Monomial::constant(1);
  int stride = 1;
  int base_texp = 2;
};

/// A factor 1 - x base^k of the summand, such as the top of a very-well-poised factor.
struct LinearFactor {
  Monomial x;
  int base_texp = 2;
};

/// Summands z^k prod_i factor_i(k) prod_j linear_j(k) of a hypergeometric series, produced by multiplying term
/// ratios outward from k = 0 instead of rebuilding every Pochhammer symbol. Values are
/// truncated at `order`; a step that multiplies by a factor of negative valuation (for example
/// 1/z on the way down) lowers the known order, so callers should read TSeries::order() and
/// retry at a larger order when it falls short. Once a step hits a vanishing factor all later
/// summands in that direction are exactly zero. A vanishing reciprocal factor throws
/// ZeroSeriesInversion.
class HyperTerms {
 public:
  HyperTerms(std::vector<PochFactor> factors, Monomial z, long order,
             std::vector<LinearFactor> linear = {});

  /// Summand k. Sequential access in either direction costs one step per call.
  const TSeries& operator()(long k);

 private:
  TSeries step(const TSeries& v, long from, bool up) const;
  bool linear_vanishes(long k) const;
  const TSeries& advance(long k);

  std::vector<PochFactor> factors_;
  std::vector<LinearFactor> linear_;
  Monomial z_;
  long order_;
  // Running products; a vanishing linear factor is left out of them and applied on output.
  std::map<long, TSeries> cache_;
  TSeries zero_;
};

}  // namespace baileykit
