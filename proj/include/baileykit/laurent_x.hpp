#pragma once

#include <map>
#include <string>

#include "baileykit/series.hpp"

namespace baileykit {

/// Laurent polynomial in x whose coefficients are truncated series in t.
/// Zero coefficients are never stored.
class LaurentPolyX {
 public:
  LaurentPolyX() = default;

  /// Adds c * x^xexp.
  void add(long xexp, const TSeries& c);
  /// Coefficient of x^xexp, an exact zero when absent.
  TSeries coeff(long xexp) const;
  const std::map<long, TSeries>& terms() const { return terms_; }

  /// Smallest truncation order among the coefficients (kExactOrder when empty).
  long order() const;
  LaurentPolyX truncated(long order) const;
  LaurentPolyX scaled(const TSeries& c) const;
  LaurentPolyX& operator+=(const LaurentPolyX& o);

  bool operator==(const LaurentPolyX& o) const = default;
  std::string to_string() const;

 private:
  std::map<long, TSeries> terms_;
};

}  // namespace baileykit
