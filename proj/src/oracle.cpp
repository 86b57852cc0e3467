#include "baileykit/oracle.hpp"

#include <exception>

namespace baileykit {

std::vector<Integer> count_partitions(const PartitionSpec& spec, long n_max) {
  std::vector<Integer> out(static_cast<std::size_t>(std::max<long>(n_max, -1) + 1), 0);
  if (n_max < 0) return out;
  if (!spec.min_difference) {
    out[0] = 1;
    for (long part = 1; part <= n_max; ++part) {
      if (!spec.allowed(part)) continue;
      for (long n = part; n <= n_max; ++n) out[n] += out[n - part];
    }
    return out;
  }
  // top[n][j]: partitions of n whose largest part is exactly j.
  const long d = *spec.min_difference;
  std::vector<std::vector<Integer>> top(n_max + 1, std::vector<Integer>(n_max + 1, 0));
  out[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    for (long j = 1; j <= n; ++j) {
      if (!spec.allowed(j)) continue;
      Integer count = n == j ? 1 : 0;
      for (long i = 1; i <= j - d && i <= n - j; ++i) count += top[n - j][i];
      top[n][j] = count;
      out[n] += count;
    }
  }
  return out;
}

TSeries pentagonal_expansion(long order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max<long>(order, -1) + 1), 0);
  for (long j = 0;; ++j) {
    bool any = false;
    for (long s : {j, -j - 1}) {
      const long texp = s * (3 * s - 1);
      if (texp <= order) {
        coeffs[texp] += (s % 2 == 0) ? 1 : -1;
        any = true;
      }
    }
    if (!any) break;
  }
  return TSeries::from_coeffs(0, std::move(coeffs), order);
}

ResummationReport resummation_check(const IdentityInstance& inst) {
  ResummationReport r;
  try {
    const Sides base = build_sides(inst);
    BuildOptions doubled;
    doubled.window_scale = 2;
    BuildOptions reversed;
    reversed.reverse = true;
    if (!same_coefficients(base, build_sides(inst, doubled), inst.order)) {
      r.identical = false;
      r.detail = "doubled windows changed coefficients";
    } else if (!same_coefficients(base, build_sides(inst, reversed), inst.order)) {
      r.identical = false;
      r.detail = "reversed summation changed coefficients";
    }
  } catch (const std::exception& e) {
    r.identical = false;
    r.detail = e.what();
  }
  return r;
}

ResummationReport resummation_check(const TermFn& term, const SumWindow& window, long order) {
  ResummationReport r;
  const TSeries base = sum_unilateral(term, window, order);
  SumWindow wide = window;
  wide.hi = window.lo + (window.hi - window.lo + 1) * 2 - 1;
  if (!(sum_unilateral(term, wide, order) == base)) {
    r.identical = false;
    r.detail = "doubled window changed coefficients";
  } else if (!(sum_unilateral(term, window, order, nullptr, true) == base)) {
    r.identical = false;
    r.detail = "reversed summation changed coefficients";
  }
  return r;
}

}  // namespace baileykit
