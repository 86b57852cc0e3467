#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "baileykit/monomial.hpp"
#include "baileykit/series.hpp"

namespace baileykit {

/// Evaluates f at increasing working orders until the result is known up to `order`.
/// Non-exact results are truncated to `order`.
TSeries to_order(long order, const std::function<TSeries(long working_order)>& f);

/// An integer-indexed family of series, n -> value known up to a requested order.
/// Values are memoized per n; the cache is internally synchronized, so copies may be
/// shared between threads and behave exactly like the uncached generator.
class SeriesSequence {
 public:
  using Generator = std::function<TSeries(long n, long order)>;

  SeriesSequence() = default;
  explicit SeriesSequence(Generator gen);

  TSeries operator()(long n, long order) const;
  explicit operator bool() const { return static_cast<bool>(state_); }

 private:
  struct State {
    Generator gen;
    std::mutex mutex;
    std::map<long, TSeries> cache;
  };
  std::shared_ptr<State> state_;
};

/// Bilateral Bailey pair related to a = B^m and base B = t^base_texp:
///   beta_n = sum_{r <= n} alpha_r / ((B;B)_{n-r} (aB;B)_{n+r}),
/// where the sum is finite because 1/(aB;B)_{n+r} = 0 for n + r + m < 0.
struct BaileyPair {
  long m = 0;
  int base_texp = 2;
  SeriesSequence alpha;
  SeriesSequence beta;
  /// beta_n is identically zero for n < beta_lo.
  long beta_lo = 0;
  std::string label;

  /// Support law for shifted pairs: beta_n = 0 whenever 2n + m < 0.
  bool beta_vanishes(long n) const { return n < beta_lo || 2 * n + m < 0; }
};

/// Outcome of checking a defining relation on a range of indices.
struct RelationCheck {
  bool pass = true;
  long n_lo = 0;
  long n_hi = 0;
  long order = 0;
  std::optional<long> first_bad_n;
  std::optional<long> first_bad_texp;
  Rational expected;
  Rational actual;
  /// Indices skipped because the checked formula has a pole there.
  std::vector<long> singular;
  /// Indices where an inverse relation recovered a different, equally valid preimage.
  std::vector<long> non_unique;

  std::string to_string() const;
};

/// alpha_n = (-1)^n B^{C(n,2)}, beta_n = (B;B)_m (-1)^n B^{C(n,2)} [m+n, m+2n]_B.
BaileyPair shifted_pair(long m, int base_texp = 2);

/// The unit pair at a = 1 (m = 0) and a = q (m = 1), taken in its shifted form.
/// Throws UnsupportedShift for other m.
BaileyPair unit_pair(long m);

/// Recomputes beta_n from alpha through the defining sum and compares for n in range.
RelationCheck check_pair(const BaileyPair& p, long n_lo, long n_hi, long order);

/// The bilateral Bailey lemma with parameters rho1, rho2 (either may be INFINITY).
BaileyPair apply_lemma(const BaileyPair& p, const Monomial& rho1, const Monomial& rho2);

/// The lemma at rho1, rho2 -> infinity: alpha'_n = B^{n^2} a^n alpha_n.
BaileyPair apply_s1(const BaileyPair& p);

/// The lemma at rho1 = sqrt(aB), rho2 -> infinity.
BaileyPair apply_s2(const BaileyPair& p);

/// Substitutes B -> B^k in both sequences; a pair related to (a, B) becomes related
/// to (a^k, B^k).
BaileyPair scale_pair_base(const BaileyPair& p, int k);

/// Quadratic change of base: p must be related to (a^2, B^2); the result is related to
/// (a, B). b may be INFINITY.
BaileyPair change_base(const BaileyPair& p, const Monomial& b);

/// Checks that the classical Bailey inversion at a = q relates the two sequences:
///   b_m = sum_{j=0}^m a_j / ((q)_{m-j} (q^2)_{m+j})   and
///   a_m = (1 - q^{2m+1})/(1 - q) sum_{j=0}^m (-1)^{m-j} q^{C(m-j,2)} (q)_{m+j}/(q)_{m-j} b_j.
/// Reports the first index at which either direction disagrees.
RelationCheck classical_inversion_check(const SeriesSequence& a_seq, const SeriesSequence& b_seq,
                                        long m_max, long order);

}  // namespace baileykit
