#pragma once

#include <functional>
#include <optional>
#include <string>

#include "baileykit/bailey.hpp"
#include "baileykit/monomial.hpp"

namespace baileykit {

/// WP-bilateral Bailey pair related to a and the WP parameter alpha (base q):
///   beta_n = sum_{r <= n} (alpha/a)_{n-r} (alpha)_{n+r} / ((q)_{n-r} (aq)_{n+r}) alpha_r.
/// The sum is finite either because a = q^m (then 1/(aq)_{n+r} = 0 for n + r + m < 0)
/// or because alpha_r vanishes below alpha_lo.
struct WPBaileyPair {
  Monomial a;
  /// Set when a = q^m.
  std::optional<long> m;
  Monomial alpha_param;
  SeriesSequence alpha;
  SeriesSequence beta;
  std::optional<long> alpha_lo;
  /// beta_n is identically zero for n < beta_lo.
  long beta_lo = 0;
  std::string label;
};

/// WP pairs indexed by their WP parameter, all related to the same a.
struct WPFamily {
  Monomial a;
  std::optional<long> m;
  std::function<WPBaileyPair(const Monomial& alpha)> make;
  std::string label;

  WPBaileyPair operator()(const Monomial& alpha) const { return make(alpha); }
};

/// The generic value of a used by the unit WP pair when none is supplied.
Monomial default_wp_unit_a();

/// Unit WP pair with beta_n = delta_{n+m,0}. The closed form for alpha_n has poles at
/// a = q^j, so a must be a generic monomial (DegenerateParameter otherwise), as must alpha.
WPBaileyPair wp_unit_pair(long m, const Monomial& alpha, const Monomial& a = default_wp_unit_a());
WPFamily wp_unit_family(long m, const Monomial& a = default_wp_unit_a());

/// WP-shifted pair related to a = q^m:
///   alpha_n = (q^m/alpha)_n / (alpha q^{-m})_n (alpha q^{-m})^n,
///   beta_n  = (q)_m (q/alpha)_{m-n} (alpha^2 q^{-2m})_{m+2n}
///             / ((q/alpha, alpha q^{-m})_m (alpha q^{1-m})_{m+n}) [m+n, m+2n] (q^m/alpha)^n.
WPBaileyPair wp_shifted_pair(long m, const Monomial& alpha);

/// wp_shifted_pair(m, alpha) for alpha != 0 and the classical shifted pair at alpha = 0.
WPFamily wp_shifted_family(long m);

/// A classical shifted pair viewed as a WP pair with alpha = 0.
WPBaileyPair as_wp_pair(const BaileyPair& p);

/// Recomputes beta_n through the WP defining sum and compares for n in range.
RelationCheck check_wp_pair(const WPBaileyPair& p, long n_lo, long n_hi, long order);

/// First WP lemma: the family is evaluated at c = alpha rho1 rho2 / (aq) and the result is
/// related to alpha. At alpha = 0 the rho parameters may be INFINITY.
WPBaileyPair wp_lemma_first(const WPFamily& family, const Monomial& rho1, const Monomial& rho2,
                            const Monomial& alpha);
WPFamily wp_lemma_first_family(const WPFamily& family, const Monomial& rho1, const Monomial& rho2);

/// Second WP lemma: the family is evaluated at q a^2 / alpha.
WPBaileyPair wp_lemma_second(const WPFamily& family, const Monomial& alpha);
WPFamily wp_lemma_second_family(const WPFamily& family);

/// Recovers alpha_n from beta through the inverse WP relation.
/// For generic a the recovered alpha_n must equal p.alpha(n) on the range.
/// For a = q^m the forward relation is not injective (alpha_r and alpha_{-m-r} enter together),
/// so the inverse kernel is taken as the limit a -> q^m term by term and the recovered
/// sequence must map back to beta on the range; indices where it differs from p.alpha are
/// listed in RelationCheck::non_unique and poles of the limit in RelationCheck::singular.
RelationCheck wp_inversion_check(const WPBaileyPair& p, long n_lo, long n_hi, long order);

}  // namespace baileykit
