#pragma once

#include <string>
#include <vector>

#include "baileykit/corpus.hpp"
#include "baileykit/laurent_x.hpp"
#include "baileykit/monomial.hpp"

namespace baileykit {

/// Parameters of the bilateral 8psi8 transformation obtained from two WP-lemma steps
/// applied to the unit WP pair.
struct T8psi8Params {
  long m = 0;
  Monomial a;
  Monomial alpha;
  Monomial rho1;
  Monomial rho2;
  Monomial mu1;
  Monomial mu2;
};

/// The pieces of the transformation at a fixed working order:
///   lhs = prefactor * m_factor * rhs_sum, with lambda = alpha mu1 mu2 / (a q).
struct T8psi8Parts {
  TSeries lhs;
  TSeries prefactor;
  TSeries m_factor;
  TSeries rhs_sum;
  Monomial lambda;
  long terms = 0;
};

/// With cancel_pairs, numerator and denominator parameters that coincide are removed
/// before evaluation, which is how specializations such as mu2 = aq/rho2 are taken.
T8psi8Parts t8psi8_parts(const T8psi8Params& p, long working_order, const BuildOptions& opt = {},
                         bool cancel_pairs = false);

/// Summand k of the left 8psi8.
TSeries t8psi8_lhs_term(const T8psi8Params& p, long k, long order);

/// C_n(x; beta | q) = sum_{k=0}^n (beta)_k (beta)_{n-k} / ((q)_k (q)_{n-k}) x^{2k-n}.
LaurentPolyX qultra_poly(long n, const Monomial& beta, long order);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// C_n(x; c) expanded in C_{n-2k}(x; beta) through the connection coefficients.
CheckResult connection_check(long n, const Monomial& beta, const Monomial& c, long order);

/// Specializations of the 8psi8 transformation that reproduce the 1psi1 and 6psi6
/// summations, each at a finite m large enough that truncation hides the m-dependence.
CheckResult psi11_route(const Monomial& b, const Monomial& c, const Monomial& z, long order);
CheckResult psi66_route(const Monomial& a, const Monomial& b, const Monomial& c,
                        const Monomial& d, const Monomial& e, long order);
/// Shifting k -> k - m maps the left 8psi8 onto a very-well-poised series in a q^{-2m}:
/// compares summand k - m with summand -m times the shifted summand k, for k < terms.
CheckResult index_shift_check(const T8psi8Params& p, long terms, long order);

/// The routes above at their documented assignments.
std::vector<CheckResult> degeneration_suite(long order = 50);

}  // namespace baileykit
