#include "baileykit/monomial.hpp"

#include <stdexcept>

namespace baileykit {

Monomial::Monomial(Rational coeff, long texp) : coeff_(std::move(coeff)), texp_(texp) {
  if (coeff_ == 0) texp_ = 0;
}

Monomial Monomial::infinity() {
  Monomial m;
  m.infinite_ = true;
  m.coeff_ = 1;
  return m;
}

long Monomial::valuation() const {
  if (infinite_) return -kExactOrder;
  if (coeff_ == 0) return kExactOrder;
  return texp_;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (infinite_ || o.infinite_) {
    if (is_zero() || o.is_zero()) throw std::domain_error("INFINITY * 0 is undefined");
    return infinity();
  }
  if (coeff_ == 0 || o.coeff_ == 0) return Monomial();
  return Monomial(coeff_ * o.coeff_, texp_ + o.texp_);
}

Monomial Monomial::reciprocal() const {
  if (infinite_) return Monomial();
  if (coeff_ == 0) return infinity();
  return Monomial(1 / coeff_, -texp_);
}

Monomial Monomial::operator/(const Monomial& o) const {
  if ((infinite_ && o.infinite_) || (is_zero() && o.is_zero())) {
    throw std::domain_error("indeterminate monomial quotient");
  }
  return *this * o.reciprocal();
}

Monomial Monomial::pow(long k) const {
  if (k == 0) return Monomial(1, 0);
  if (infinite_ || coeff_ == 0) return k > 0 ? *this : reciprocal().pow(-k);
  Rational c = 1;
  Rational b = k > 0 ? coeff_ : 1 / coeff_;
  unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
  mpz_pow_ui(c.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(c.get_den_mpz_t(), b.get_den_mpz_t(), e);
  c.canonicalize();
  return Monomial(c, texp_ * k);
}

Monomial Monomial::operator-() const {
  if (infinite_) return *this;
  return Monomial(-coeff_, texp_);
}

TSeries Monomial::to_series(long order) const {
  if (infinite_) throw std::domain_error("INFINITY cannot be expanded as a series");
  return TSeries::monomial(coeff_, texp_, order);
}

std::string Monomial::to_string() const {
  if (infinite_) return "inf";
  if (coeff_ == 0) return "0";
  if (texp_ == 0) return coeff_.get_str();
  std::string out;
  if (coeff_ == -1) {
    out = "-";
  } else if (coeff_ != 1) {
    out = coeff_.get_str();
  }
  out += "q";
  if (texp_ % 2 == 0) {
    if (texp_ != 2) out += "^" + std::to_string(texp_ / 2);
  } else {
    out += "^(" + std::to_string(texp_) + "/2)";
  }
  return out;
}

bool Monomial::operator==(const Monomial& o) const {
  return infinite_ == o.infinite_ && coeff_ == o.coeff_ && texp_ == o.texp_;
}

}  // namespace baileykit
