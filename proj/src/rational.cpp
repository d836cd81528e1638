#include "liealg/rational.hpp"

#include "liealg/errors.hpp"

namespace liealg {

Rational::Rational(const mpz_class &numerator, const mpz_class &denominator) {
  if (denominator == 0)
    throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational &Rational::operator+=(const Rational &rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  Rational out;
  mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return out;
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace liealg
