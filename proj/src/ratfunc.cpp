#include "liealg/ratfunc.hpp"

#include "liealg/errors.hpp"

namespace liealg {

RatFunc::RatFunc(const Poly &numerator, const Poly &denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (denominator_.is_zero())
    throw DivisionByZero();
  normalize();
}

void RatFunc::normalize() {
  if (numerator_.is_zero()) {
    denominator_ = Poly(1);
    return;
  }
  if (!denominator_.is_constant()) {
    const Poly g = gcd(numerator_, denominator_);
    if (!g.is_constant()) {
      numerator_ = *divide_exact(numerator_, g);
      denominator_ = *divide_exact(denominator_, g);
    }
  }
  const Rational lead = denominator_.leading_coefficient();
  if (!lead.is_one()) {
    numerator_ = numerator_.scaled(Rational(1) / lead);
    denominator_ = denominator_.scaled(Rational(1) / lead);
  }
}

Rational RatFunc::constant_value() const { return numerator_.constant_value() / denominator_.constant_value(); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

RatFunc operator+(const RatFunc &lhs, const RatFunc &rhs) {
  if (lhs.denominator_ == rhs.denominator_)
    return RatFunc(lhs.numerator_ + rhs.numerator_, lhs.denominator_);
  return RatFunc(lhs.numerator_ * rhs.denominator_ + rhs.numerator_ * lhs.denominator_,
                 lhs.denominator_ * rhs.denominator_);
}

RatFunc operator-(const RatFunc &lhs, const RatFunc &rhs) { return lhs + (-rhs); }

RatFunc operator*(const RatFunc &lhs, const RatFunc &rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return RatFunc();
  return RatFunc(lhs.numerator_ * rhs.numerator_, lhs.denominator_ * rhs.denominator_);
}

RatFunc operator/(const RatFunc &lhs, const RatFunc &rhs) {
  if (rhs.is_zero())
    throw DivisionByZero();
  return RatFunc(lhs.numerator_ * rhs.denominator_, lhs.denominator_ * rhs.numerator_);
}

RatFunc RatFunc::pow(unsigned exponent) const {
  RatFunc out;
  out.numerator_ = numerator_.pow(exponent);
  out.denominator_ = denominator_.pow(exponent);
  return out;
}

Rational RatFunc::evaluate(const Assignment &assignment) const {
  const Rational den = denominator_.evaluate(assignment);
  if (den.is_zero())
    throw DivisionByZero();
  return numerator_.evaluate(assignment) / den;
}

namespace {

// A denominator that can follow '/' without parentheses: a bare power product.
bool bare_factor(const Poly &p) {
  return p.is_single_term() && p.leading_coefficient().is_one() && p.leading_monomial().factors().size() == 1;
}

} // namespace

std::string RatFunc::to_string() const {
  if (denominator_.is_constant() && denominator_.constant_value().is_one())
    return numerator_.to_string();
  std::string num = numerator_.to_string();
  if (!numerator_.is_single_term())
    num = "(" + num + ")";
  std::string den = denominator_.to_string();
  if (!bare_factor(denominator_))
    den = "(" + den + ")";
  return num + "/" + den;
}

} // namespace liealg
