#include "liealg/scalar.hpp"

#include "liealg/errors.hpp"

namespace liealg {

Scalar Scalar::variable(const std::string &name) { return Scalar(RatFunc(Poly::variable(name))); }

RatFunc Scalar::as_ratfunc() const {
  if (const auto *q = std::get_if<Rational>(&value_))
    return RatFunc(*q);
  return std::get<RatFunc>(value_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto &v) { return v.is_zero(); }, value_);
}

std::set<std::string> Scalar::variables() const {
  if (is_rational())
    return {};
  const RatFunc &f = std::get<RatFunc>(value_);
  std::set<std::string> out = f.numerator().variables();
  const auto den = f.denominator().variables();
  out.insert(den.begin(), den.end());
  return out;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto &v) { return Scalar(-v); }, value_);
}

Scalar operator+(const Scalar &lhs, const Scalar &rhs) {
  if (lhs.is_rational() && rhs.is_rational())
    return lhs.as_rational() + rhs.as_rational();
  if (lhs.is_zero())
    return rhs;
  if (rhs.is_zero())
    return lhs;
  return lhs.as_ratfunc() + rhs.as_ratfunc();
}

Scalar operator-(const Scalar &lhs, const Scalar &rhs) { return lhs + (-rhs); }

Scalar operator*(const Scalar &lhs, const Scalar &rhs) {
  if (lhs.is_rational() && rhs.is_rational())
    return lhs.as_rational() * rhs.as_rational();
  return lhs.as_ratfunc() * rhs.as_ratfunc();
}

Scalar operator/(const Scalar &lhs, const Scalar &rhs) {
  if (rhs.is_zero())
    throw DivisionByZero();
  if (lhs.is_rational() && rhs.is_rational())
    return lhs.as_rational() / rhs.as_rational();
  return lhs.as_ratfunc() / rhs.as_ratfunc();
}

Scalar Scalar::pow(unsigned exponent) const {
  return std::visit([exponent](const auto &v) { return Scalar(v.pow(exponent)); }, value_);
}

Rational Scalar::substitute(const Assignment &assignment) const {
  if (const auto *q = std::get_if<Rational>(&value_))
    return *q;
  return std::get<RatFunc>(value_).evaluate(assignment);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto &v) { return v.to_string(); }, value_);
}

namespace {

Scalar compose_poly(const Poly &p, const std::map<std::string, Scalar> &values) {
  Scalar out;
  for (const auto &[monomial, coefficient] : p.terms()) {
    Scalar term = coefficient;
    for (const auto &[name, exponent] : monomial.factors()) {
      auto it = values.find(name);
      term *= (it == values.end() ? Scalar::variable(name) : it->second).pow(exponent);
    }
    out += term;
  }
  return out;
}

} // namespace

Scalar Scalar::compose(const std::map<std::string, Scalar> &values) const {
  if (is_rational())
    return *this;
  const RatFunc f = as_ratfunc();
  return compose_poly(f.numerator(), values) / compose_poly(f.denominator(), values);
}

} // namespace liealg
