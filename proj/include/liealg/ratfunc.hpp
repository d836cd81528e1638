#pragma once

#include "liealg/poly.hpp"

#include <string>

namespace liealg {

/// Element of Q(p1, ..., pm). Canonical form: numerator and denominator coprime,
/// denominator monic in lexicographic order; zero is 0/1.
class RatFunc {
public:
  RatFunc() : denominator_(1) {}
  RatFunc(const Poly &numerator) : numerator_(numerator), denominator_(1) {}
  RatFunc(const Rational &constant) : numerator_(constant), denominator_(1) {}
  /// Throws DivisionByZero when `denominator` is the zero polynomial.
  RatFunc(const Poly &numerator, const Poly &denominator);

  const Poly &numerator() const { return numerator_; }
  const Poly &denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_constant() const { return numerator_.is_constant() && denominator_.is_constant(); }
  Rational constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc &lhs, const RatFunc &rhs);
  friend RatFunc operator-(const RatFunc &lhs, const RatFunc &rhs);
  friend RatFunc operator*(const RatFunc &lhs, const RatFunc &rhs);
  /// Throws DivisionByZero when rhs is zero.
  friend RatFunc operator/(const RatFunc &lhs, const RatFunc &rhs);
  friend bool operator==(const RatFunc &, const RatFunc &) = default;

  RatFunc pow(unsigned exponent) const;

  /// Evaluates the denominator first; throws DivisionByZero or MissingBinding.
  Rational evaluate(const Assignment &assignment) const;

  std::string to_string() const;

private:
  void normalize();

  Poly numerator_;
  Poly denominator_;
};

} // namespace liealg
