#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace liealg {

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(const mpz_class &value) : value_(value) {}
  /// Throws DivisionByZero when `denominator` is zero.
  Rational(const mpz_class &numerator, const mpz_class &denominator);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  /// Throws DivisionByZero.
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational &lhs, const Rational &rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned exponent) const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

private:
  mpq_class value_;
};

} // namespace liealg
