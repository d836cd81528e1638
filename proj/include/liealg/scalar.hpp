#pragma once

#include "liealg/ratfunc.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace liealg {

/// Field element used everywhere structure coefficients appear: either a plain
/// rational (numeric sampling) or a rational function in named parameters
/// (symbolic verification). Binary operations on two rationals stay rational;
/// anything else promotes to RatFunc.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : value_(Rational(value)) {}
  Scalar(const Rational &value) : value_(value) {}
  Scalar(const RatFunc &value) : value_(value) {}
  static Scalar variable(const std::string &name);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational &as_rational() const { return std::get<Rational>(value_); }
  RatFunc as_ratfunc() const;

  bool is_zero() const;
  /// Indeterminates appearing in the value.
  std::set<std::string> variables() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar &lhs, const Scalar &rhs);
  friend Scalar operator-(const Scalar &lhs, const Scalar &rhs);
  friend Scalar operator*(const Scalar &lhs, const Scalar &rhs);
  /// Throws DivisionByZero when rhs is identically zero.
  friend Scalar operator/(const Scalar &lhs, const Scalar &rhs);
  Scalar &operator+=(const Scalar &rhs) { return *this = *this + rhs; }
  Scalar &operator-=(const Scalar &rhs) { return *this = *this - rhs; }
  Scalar &operator*=(const Scalar &rhs) { return *this = *this * rhs; }
  Scalar &operator/=(const Scalar &rhs) { return *this = *this / rhs; }

  /// Field equality: true iff lhs - rhs is zero.
  friend bool operator==(const Scalar &lhs, const Scalar &rhs) { return (lhs - rhs).is_zero(); }

  Scalar pow(unsigned exponent) const;

  /// Exact evaluation; throws DivisionByZero or MissingBinding.
  Rational substitute(const Assignment &assignment) const;
  /// Replaces bound indeterminates by scalars; unbound ones are kept.
  /// Throws DivisionByZero if the denominator becomes identically zero.
  Scalar compose(const std::map<std::string, Scalar> &values) const;

  /// Rendering in the scalar grammar accepted by parse_scalar.
  std::string to_string() const;

private:
  std::variant<Rational, RatFunc> value_;
};

/// Parses the scalar grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := int | ident | '(' expr ')'
///
/// A result without indeterminates is returned as a Rational. When `allowed` is
/// non-empty, identifiers outside it are rejected. Throws ParseError (with byte
/// offset) or DivisionByZero for a division by an identically-zero expression.
Scalar parse_scalar(std::string_view text, const std::set<std::string> &allowed = {});

} // namespace liealg
