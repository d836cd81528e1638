#pragma once

#include "liealg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

using Assignment = std::map<std::string, Rational>;

/// A power product of named indeterminates. Factors are kept sorted by name with
/// strictly positive exponents; the empty monomial is 1.
class Monomial {
public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(const std::string &name, std::uint32_t exponent = 1);

  const std::vector<Factor> &factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree(const std::string &name) const;
  std::uint32_t total_degree() const;

  bool divides(const Monomial &other) const;
  /// Requires divides(other) to hold for `divisor`.
  Monomial quotient(const Monomial &divisor) const;
  Monomial without(const std::string &name) const;

  friend Monomial operator*(const Monomial &lhs, const Monomial &rhs);
  friend bool operator==(const Monomial &, const Monomial &) = default;

  std::string to_string() const;

private:
  std::vector<Factor> factors_;
};

/// Lexicographic comparison; variables earlier in name order dominate.
/// Returns <0, 0, >0.
int lex_compare(const Monomial &lhs, const Monomial &rhs);

struct MonomialGreater {
  bool operator()(const Monomial &lhs, const Monomial &rhs) const { return lex_compare(lhs, rhs) > 0; }
};

/// Multivariate polynomial over Q in named indeterminates, terms stored leading-first.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialGreater>;

  Poly() = default;
  Poly(const Rational &constant);
  Poly(long constant) : Poly(Rational(constant)) {}
  static Poly variable(const std::string &name);
  static Poly term(const Rational &coefficient, const Monomial &monomial);

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero for the zero polynomial).
  Rational constant_value() const;
  bool is_single_term() const { return terms_.size() == 1; }
  const Monomial &leading_monomial() const { return terms_.begin()->first; }
  const Rational &leading_coefficient() const { return terms_.begin()->second; }

  std::set<std::string> variables() const;
  bool contains(const std::string &name) const;
  std::uint32_t degree(const std::string &name) const;
  /// Coefficients with respect to `name`: degree -> coefficient (free of `name`).
  std::map<std::uint32_t, Poly> collect(const std::string &name) const;

  Poly operator-() const;
  Poly &operator+=(const Poly &rhs);
  Poly &operator-=(const Poly &rhs);
  Poly &operator*=(const Poly &rhs);
  Poly scaled(const Rational &factor) const;
  Poly pow(unsigned exponent) const;

  friend Poly operator+(Poly lhs, const Poly &rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly &rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly &lhs, const Poly &rhs);
  friend bool operator==(const Poly &, const Poly &) = default;

  /// Throws MissingBinding if a variable of this polynomial is unbound.
  Rational evaluate(const Assignment &assignment) const;

  std::string to_string() const;

private:
  void add_term(const Monomial &monomial, const Rational &coefficient);

  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a. Requires b != 0.
std::optional<Poly> divide_exact(const Poly &a, const Poly &b);

/// Monic (leading coefficient 1) greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly &a, const Poly &b);

/// Divides by the leading coefficient.
Poly make_monic(const Poly &p);

} // namespace liealg
