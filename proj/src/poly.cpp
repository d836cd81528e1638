#include "liealg/poly.hpp"

#include "liealg/errors.hpp"

#include <algorithm>
#include <cassert>

namespace liealg {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(const std::string &name, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0)
    m.factors_.emplace_back(name, exponent);
  return m;
}

std::uint32_t Monomial::degree(const std::string &name) const {
  for (const auto &[var, exp] : factors_)
    if (var == name)
      return exp;
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t total = 0;
  for (const auto &f : factors_)
    total += f.second;
  return total;
}

bool Monomial::divides(const Monomial &other) const {
  std::size_t j = 0;
  for (const auto &[var, exp] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < var)
      ++j;
    if (j == other.factors_.size() || other.factors_[j].first != var || other.factors_[j].second < exp)
      return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial &divisor) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto &[var, exp] : factors_) {
    std::uint32_t sub = 0;
    if (j < divisor.factors_.size() && divisor.factors_[j].first == var)
      sub = divisor.factors_[j++].second;
    assert(sub <= exp);
    if (exp > sub)
      out.factors_.emplace_back(var, exp - sub);
  }
  assert(j == divisor.factors_.size());
  return out;
}

Monomial Monomial::without(const std::string &name) const {
  Monomial out;
  for (const auto &f : factors_)
    if (f.first != name)
      out.factors_.push_back(f);
  return out;
}

Monomial operator*(const Monomial &lhs, const Monomial &rhs) {
  Monomial out;
  out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.factors_.size() || j < rhs.factors_.size()) {
    if (j == rhs.factors_.size() || (i < lhs.factors_.size() && lhs.factors_[i].first < rhs.factors_[j].first)) {
      out.factors_.push_back(lhs.factors_[i++]);
    } else if (i == lhs.factors_.size() || rhs.factors_[j].first < lhs.factors_[i].first) {
      out.factors_.push_back(rhs.factors_[j++]);
    } else {
      out.factors_.emplace_back(lhs.factors_[i].first, lhs.factors_[i].second + rhs.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto &[var, exp] : factors_) {
    if (!out.empty())
      out += '*';
    out += var;
    if (exp != 1)
      out += '^' + std::to_string(exp);
  }
  return out.empty() ? "1" : out;
}

int lex_compare(const Monomial &lhs, const Monomial &rhs) {
  const auto &a = lhs.factors();
  const auto &b = rhs.factors();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second)
        return a[i].second > b[j].second ? 1 : -1;
      ++i;
      ++j;
    } else {
      // The side holding the name-smaller variable has the larger power of it.
      return a[i].first < b[j].first ? 1 : -1;
    }
  }
  if (i < a.size())
    return 1;
  if (j < b.size())
    return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational &constant) {
  if (!constant.is_zero())
    terms_.emplace(Monomial(), constant);
}

Poly Poly::variable(const std::string &name) { return term(Rational(1), Monomial::variable(name)); }

Poly Poly::term(const Rational &coefficient, const Monomial &monomial) {
  Poly p;
  if (!coefficient.is_zero())
    p.terms_.emplace(monomial, coefficient);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Poly::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto &[m, c] : terms_)
    for (const auto &f : m.factors())
      out.insert(f.first);
  return out;
}

bool Poly::contains(const std::string &name) const {
  for (const auto &[m, c] : terms_)
    if (m.degree(name) > 0)
      return true;
  return false;
}

std::uint32_t Poly::degree(const std::string &name) const {
  std::uint32_t d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m.degree(name));
  return d;
}

std::map<std::uint32_t, Poly> Poly::collect(const std::string &name) const {
  std::map<std::uint32_t, Poly> out;
  for (const auto &[m, c] : terms_)
    out[m.degree(name)].add_term(m.without(name), c);
  return out;
}

void Poly::add_term(const Monomial &monomial, const Rational &coefficient) {
  if (coefficient.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto &[m, c] : out.terms_)
    c = -c;
  return out;
}

Poly &Poly::operator+=(const Poly &rhs) {
  for (const auto &[m, c] : rhs.terms_)
    add_term(m, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &rhs) {
  for (const auto &[m, c] : rhs.terms_)
    add_term(m, -c);
  return *this;
}

Poly operator*(const Poly &lhs, const Poly &rhs) {
  Poly out;
  for (const auto &[ma, ca] : lhs.terms_)
    for (const auto &[mb, cb] : rhs.terms_)
      out.add_term(ma * mb, ca * cb);
  return out;
}

Poly &Poly::operator*=(const Poly &rhs) { return *this = *this * rhs; }

Poly Poly::scaled(const Rational &factor) const {
  if (factor.is_zero())
    return Poly();
  Poly out = *this;
  for (auto &[m, c] : out.terms_)
    c *= factor;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u)
      result *= base;
    exponent >>= 1;
    if (exponent > 0)
      base *= base;
  }
  return result;
}

Rational Poly::evaluate(const Assignment &assignment) const {
  Rational total;
  for (const auto &[m, c] : terms_) {
    Rational value = c;
    for (const auto &[var, exp] : m.factors()) {
      auto it = assignment.find(var);
      if (it == assignment.end())
        throw MissingBinding(var);
      value *= it->second.pow(exp);
    }
    total += value;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    std::string piece;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (m.is_one())
      piece = magnitude.to_string();
    else if (magnitude.is_one())
      piece = m.to_string();
    else
      piece = magnitude.to_string() + "*" + m.to_string();
    if (first)
      out = (c.sign() < 0 ? "-" : "") + piece;
    else
      out += (c.sign() < 0 ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<Poly> divide_exact(const Poly &a, const Poly &b) {
  assert(!b.is_zero());
  if (b.is_constant())
    return a.scaled(Rational(1) / b.constant_value());
  Poly quotient;
  Poly rest = a;
  const Monomial &lead = b.leading_monomial();
  const Rational &lead_coeff = b.leading_coefficient();
  while (!rest.is_zero()) {
    if (!lead.divides(rest.leading_monomial()))
      return std::nullopt;
    Poly step = Poly::term(rest.leading_coefficient() / lead_coeff, rest.leading_monomial().quotient(lead));
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

Poly make_monic(const Poly &p) {
  if (p.is_zero())
    return p;
  return p.scaled(Rational(1) / p.leading_coefficient());
}

namespace {

Poly exact(const Poly &a, const Poly &b) {
  auto q = divide_exact(a, b);
  assert(q.has_value());
  return *q;
}

Poly content_in(const Poly &p, const std::string &var) {
  Poly g;
  for (const auto &[deg, coeff] : p.collect(var)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero())
      break;
  }
  return g;
}

Poly primitive_part_in(const Poly &p, const std::string &var) {
  if (p.is_zero())
    return p;
  return exact(p, content_in(p, var));
}

Poly coefficient_of(const std::map<std::uint32_t, Poly> &collected, std::uint32_t degree) {
  auto it = collected.find(degree);
  return it == collected.end() ? Poly() : it->second;
}

// Pseudo-remainder of a by b viewed as polynomials in `var`.
Poly pseudo_remainder(Poly a, const Poly &b, const std::string &var) {
  const std::uint32_t db = b.degree(var);
  const Poly lead_b = coefficient_of(b.collect(var), db);
  while (!a.is_zero() && a.degree(var) >= db) {
    const std::uint32_t da = a.degree(var);
    const Poly lead_a = coefficient_of(a.collect(var), da);
    a = lead_b * a - lead_a * Poly::term(Rational(1), Monomial::variable(var, da - db)) * b;
  }
  return a;
}

} // namespace

Poly gcd(const Poly &a, const Poly &b) {
  if (a.is_zero())
    return make_monic(b);
  if (b.is_zero())
    return make_monic(a);
  if (a.is_constant() || b.is_constant())
    return Poly(1);

  std::set<std::string> vars = a.variables();
  const std::set<std::string> vb = b.variables();
  vars.insert(vb.begin(), vb.end());
  const std::string &var = *vars.begin();

  if (!a.contains(var))
    return gcd(a, content_in(b, var));
  if (!b.contains(var))
    return gcd(content_in(a, var), b);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly common = gcd(ca, cb);
  Poly p = exact(a, ca);
  Poly q = exact(b, cb);
  if (p.degree(var) < q.degree(var))
    std::swap(p, q);
  while (!q.is_zero()) {
    Poly r = pseudo_remainder(p, q, var);
    p = std::move(q);
    q = primitive_part_in(r, var);
  }
  return make_monic(common * primitive_part_in(p, var));
}

} // namespace liealg
