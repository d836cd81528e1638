#include "liealg/sampling.hpp"

#include "liealg/errors.hpp"

namespace liealg {

bool Constraint::holds(const Assignment &point) const {
  Rational value;
  try {
    value = expression.substitute(point);
  } catch (const DivisionByZero &) {
    return false;
  }
  switch (relation) {
  case Relation::NonZero:
    return !value.is_zero();
  case Relation::Positive:
    return value.sign() > 0;
  case Relation::Negative:
    return value.sign() < 0;
  }
  return false;
}

std::string Constraint::to_string() const {
  switch (relation) {
  case Relation::NonZero:
    return expression.to_string() + " != 0";
  case Relation::Positive:
    return expression.to_string() + " > 0";
  case Relation::Negative:
    return expression.to_string() + " < 0";
  }
  return {};
}

Constraint nonzero(const Scalar &expression) { return {expression, Relation::NonZero}; }
Constraint positive(const Scalar &expression) { return {expression, Relation::Positive}; }
Constraint negative(const Scalar &expression) { return {expression, Relation::Negative}; }

bool satisfies_all(const std::vector<Constraint> &constraints, const Assignment &point) {
  for (const auto &c : constraints)
    if (!c.holds(point))
      return false;
  return true;
}

Rational Sampler::rational() {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 10);
  const long p = num(rng_);
  const long q = den(rng_);
  return Rational(mpz_class(p), mpz_class(q));
}

std::size_t Sampler::index(std::size_t size) {
  std::uniform_int_distribution<std::size_t> dist(0, size - 1);
  return dist(rng_);
}

Assignment Sampler::point(const std::vector<std::string> &params) {
  Assignment out;
  for (const auto &name : params)
    out[name] = rational();
  return out;
}

std::optional<Assignment> Sampler::point_in(const std::vector<std::string> &params,
                                            const std::vector<Constraint> &constraints, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Assignment p = point(params);
    if (satisfies_all(constraints, p))
      return p;
  }
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace liealg
