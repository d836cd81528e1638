#pragma once

#include "liealg/scalar.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace liealg {

enum class Relation { NonZero, Positive, Negative };

/// A domain constraint `expression <relation> 0` over named parameters.
/// Sign relations are only meaningful at rational points.
struct Constraint {
  Scalar expression;
  Relation relation = Relation::NonZero;

  /// False when the expression cannot be evaluated (zero denominator).
  /// Throws MissingBinding for unbound parameters.
  bool holds(const Assignment &point) const;
  std::string to_string() const;
};

Constraint nonzero(const Scalar &expression);
Constraint positive(const Scalar &expression);
Constraint negative(const Scalar &expression);

bool satisfies_all(const std::vector<Constraint> &constraints, const Assignment &point);

/// Deterministic source of random rational points. Values are p/q with
/// p in [-20, 20] and q in [1, 10].
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  std::size_t index(std::size_t size);

  Assignment point(const std::vector<std::string> &params);

  /// Rejection sampling against `constraints`; nullopt after `max_attempts` misses.
  std::optional<Assignment> point_in(const std::vector<std::string> &params,
                                     const std::vector<Constraint> &constraints, std::size_t max_attempts = 1000);

private:
  std::mt19937_64 rng_;
};

/// Mixes a base seed with a job identifier so that parallel jobs get
/// independent, reproducible streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

} // namespace liealg
