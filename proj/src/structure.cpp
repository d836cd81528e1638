#include "liealg/structure.hpp"

#include "liealg/errors.hpp"

#include <stdexcept>

namespace liealg {

namespace {

using Member = Scalar StructureConstants::*;

constexpr std::array<Member, 14> kMembers = {
    &StructureConstants::lambda, &StructureConstants::alpha, &StructureConstants::beta,
    &StructureConstants::a,      &StructureConstants::b,     &StructureConstants::r,
    &StructureConstants::z1,     &StructureConstants::z2,    &StructureConstants::z3,
    &StructureConstants::z4,     &StructureConstants::w1,    &StructureConstants::w2,
    &StructureConstants::theta1, &StructureConstants::theta2};

Member member_for(std::string_view name) {
  for (std::size_t i = 0; i < kMembers.size(); ++i)
    if (StructureConstants::kNames[i] == name)
      return kMembers[i];
  throw std::out_of_range("unknown structure coefficient '" + std::string(name) + "'");
}

Vector4 vec(const Scalar &x, const Scalar &y, const Scalar &z, const Scalar &w) {
  Vector4 v;
  v.c = {x, y, z, w};
  return v;
}

} // namespace

Scalar &StructureConstants::field(std::string_view name) { return this->*member_for(name); }
const Scalar &StructureConstants::field(std::string_view name) const { return this->*member_for(name); }

bool operator==(const StructureConstants &lhs, const StructureConstants &rhs) {
  for (auto m : kMembers)
    if (!(lhs.*m == rhs.*m))
      return false;
  return true;
}

BracketTable4 to_bracket_table(const StructureConstants &sc) {
  BracketTable4 t;
  t.set(kW, kZ, vec(0, 0, 0, sc.lambda));
  t.set(kZ, kX, vec(sc.alpha, sc.beta, sc.z1, sc.w1));
  t.set(kZ, kY, vec(-sc.beta, sc.alpha, sc.z2, sc.w2));
  t.set(kW, kX, vec(sc.a, sc.b, sc.z3, -sc.z1));
  t.set(kW, kY, vec(-sc.b, sc.a, sc.z4, -sc.z2));
  t.set(kY, kX, vec(sc.r, 0, sc.theta1, sc.theta2));
  return t;
}

StructureConstants from_bracket_table(const BracketTable4 &t) {
  StructureConstants sc;
  sc.lambda = t(kW, kZ, kW);
  sc.alpha = t(kZ, kX, kX);
  sc.beta = t(kZ, kX, kY);
  sc.z1 = t(kZ, kX, kZ);
  sc.w1 = t(kZ, kX, kW);
  sc.z2 = t(kZ, kY, kZ);
  sc.w2 = t(kZ, kY, kW);
  sc.a = t(kW, kX, kX);
  sc.b = t(kW, kX, kY);
  sc.z3 = t(kW, kX, kZ);
  sc.z4 = t(kW, kY, kZ);
  sc.r = t(kY, kX, kX);
  sc.theta1 = t(kY, kX, kZ);
  sc.theta2 = t(kY, kX, kW);

  const BracketTable4 expected = to_bracket_table(sc);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        if (!(t(i, j, k) == expected(i, j, k)))
          throw ShapeViolation("[" + std::string(kBasisNames[i]) + "," + std::string(kBasisNames[j]) + "] has " +
                               std::string(kBasisNames[k]) + "-coefficient " + t(i, j, k).to_string() +
                               ", expected " + expected(i, j, k).to_string());
  return sc;
}

std::array<Vector4, 4> jacobi_residuals_generic(const BracketTable4 &t) {
  static constexpr std::array<std::array<std::size_t, 3>, 4> kTriples = {
      {{kX, kY, kZ}, {kX, kY, kW}, {kX, kZ, kW}, {kY, kZ, kW}}};
  std::array<Vector4, 4> out;
  for (std::size_t n = 0; n < kTriples.size(); ++n) {
    const auto [i, j, k] = kTriples[n];
    const Vector4 ei = Vector4::basis(i), ej = Vector4::basis(j), ek = Vector4::basis(k);
    out[n] = bracket(t, t.bracket_of_basis(i, j), ek) + bracket(t, t.bracket_of_basis(j, k), ei) +
             bracket(t, t.bracket_of_basis(k, i), ej);
  }
  return out;
}

std::array<Scalar, 14> jacobi_residuals_appendix(const StructureConstants &s) {
  const Scalar &lambda = s.lambda, &alpha = s.alpha, &beta = s.beta, &a = s.a, &b = s.b, &r = s.r;
  const Scalar &z1 = s.z1, &z2 = s.z2, &z3 = s.z3, &z4 = s.z4, &w1 = s.w1, &w2 = s.w2;
  const Scalar &theta1 = s.theta1, &theta2 = s.theta2;
  return {
      lambda * a,
      lambda * b,
      -w2 * z3 + w1 * z4 - 2 * alpha * theta1 + r * z1,
      -2 * z4 * z1 + 2 * z3 * z2 - 2 * a * theta1 + r * z3,
      -lambda * z3 - z2 * b + z4 * beta - z1 * a + z3 * alpha,
      -lambda * z4 - z2 * a + z4 * alpha + z1 * b - z3 * beta,
      lambda * theta1 - w1 * z4 + w2 * z3 - 2 * a * theta2 - r * z1,
      -lambda * theta2 + 2 * z1 * w2 - 2 * z2 * w1 - 2 * alpha * theta2 + r * w1,
      -w2 * a - w1 * b - z2 * alpha - z1 * beta - alpha * r,
      -w2 * b + w1 * a - z2 * beta + z1 * alpha + r * beta,
      lambda * z1 - w2 * b - z2 * beta - w1 * a - z1 * alpha,
      z2 * a + z1 * b - z4 * alpha - z3 * beta - a * r,
      z2 * b - z1 * a - z4 * beta + z3 * alpha + r * b,
      lambda * z2 - w2 * a - z2 * alpha + w1 * b + z1 * beta,
  };
}

bool is_lie_algebra(const StructureConstants &sc) {
  for (const auto &residual : jacobi_residuals_appendix(sc))
    if (!residual.is_zero())
      return false;
  return true;
}

} // namespace liealg
