#pragma once

#include "liealg/scalar.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace liealg {

/// Positions in the ordered orthonormal basis (X, Y, Z, W). X, Y span the
/// horizontal space, Z, W the vertical one.
enum BasisIndex : std::size_t { kX = 0, kY = 1, kZ = 2, kW = 3 };

inline constexpr std::array<std::string_view, 4> kBasisNames = {"X", "Y", "Z", "W"};

/// Coordinates in an orthonormal basis of an N-dimensional metric Lie algebra.
template <std::size_t N>
struct Vector {
  std::array<Scalar, N> c{};

  static Vector basis(std::size_t i) {
    Vector v;
    v.c[i] = Scalar(1);
    return v;
  }

  Scalar &operator[](std::size_t i) { return c[i]; }
  const Scalar &operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const {
    for (const auto &x : c)
      if (!x.is_zero())
        return false;
    return true;
  }

  Vector operator-() const {
    Vector out;
    for (std::size_t i = 0; i < N; ++i)
      out.c[i] = -c[i];
    return out;
  }
  Vector &operator+=(const Vector &rhs) {
    for (std::size_t i = 0; i < N; ++i)
      c[i] += rhs.c[i];
    return *this;
  }
  Vector &operator-=(const Vector &rhs) {
    for (std::size_t i = 0; i < N; ++i)
      c[i] -= rhs.c[i];
    return *this;
  }
  friend Vector operator+(Vector lhs, const Vector &rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector &rhs) { return lhs -= rhs; }
  friend Vector operator*(const Scalar &s, const Vector &v) {
    Vector out;
    for (std::size_t i = 0; i < N; ++i)
      out.c[i] = s * v.c[i];
    return out;
  }
  friend bool operator==(const Vector &lhs, const Vector &rhs) { return (lhs - rhs).is_zero(); }
};

using Vector4 = Vector<4>;

/// The metric is the identity in the orthonormal basis.
template <std::size_t N>
Scalar inner(const Vector<N> &u, const Vector<N> &v) {
  Scalar out;
  for (std::size_t i = 0; i < N; ++i)
    if (!u[i].is_zero() && !v[i].is_zero())
      out += u[i] * v[i];
  return out;
}

/// General antisymmetric bracket [e_i, e_j] = sum_k c(i, j, k) e_k. Only whole
/// brackets can be assigned, and assigning [e_i, e_j] also sets [e_j, e_i], so
/// antisymmetry holds by construction.
template <std::size_t N>
class BracketTable {
public:
  const Scalar &operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * N + j) * N + k]; }

  Vector<N> bracket_of_basis(std::size_t i, std::size_t j) const {
    Vector<N> out;
    for (std::size_t k = 0; k < N; ++k)
      out[k] = (*this)(i, j, k);
    return out;
  }

  /// Sets [e_i, e_j] = value; requires i != j.
  void set(std::size_t i, std::size_t j, const Vector<N> &value) {
    for (std::size_t k = 0; k < N; ++k) {
      c_[(i * N + j) * N + k] = value[k];
      c_[(j * N + i) * N + k] = -value[k];
    }
  }

  bool is_abelian() const {
    for (const auto &x : c_)
      if (!x.is_zero())
        return false;
    return true;
  }

private:
  std::array<Scalar, N * N * N> c_{};
};

using BracketTable4 = BracketTable<4>;

/// Bilinear extension of the table.
template <std::size_t N>
Vector<N> bracket(const BracketTable<N> &t, const Vector<N> &u, const Vector<N> &v) {
  Vector<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    if (u[i].is_zero())
      continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j || v[j].is_zero())
        continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < N; ++k)
        if (!t(i, j, k).is_zero())
          out[k] += uv * t(i, j, k);
    }
  }
  return out;
}

/// The fourteen structure coefficients of a conformal foliation with minimal
/// leaves:
///
///   [W,Z] = lambda W
///   [Z,X] =  alpha X + beta Y + z1 Z + w1 W
///   [Z,Y] = -beta X + alpha Y + z2 Z + w2 W
///   [W,X] =      a X +    b Y + z3 Z - z1 W
///   [W,Y] =     -b X +    a Y + z4 Z - z2 W
///   [Y,X] =      r X          + theta1 Z + theta2 W
struct StructureConstants {
  Scalar lambda, alpha, beta, a, b, r, z1, z2, z3, z4, w1, w2, theta1, theta2;

  static constexpr std::array<std::string_view, 14> kNames = {
      "lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4", "w1", "w2", "theta1", "theta2"};

  /// Access by name; throws std::out_of_range for unknown names.
  Scalar &field(std::string_view name);
  const Scalar &field(std::string_view name) const;
};

bool operator==(const StructureConstants &lhs, const StructureConstants &rhs);

BracketTable4 to_bracket_table(const StructureConstants &sc);

/// Inverse of to_bracket_table. Throws ShapeViolation naming the first bracket
/// entry that does not fit the structure-constant shape.
StructureConstants from_bracket_table(const BracketTable4 &t);

/// J(e_i, e_j, e_k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] for the
/// four increasing triples (XYZ, XYW, XZW, YZW), in that order.
std::array<Vector4, 4> jacobi_residuals_generic(const BracketTable4 &t);

/// The fourteen quadratic Jacobi polynomials of the structure-constant shape,
/// in their conventional order (first lambda*a, last
/// lambda*z2 - w2*a - z2*alpha + w1*b + z1*beta).
std::array<Scalar, 14> jacobi_residuals_appendix(const StructureConstants &sc);

bool is_lie_algebra(const StructureConstants &sc);

} // namespace liealg
