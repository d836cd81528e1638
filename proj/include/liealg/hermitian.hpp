#pragma once

#include "liealg/geometry.hpp"
#include "liealg/structure.hpp"

#include <array>

namespace liealg {

/// The adapted almost Hermitian structure J(X) = Y, J(Y) = -X, J(Z) = W, J(W) = -Z.
Vector4 apply_j(const Vector4 &v);

/// omega(u, v) = g(Ju, v).
Scalar kahler_form(const Vector4 &u, const Vector4 &v);

struct BasisTriple {
  std::size_t i, j, k;
};

/// The four increasing basis triples on which a left-invariant 3-form is determined.
inline constexpr std::array<BasisTriple, 4> kBasisTriples = {
    {{kX, kY, kZ}, {kX, kY, kW}, {kX, kZ, kW}, {kY, kZ, kW}}};

/// d omega(u,v,w) = -omega([u,v],w) - omega([v,w],u) - omega([w,u],v).
Scalar d_omega(const BracketTable4 &t, const Vector4 &u, const Vector4 &v, const Vector4 &w);
Scalar d_omega(const BracketTable4 &t, BasisTriple triple);

/// N(u,v) = [u,v] + J[Ju,v] + J[u,Jv] - [Ju,Jv].
Vector4 nijenhuis(const BracketTable4 &t, const Vector4 &u, const Vector4 &v);

/// d omega vanishes on all four basis triples.
bool kahler_form_closed(const BracketTable4 &t);
/// N vanishes on all six basis pairs.
bool nijenhuis_vanishes(const BracketTable4 &t);

/// Linear expressions whose vanishing characterizes each class.
struct ClassWitnesses {
  Scalar theta1_minus_2a;        // theta1 - 2a
  Scalar theta2_plus_2alpha;     // theta2 + 2alpha
  Scalar integrability_z;        // 2 z1 - z4 - w2
  Scalar integrability_w;        // 2 z2 + z3 + w1

  std::array<Scalar, 4> as_array() const {
    return {theta1_minus_2a, theta2_plus_2alpha, integrability_z, integrability_w};
  }
};

ClassWitnesses class_witnesses(const StructureConstants &sc);

enum class HermitianClass { AlmostKahler, Integrable, Kahler };

struct ClassificationResult {
  bool almost_kahler = false;
  bool integrable = false;
  bool kahler = false;
  FoliationFlags flags;
  ClassWitnesses witnesses;

  bool in_class(HermitianClass cls) const;
};

/// Closed-form classification; defined for any structure constants, Lie or not.
ClassificationResult classify(const StructureConstants &sc);

} // namespace liealg
