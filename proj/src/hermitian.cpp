#include "liealg/hermitian.hpp"

namespace liealg {

Vector4 apply_j(const Vector4 &v) {
  Vector4 out;
  out[kX] = -v[kY];
  out[kY] = v[kX];
  out[kZ] = -v[kW];
  out[kW] = v[kZ];
  return out;
}

Scalar kahler_form(const Vector4 &u, const Vector4 &v) { return inner(apply_j(u), v); }

Scalar d_omega(const BracketTable4 &t, const Vector4 &u, const Vector4 &v, const Vector4 &w) {
  return -kahler_form(bracket(t, u, v), w) - kahler_form(bracket(t, v, w), u) - kahler_form(bracket(t, w, u), v);
}

Scalar d_omega(const BracketTable4 &t, BasisTriple triple) {
  return d_omega(t, Vector4::basis(triple.i), Vector4::basis(triple.j), Vector4::basis(triple.k));
}

Vector4 nijenhuis(const BracketTable4 &t, const Vector4 &u, const Vector4 &v) {
  const Vector4 ju = apply_j(u), jv = apply_j(v);
  return bracket(t, u, v) + apply_j(bracket(t, ju, v)) + apply_j(bracket(t, u, jv)) - bracket(t, ju, jv);
}

bool kahler_form_closed(const BracketTable4 &t) {
  for (const auto &triple : kBasisTriples)
    if (!d_omega(t, triple).is_zero())
      return false;
  return true;
}

bool nijenhuis_vanishes(const BracketTable4 &t) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!nijenhuis(t, Vector4::basis(i), Vector4::basis(j)).is_zero())
        return false;
  return true;
}

ClassWitnesses class_witnesses(const StructureConstants &sc) {
  return {sc.theta1 - 2 * sc.a, sc.theta2 + 2 * sc.alpha, 2 * sc.z1 - sc.z4 - sc.w2, 2 * sc.z2 + sc.z3 + sc.w1};
}

bool ClassificationResult::in_class(HermitianClass cls) const {
  switch (cls) {
  case HermitianClass::AlmostKahler:
    return almost_kahler;
  case HermitianClass::Integrable:
    return integrable;
  case HermitianClass::Kahler:
    return kahler;
  }
  return false;
}

ClassificationResult classify(const StructureConstants &sc) {
  ClassificationResult out;
  out.witnesses = class_witnesses(sc);
  out.flags = foliation_flags(sc);
  out.almost_kahler = out.witnesses.theta1_minus_2a.is_zero() && out.witnesses.theta2_plus_2alpha.is_zero();
  out.integrable = out.witnesses.integrability_z.is_zero() && out.witnesses.integrability_w.is_zero();
  out.kahler = out.almost_kahler && out.integrable;
  return out;
}

} // namespace liealg
