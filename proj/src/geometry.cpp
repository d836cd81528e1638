#include "liealg/geometry.hpp"

#include "liealg/errors.hpp"

namespace liealg {

namespace {

Vector4 horizontal(const Vector4 &v) {
  Vector4 out;
  out[kX] = v[kX];
  out[kY] = v[kY];
  return out;
}

Vector4 vertical(const Vector4 &v) {
  Vector4 out;
  out[kZ] = v[kZ];
  out[kW] = v[kW];
  return out;
}

const Scalar kHalf = Rational(1, 2);

} // namespace

Vector4 SecondFundamentalForms::trace_bv() const { return bv_zz + bv_ww; }

SecondFundamentalForms second_fundamental_forms(const ConnectionCoefficients<4> &conn) {
  auto sym = [&](std::size_t i, std::size_t j) { return kHalf * (conn.covariant(i, j) + conn.covariant(j, i)); };
  SecondFundamentalForms f;
  f.bv_zz = horizontal(sym(kZ, kZ));
  f.bv_zw = horizontal(sym(kZ, kW));
  f.bv_ww = horizontal(sym(kW, kW));
  f.bh_xx = vertical(sym(kX, kX));
  f.bh_xy = vertical(sym(kX, kY));
  f.bh_yy = vertical(sym(kY, kY));
  return f;
}

Vector4 conformal_witness(const SecondFundamentalForms &forms) {
  for (std::size_t k : {kZ, kW}) {
    if (!forms.bh_xy[k].is_zero())
      throw NotConformal("B^H(X,Y) has " + std::string(kBasisNames[k]) + "-component " + forms.bh_xy[k].to_string());
    if (!(forms.bh_xx[k] == forms.bh_yy[k]))
      throw NotConformal("B^H(X,X) and B^H(Y,Y) differ in the " + std::string(kBasisNames[k]) + "-component");
  }
  return forms.bh_xx;
}

FoliationFlags foliation_flags(const StructureConstants &sc) {
  FoliationFlags flags;
  flags.totally_geodesic =
      sc.z1.is_zero() && sc.z2.is_zero() && (sc.z3 + sc.w1).is_zero() && (sc.z4 + sc.w2).is_zero();
  flags.riemannian = sc.alpha.is_zero() && sc.a.is_zero();
  flags.h_integrable = sc.theta1.is_zero() && sc.theta2.is_zero();
  flags.mean_curvature[kZ] = sc.alpha;
  flags.mean_curvature[kW] = sc.a;
  return flags;
}

FoliationFlags connection_flags(const BracketTable4 &t) {
  const SecondFundamentalForms forms = second_fundamental_forms(levi_civita(t));
  FoliationFlags flags;
  flags.mean_curvature = conformal_witness(forms);
  flags.totally_geodesic = forms.bv_zz.is_zero() && forms.bv_zw.is_zero() && forms.bv_ww.is_zero();
  flags.riemannian = flags.mean_curvature.is_zero();
  flags.h_integrable = vertical(t.bracket_of_basis(kX, kY)).is_zero();
  return flags;
}

Scalar gaussian_curvature_k(const Scalar &lambda) {
  // Basis (Z, W) of the subalgebra, indexed 0 and 1.
  BracketTable<2> t;
  Vector<2> w = Vector<2>::basis(1);
  t.set(1, 0, lambda * w);
  return sectional_curvature(t, 0, 1);
}

} // namespace liealg
