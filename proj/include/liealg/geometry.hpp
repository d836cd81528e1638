#pragma once

#include "liealg/structure.hpp"

namespace liealg {

/// gamma(i, j, k) = g(nabla_{e_i} e_j, e_k) for the Levi-Civita connection of a
/// left-invariant metric with orthonormal basis e.
template <std::size_t N>
class ConnectionCoefficients {
public:
  Scalar &operator()(std::size_t i, std::size_t j, std::size_t k) { return gamma_[(i * N + j) * N + k]; }
  const Scalar &operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[(i * N + j) * N + k]; }

  /// nabla_{e_i} e_j
  Vector<N> covariant(std::size_t i, std::size_t j) const {
    Vector<N> out;
    for (std::size_t k = 0; k < N; ++k)
      out[k] = (*this)(i, j, k);
    return out;
  }

  /// nabla_u v for left-invariant u, v (constant coefficients).
  Vector<N> covariant(const Vector<N> &u, const Vector<N> &v) const {
    Vector<N> out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (!u[i].is_zero() && !v[j].is_zero())
          out += (u[i] * v[j]) * covariant(i, j);
    return out;
  }

private:
  std::array<Scalar, N * N * N> gamma_{};
};

/// Koszul formula: 2 g(nabla_{e_i} e_j, e_k) = c(i,j,k) - c(j,k,i) + c(k,i,j).
/// Defined for any antisymmetric table; Jacobi is not needed.
template <std::size_t N>
ConnectionCoefficients<N> levi_civita(const BracketTable<N> &t) {
  const Scalar half = Rational(1, 2);
  ConnectionCoefficients<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        out(i, j, k) = half * (t(i, j, k) - t(j, k, i) + t(k, i, j));
  return out;
}

/// Sectional curvature of the plane spanned by e_i, e_j:
/// g(R(e_i, e_j) e_j, e_i) with R(u,v) = nabla_u nabla_v - nabla_v nabla_u - nabla_[u,v].
template <std::size_t N>
Scalar sectional_curvature(const BracketTable<N> &t, std::size_t i, std::size_t j) {
  const ConnectionCoefficients<N> conn = levi_civita(t);
  const Vector<N> ei = Vector<N>::basis(i), ej = Vector<N>::basis(j);
  const Vector<N> r = conn.covariant(ei, conn.covariant(ej, ej)) - conn.covariant(ej, conn.covariant(ei, ej)) -
                      conn.covariant(t.bracket_of_basis(i, j), ej);
  return inner(r, ei);
}

/// Second fundamental forms of the vertical distribution V = span{Z, W}
/// (values in H) and the horizontal distribution H = span{X, Y} (values in V).
struct SecondFundamentalForms {
  Vector4 bv_zz, bv_zw, bv_ww;
  Vector4 bh_xx, bh_xy, bh_yy;

  /// B^V(Z,Z) + B^V(W,W), a horizontal vector.
  Vector4 trace_bv() const;
};

SecondFundamentalForms second_fundamental_forms(const ConnectionCoefficients<4> &conn);

/// The vector V with B^H = g (x) V. Throws NotConformal when B^H(X,Y) != 0 or
/// B^H(X,X) != B^H(Y,Y).
Vector4 conformal_witness(const SecondFundamentalForms &forms);

struct FoliationFlags {
  bool totally_geodesic = false;
  bool riemannian = false;
  bool h_integrable = false;
  Vector4 mean_curvature;
};

/// Closed-form predicates in terms of the structure coefficients.
FoliationFlags foliation_flags(const StructureConstants &sc);

/// The same flags computed from the Levi-Civita connection of an arbitrary
/// table: B^V = 0, V = 0 and g([X,Y], V) = 0. Throws NotConformal.
FoliationFlags connection_flags(const BracketTable4 &t);

/// Gaussian curvature of the 2-dimensional subalgebra with [W,Z] = lambda W,
/// computed from its own Koszul connection.
Scalar gaussian_curvature_k(const Scalar &lambda);

} // namespace liealg
