#pragma once

// Generators and independent reference computations for the tests. The
// oracles work on dense rational arrays filled straight from the six bracket
// relations and share no code with the library beyond Rational.

#include "liealg/families.hpp"
#include "liealg/hermitian.hpp"
#include "liealg/sampling.hpp"
#include "liealg/structure.hpp"

#include <array>
#include <string>
#include <vector>

namespace support {

using liealg::Assignment;
using liealg::Rational;
using liealg::Scalar;
using liealg::StructureConstants;

inline std::vector<std::string> coefficient_names() {
  return {StructureConstants::kNames.begin(), StructureConstants::kNames.end()};
}

/// Every coefficient an indeterminate of the same name.
inline StructureConstants generic_constants() {
  StructureConstants sc;
  for (auto name : StructureConstants::kNames)
    sc.field(name) = Scalar::variable(std::string(name));
  return sc;
}

inline StructureConstants from_point(const Assignment &point) {
  StructureConstants sc;
  for (const auto &[name, value] : point)
    sc.field(name) = value;
  return sc;
}

inline StructureConstants random_constants(liealg::Sampler &sampler) {
  return from_point(sampler.point(coefficient_names()));
}

/// A random point of a random family, so that Lie points are well represented.
inline StructureConstants random_family_point(liealg::Sampler &sampler) {
  const auto &families = liealg::catalog().families;
  const auto &family = families[sampler.index(families.size())];
  auto point = sampler.point_in(family.params, family.constraints);
  return liealg::make_family(family, *point);
}

/// Random constants where the almost Kaehler and integrability conditions
/// are each forced with probability 1/2, so both outcomes of every class
/// predicate occur often.
inline StructureConstants random_biased_constants(liealg::Sampler &sampler) {
  StructureConstants sc = random_constants(sampler);
  if (sampler.index(2) == 0) {
    sc.theta1 = 2 * sc.a;
    if (sampler.index(3) != 0)
      sc.theta2 = -2 * sc.alpha;
  }
  if (sampler.index(2) == 0) {
    sc.w2 = 2 * sc.z1 - sc.z4;
    if (sampler.index(3) != 0)
      sc.w1 = -2 * sc.z2 - sc.z3;
  }
  return sc;
}

namespace oracle {

using Vec = std::array<Rational, 4>;
using Table = std::array<std::array<Vec, 4>, 4>;

inline Rational value(const StructureConstants &sc, std::string_view name) { return sc.field(name).substitute({}); }

/// c[i][j] = [e_i, e_j] for numeric constants.
inline Table table(const StructureConstants &sc) {
  auto v = [&](std::string_view name) { return value(sc, name); };
  Table c{};
  auto set = [&](int i, int j, Vec x) {
    c[i][j] = x;
    for (int k = 0; k < 4; ++k)
      c[j][i][k] = -x[k];
  };
  const Rational zero;
  set(3, 2, {zero, zero, zero, v("lambda")});
  set(2, 0, {v("alpha"), v("beta"), v("z1"), v("w1")});
  set(2, 1, {-v("beta"), v("alpha"), v("z2"), v("w2")});
  set(3, 0, {v("a"), v("b"), v("z3"), -v("z1")});
  set(3, 1, {-v("b"), v("a"), v("z4"), -v("z2")});
  set(1, 0, {v("r"), zero, v("theta1"), v("theta2")});
  return c;
}

inline Vec add(Vec u, const Vec &v) {
  for (int k = 0; k < 4; ++k)
    u[k] += v[k];
  return u;
}

inline Vec bracket(const Table &c, const Vec &u, const Vec &v) {
  Vec out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        out[k] += u[i] * v[j] * c[i][j][k];
  return out;
}

inline Vec unit(int i) {
  Vec e{};
  e[i] = Rational(1);
  return e;
}

inline Rational dot(const Vec &u, const Vec &v) {
  Rational out;
  for (int k = 0; k < 4; ++k)
    out += u[k] * v[k];
  return out;
}

/// Jacobi identity on all 64 ordered basis triples.
inline bool jacobi_holds(const Table &c) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Vec s = add(add(bracket(c, bracket(c, unit(i), unit(j)), unit(k)),
                              bracket(c, bracket(c, unit(j), unit(k)), unit(i))),
                          bracket(c, bracket(c, unit(k), unit(i)), unit(j)));
        for (const auto &x : s)
          if (!x.is_zero())
            return false;
      }
  return true;
}

/// d omega(e_a, e_b, e_c) from omega = e^0 ^ e^1 + e^2 ^ e^3 and
/// de^k(u, v) = -e^k([u, v]), using d(e^p ^ e^q) = de^p ^ e^q - de^q ^ e^p
/// and (beta ^ e^q)(u,v,w) = beta(u,v) w_q + beta(v,w) u_q + beta(w,u) v_q.
inline Rational d_omega(const Table &c, int a, int b, int d) {
  auto de = [&](int k, int u, int v) { return -c[u][v][k]; };
  auto wedge = [&](int p, int q, int u, int v, int w) {
    auto e = [](int index, int q) { return Rational(index == q ? 1 : 0); };
    return de(p, u, v) * e(w, q) + de(p, v, w) * e(u, q) + de(p, w, u) * e(v, q);
  };
  Rational out;
  for (auto [p, q] : {std::pair{0, 1}, std::pair{2, 3}})
    out += wedge(p, q, a, b, d) - wedge(q, p, a, b, d);
  return out;
}

/// J as a matrix acting on coordinate vectors: X -> Y, Y -> -X, Z -> W, W -> -Z.
inline Vec apply_j(const Vec &v) { return {-v[1], v[0], -v[3], v[2]}; }

inline Vec nijenhuis(const Table &c, const Vec &u, const Vec &v) {
  Vec out = bracket(c, u, v);
  out = add(out, apply_j(bracket(c, apply_j(u), v)));
  out = add(out, apply_j(bracket(c, u, apply_j(v))));
  const Vec last = bracket(c, apply_j(u), apply_j(v));
  for (int k = 0; k < 4; ++k)
    out[k] -= last[k];
  return out;
}

/// g(nabla_u v, w) = (g([u,v],w) - g(v,[u,w]) - g(u,[v,w])) / 2, the form
/// obtained from nabla_u v = ([u,v] - ad*_u v - ad*_v u) / 2.
inline Rational connection(const Table &c, const Vec &u, const Vec &v, const Vec &w) {
  return (dot(bracket(c, u, v), w) - dot(v, bracket(c, u, w)) - dot(u, bracket(c, v, w))) / Rational(2);
}

inline Vec covariant(const Table &c, const Vec &u, const Vec &v) {
  Vec out{};
  for (int k = 0; k < 4; ++k)
    out[k] = connection(c, u, v, unit(k));
  return out;
}

} // namespace oracle

} // namespace support
