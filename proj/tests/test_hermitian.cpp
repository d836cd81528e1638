#include "support.hpp"

#include "liealg/hermitian.hpp"

#include <doctest.h>

using namespace liealg;
namespace oracle = support::oracle;

namespace {

const Vector4 X = Vector4::basis(kX), Y = Vector4::basis(kY), Z = Vector4::basis(kZ), W = Vector4::basis(kW);
const std::array<Vector4, 4> kBasis = {X, Y, Z, W};

Scalar var(const char *name) { return Scalar::variable(name); }

Vector4 random_vector(Sampler &sampler) {
  Vector4 v;
  for (auto &x : v.c)
    x = sampler.rational();
  return v;
}

oracle::Vec to_oracle(const Vector4 &v) {
  return {v[0].substitute({}), v[1].substitute({}), v[2].substitute({}), v[3].substitute({})};
}

} // namespace

TEST_CASE("adapted J") {
  CHECK(apply_j(X) == Y);
  CHECK(apply_j(W) == -Z);
  Sampler sampler(41);
  for (int n = 0; n < 100; ++n) {
    const Vector4 u = random_vector(sampler), v = random_vector(sampler);
    CHECK(apply_j(apply_j(u)) == -u);
    CHECK(inner(apply_j(u), apply_j(v)) == inner(u, v));
  }
}

TEST_CASE("kahler form") {
  CHECK(kahler_form(X, Y) == Scalar(1));
  CHECK(kahler_form(Z, W) == Scalar(1));
  CHECK(kahler_form(X, Z).is_zero());
  Sampler sampler(42);
  for (int n = 0; n < 100; ++n) {
    const Vector4 u = random_vector(sampler), v = random_vector(sampler);
    CHECK(kahler_form(u, v) == -kahler_form(v, u));
  }
}

TEST_CASE("d omega") {
  const BracketTable4 generic = to_bracket_table(support::generic_constants());
  CHECK(d_omega(generic, {kX, kY, kZ}) == -var("theta2") - 2 * var("alpha"));
  CHECK(d_omega(generic, {kX, kY, kW}) == var("theta1") - 2 * var("a"));
  CHECK(d_omega(generic, {kX, kZ, kW}).is_zero());
  CHECK(d_omega(generic, {kY, kZ, kW}).is_zero());

  for (const auto &triple : kBasisTriples)
    CHECK(d_omega(BracketTable4{}, triple).is_zero());

  StructureConstants sc;
  sc.lambda = 1;
  sc.w1 = 2;
  const Scalar zwx = d_omega(to_bracket_table(sc), Z, W, X);
  CHECK(zwx.substitute({}) == oracle::d_omega(oracle::table(sc), kZ, kW, kX));
}

TEST_CASE("d omega matches the exterior-algebra oracle and alternates") {
  Sampler sampler(43);
  for (int n = 0; n < 200; ++n) {
    const StructureConstants sc = support::random_constants(sampler);
    const BracketTable4 t = to_bracket_table(sc);
    const auto c = oracle::table(sc);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          const Scalar value = d_omega(t, kBasis[i], kBasis[j], kBasis[k]);
          CHECK(value.substitute({}) == oracle::d_omega(c, i, j, k));
          CHECK(value == -d_omega(t, kBasis[j], kBasis[i], kBasis[k]));
          CHECK(value == d_omega(t, kBasis[j], kBasis[k], kBasis[i]));
        }
    const Vector4 u = random_vector(sampler), v = random_vector(sampler), w = random_vector(sampler);
    CHECK(d_omega(t, u, v, w) == -d_omega(t, v, u, w));
    CHECK(d_omega(t, u, v, w) == -d_omega(t, u, w, v));
  }
}

TEST_CASE("nijenhuis tensor") {
  const BracketTable4 generic = to_bracket_table(support::generic_constants());
  CHECK(nijenhuis(generic, X, Y).is_zero());
  CHECK(nijenhuis(generic, Z, W).is_zero());
  const Scalar nz = 2 * var("z1") - var("z4") - var("w2");
  const Scalar nw = 2 * var("z2") + var("z3") + var("w1");
  CHECK(nijenhuis(generic, X, Z) == -nz * Z - nw * W);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(nijenhuis(BracketTable4{}, kBasis[i], kBasis[j]).is_zero());

  Sampler sampler(44);
  for (int n = 0; n < 200; ++n) {
    const StructureConstants sc = support::random_constants(sampler);
    const BracketTable4 t = to_bracket_table(sc);
    const Vector4 u = random_vector(sampler), v = random_vector(sampler);
    const Vector4 value = nijenhuis(t, u, v);
    CHECK(value == -nijenhuis(t, v, u));
    const auto expected = oracle::nijenhuis(oracle::table(sc), to_oracle(u), to_oracle(v));
    CHECK(to_oracle(value) == expected);
  }
}

TEST_CASE("classify") {
  Sampler sampler(45);
  auto g2 = catalog().family(2);
  for (int n = 0; n < 20; ++n) {
    auto point = sampler.point_in(g2.params, g2.constraints);
    (*point)["alpha"] = Rational(0);
    if (!satisfies_all(g2.constraints, *point))
      continue;
    CHECK(classify(make_family(g2, *point)).almost_kahler);
  }

  const auto &g10 = catalog().family(10);
  for (int n = 0; n < 50; ++n) {
    const auto result = classify(make_family(g10, *sampler.point_in(g10.params, g10.constraints)));
    CHECK(result.integrable);
    CHECK_FALSE(result.almost_kahler);
  }

  const auto zero = classify(StructureConstants{});
  CHECK(zero.almost_kahler);
  CHECK(zero.integrable);
  CHECK(zero.kahler);
}

TEST_CASE("closed-form classes agree with direct computation") {
  Sampler sampler(46);
  int ak = 0, in = 0;
  for (int n = 0; n < 1000; ++n) {
    const StructureConstants sc = support::random_biased_constants(sampler);
    const BracketTable4 t = to_bracket_table(sc);
    const ClassificationResult result = classify(sc);
    CHECK(result.almost_kahler == kahler_form_closed(t));
    CHECK(result.integrable == nijenhuis_vanishes(t));
    CHECK(result.kahler == (kahler_form_closed(t) && nijenhuis_vanishes(t)));
    CHECK(result.in_class(HermitianClass::Kahler) == (result.almost_kahler && result.integrable));
    ak += result.almost_kahler;
    in += result.integrable;
  }
  CHECK(ak > 100);
  CHECK(in > 100);
}
