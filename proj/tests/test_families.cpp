#include "support.hpp"

#include "liealg/errors.hpp"
#include "liealg/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace liealg;
namespace oracle = support::oracle;

namespace {

constexpr auto AK = HermitianClass::AlmostKahler;
constexpr auto I = HermitianClass::Integrable;
constexpr auto K = HermitianClass::Kahler;

const Vector4 X = Vector4::basis(kX), Z = Vector4::basis(kZ), W = Vector4::basis(kW);

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

VerificationOptions quick() {
  VerificationOptions options;
  options.tightness_samples = 200;
  options.lie_samples = 50;
  options.seed = 5;
  return options;
}

bool mentions(const VerificationReport &report, const std::string &text) {
  return std::any_of(report.failures.begin(), report.failures.end(),
                     [&](const std::string &f) { return f.find(text) != std::string::npos; });
}

} // namespace

TEST_CASE("catalog shape") {
  const Catalog &cat = catalog();
  REQUIRE(cat.families.size() == 20);
  REQUIRE(cat.claims.size() == 60);
  for (int id = 1; id <= 20; ++id) {
    CHECK(cat.family(id).id == id);
    for (auto cls : {AK, I, K})
      CHECK(cat.claim(id, cls).family_id == id);
  }
  CHECK(cat.family(13).prose_tag == "nilpotent");
  CHECK(cat.claim(4, K).outcome == Outcome::Empty);
  CHECK(cat.claim(10, I).outcome == Outcome::Whole);

  const std::map<int, char> cases = {{1, 'A'}, {3, 'A'}, {4, 'B'}, {5, 'C'}, {6, 'D'}, {9, 'D'}, {10, 'E'}, {11, 'F'}, {20, 'F'}};
  for (auto [id, label] : cases)
    CHECK(cat.family(id).case_label == label);
}

TEST_CASE("make_family") {
  const StructureConstants ak4 = make_subfamily(catalog(), 4, AK, {{"lambda", q(1)}, {"z2", q(1)}, {"w2", q(0)}});
  CHECK(to_bracket_table(ak4).bracket_of_basis(kZ, kX) == X + 2 * W);

  CHECK_THROWS_AS(make_family(5, {{"alpha", q(1)}, {"a", q(1)}, {"beta", q(1)}, {"b", q(1)}, {"r", q(1)}}),
                  DomainViolation);
  CHECK_THROWS_AS(make_family(5, {{"alpha", q(1)}}), MissingBinding);

  const BracketTable4 g13 =
      to_bracket_table(make_family(13, {{"z3", q(1)}, {"z4", q(0)}, {"theta1", q(0)}, {"theta2", q(0)}}));
  BracketTable4 expected;
  expected.set(kW, kX, Z);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(g13.bracket_of_basis(i, j) == expected.bracket_of_basis(i, j));

  const StructureConstants g6 = make_family(6, {{"z1", q(1)}, {"z2", q(1)}, {"z3", q(2)}, {"r", q(3)}, {"theta1", q(0)}, {"theta2", q(0)}});
  CHECK(g6.w1 == Scalar(q(-1, 2)));
  CHECK(g6.z4 == Scalar(5));
}

TEST_CASE("every family is a Lie algebra at random points") {
  Sampler sampler(51);
  for (const auto &family : catalog().families) {
    CAPTURE(family.id);
    for (int n = 0; n < 100; ++n) {
      const auto point = sampler.point_in(family.params, family.constraints);
      REQUIRE(point);
      const StructureConstants sc = make_family(family, *point);
      CHECK(is_lie_algebra(sc));
      CHECK(oracle::jacobi_holds(oracle::table(sc)));
    }
  }
}

TEST_CASE("symbolic family verification") {
  for (int id : {1, 6, 8}) {
    const VerificationReport report = verify_family_symbolic(catalog(), id, quick());
    CAPTURE(id);
    CHECK(report.jacobi_ok);
    CHECK(report.clean());
  }

  const Catalog broken = mutate(build_catalog(), Mutation::parse("6:w2:negate"));
  const VerificationReport report = verify_family_symbolic(broken, 6, quick());
  CHECK_FALSE(report.jacobi_ok);
  CHECK(mentions(report, "Jacobi residual #"));
}

TEST_CASE("claim examples") {
  const VerificationReport ak1 = verify_subfamily(catalog(), 1, AK, quick());
  CHECK(ak1.outcome == Outcome::Parametric);
  CHECK(ak1.membership_ok);
  CHECK(ak1.clean());
  CHECK(catalog().claim(1, AK).conditions == std::vector<Scalar>{Scalar::variable("w1")});

  const VerificationReport k4 = verify_subfamily(catalog(), 4, K, quick());
  CHECK(k4.outcome == Outcome::Empty);
  CHECK(k4.obstruction == "lambda^2 + z2^2");
  CHECK(k4.clean());

  const VerificationReport ak5 = verify_subfamily(catalog(), 5, AK, quick());
  CHECK(ak5.membership_ok);
  CHECK(ak5.dimensions == std::vector<std::size_t>{4, 4});
  CHECK(ak5.clean());
}

TEST_CASE("claimed dimensions") {
  const Catalog &cat = catalog();
  auto dims = [&](int id, HermitianClass cls) {
    std::vector<std::size_t> out;
    for (const auto &b : cat.claim(id, cls).branches)
      out.push_back(b.dimension());
    return out;
  };
  using D = std::vector<std::size_t>;
  CHECK(dims(1, AK) == D{3});
  CHECK(dims(2, AK) == D{4});
  CHECK(dims(3, K) == D{2});
  CHECK(dims(5, AK) == D{4, 4});
  CHECK(dims(6, K) == D{2});
  CHECK(dims(7, K) == D{1});
  CHECK(dims(9, K) == D{1});
  CHECK(dims(12, K) == D{2});
  CHECK(dims(14, K) == D{1});
  CHECK(dims(16, K) == D{1});
  CHECK(dims(18, K) == D{2});
  CHECK(cat.claim(10, I).outcome == Outcome::Whole);
  for (auto [id, cls] : std::vector<std::pair<int, HermitianClass>>{
           {4, K}, {11, I}, {13, I}, {17, AK}, {17, K}, {19, AK}, {19, K}, {20, AK}, {20, K}})
    CHECK(cat.claim(id, cls).outcome == Outcome::Empty);
}

TEST_CASE("Kaehler claims are the intersection of the other two") {
  Sampler sampler(52);
  const Catalog &cat = catalog();
  for (const auto &family : cat.families) {
    const auto &ak = cat.claim(family.id, AK), &in = cat.claim(family.id, I), &k = cat.claim(family.id, K);
    for (int n = 0; n < 100; ++n) {
      const auto point = sampler.point_in(family.params, family.constraints);
      CHECK(k.contains(*point) == (ak.contains(*point) && in.contains(*point)));
    }
    // Points on the Kaehler charts are members of all three.
    for (const auto &branch : k.branches)
      for (const auto &chart : branch.charts) {
        const auto local = sampler.point_in(chart.params, chart.constraints);
        const ParamMap values = to_param_map(*local);
        const ParamMap embedded = chart.embed(Params(values));
        Assignment point;
        for (const auto &[name, value] : embedded)
          point[name] = value.substitute({});
        CHECK(ak.contains(point));
        CHECK(in.contains(point));
      }
  }
}

TEST_CASE("all sixty claims verify") {
  const auto reports = verify_paper(catalog(), quick());
  REQUIRE(reports.size() == 80);
  for (const auto &r : reports) {
    CAPTURE(r.family_id);
    CAPTURE(r.failures.size());
    CHECK(r.clean());
  }
  CHECK(reports[0].family_id == 1);
  CHECK_FALSE(reports[0].cls);
  CHECK(reports[1].cls == AK);
  CHECK(reports[79].family_id == 20);
  CHECK(reports[79].cls == K);
}

TEST_CASE("label notes are attached") {
  const Catalog &cat = catalog();
  CHECK_FALSE(cat.claim(11, I).notes.empty());
  CHECK_FALSE(cat.claim(17, I).notes.empty());
  CHECK_FALSE(cat.claim(19, I).notes.empty());
  CHECK_FALSE(cat.claim(1, K).notes.empty());
}

TEST_CASE("mutations are parsed and detected") {
  const Mutation m = Mutation::parse("4.AK:theta2:drop");
  CHECK(m.family_id == 4);
  CHECK(m.cls == AK);
  CHECK(m.field == "theta2");
  CHECK(m.kind == Mutation::Kind::Drop);
  CHECK(m.to_string() == "4.AK:theta2:drop");
  CHECK_THROWS_AS(Mutation::parse("21:w2:negate"), ParseError);
  CHECK_THROWS_AS(Mutation::parse("6:w9:negate"), ParseError);
  CHECK_THROWS_AS(Mutation::parse("6:w2:twist"), ParseError);
  CHECK_THROWS_AS(Mutation::parse("6.Q:w2:negate"), ParseError);
  CHECK_THROWS_AS(Mutation::parse("6"), ParseError);

  for (const char *text : {"4.AK:theta2:negate", "12.I:z4:drop", "10:a:negate", "2.I:beta:negate"}) {
    CAPTURE(text);
    const Mutation mutation = Mutation::parse(text);
    const Catalog broken = mutate(build_catalog(), mutation);
    const auto cls = mutation.cls.value_or(AK);
    CHECK_FALSE(verify_subfamily(broken, mutation.family_id, cls, quick()).clean());
  }
}

TEST_CASE("verification is reproducible") {
  const auto a = verify_subfamily(catalog(), 9, I, quick());
  const auto b = verify_subfamily(catalog(), 9, I, quick());
  CHECK(a.tightness_samples == b.tightness_samples);
  CHECK(a.failures == b.failures);
  CHECK(a.tightness_samples >= 200);
}
