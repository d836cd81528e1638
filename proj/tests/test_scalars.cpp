#include "liealg/errors.hpp"
#include "liealg/sampling.hpp"
#include "liealg/scalar.hpp"

#include <doctest.h>

using namespace liealg;

namespace {

Scalar var(const char *name) { return Scalar::variable(name); }
Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

} // namespace

TEST_CASE("rational normalization and rendering") {
  CHECK(q(2, 4).to_string() == "1/2");
  CHECK(q(3, -6).to_string() == "-1/2");
  CHECK(q(0, 5).to_string() == "0");
  CHECK(q(6, 3).to_string() == "2");
  CHECK_THROWS_AS(q(1, 0), DivisionByZero);
  CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
}

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar(q(1, 2)) + Scalar(q(1, 3)) == Scalar(q(5, 6)));
  CHECK((Scalar(q(1, 2)) + Scalar(q(1, 3))).is_rational());

  const Scalar x = var("x");
  CHECK((x * x).to_string() == "x^2");

  const Scalar z1 = var("z1"), z3 = var("z3");
  const Scalar sum = z1.pow(2) / z3 + (-z1.pow(2) / z3);
  CHECK(sum.is_zero());
  CHECK(sum.as_ratfunc().numerator().terms().empty());
}

TEST_CASE("scalar division") {
  const Scalar lambda = var("lambda"), z2 = var("z2");
  CHECK((2 * lambda.pow(2) / z2).to_string() == "2*lambda^2/z2");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(lambda / (lambda - lambda), DivisionByZero);

  const Scalar x = var("x");
  const Scalar reduced = (x.pow(2) - 1) / (x - 1);
  CHECK(reduced.as_ratfunc().denominator() == Poly(1));
  CHECK(reduced == x + 1);
}

TEST_CASE("zero test") {
  CHECK(Scalar(q(0, 1)).is_zero());
  const Scalar x = var("x"), y = var("y");
  CHECK((x * y - y * x).is_zero());
  CHECK_FALSE((var("z1").pow(2) / var("z3")).is_zero());
}

TEST_CASE("multivariate gcd reduction") {
  const Scalar x = var("x"), y = var("y"), z = var("z");
  const Scalar g = x * y + z.pow(2) - 3;
  const Scalar f = (g * (x - y).pow(2)) / (g * (x + 2 * z));
  CHECK(f == (x - y).pow(2) / (x + 2 * z));
  const RatFunc r = f.as_ratfunc();
  CHECK(gcd(r.numerator(), r.denominator()) == Poly(1));
  CHECK(r.denominator().leading_coefficient() == Rational(1));
}

TEST_CASE("substitute") {
  const Scalar lambda = var("lambda"), z2 = var("z2");
  CHECK((2 * lambda.pow(2) / z2).substitute({{"lambda", q(1)}, {"z2", q(2)}}) == q(1));
  const Scalar z1 = var("z1"), z3 = var("z3");
  CHECK_THROWS_AS((z1.pow(2) / z3).substitute({{"z1", q(2)}, {"z3", q(0)}}), DivisionByZero);
  const Scalar r = var("r"), w1 = var("w1");
  CHECK((r * w1 / lambda).substitute({{"r", q(2)}, {"w1", q(3)}, {"lambda", q(1)}}) == q(6));
  CHECK_THROWS_AS((r * w1).substitute({{"r", q(2)}}), MissingBinding);
}

TEST_CASE("compose substitutes scalars for indeterminates") {
  const Scalar x = var("x"), y = var("y"), t = var("t");
  const Scalar f = (x.pow(2) - y) / (x + 1);
  CHECK(f.compose({{"x", t - 1}, {"y", t}}) == (t.pow(2) - 3 * t + 1) / t);
  CHECK(f.compose({{"x", Scalar(2)}}) == (4 - y) / 3);
}

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("3/4") == Scalar(q(3, 4)));
  CHECK(parse_scalar("3/4").is_rational());

  const Scalar p = parse_scalar("2*l^2/z2", {"l", "z2"});
  CHECK(!p.is_rational());
  CHECK(p == 2 * var("l").pow(2) / var("z2"));

  try {
    parse_scalar("1//2");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_scalar("1/0"), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar("1/(x-x)"), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar("a + q", {"a"}), ParseError);
  CHECK_THROWS_AS(parse_scalar("(a"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK(parse_scalar(" -x^2 + -(3) ") == -var("x").pow(2) - 3);
}

TEST_CASE("field axioms on random rationals and rational functions") {
  Sampler sampler(11);
  const Scalar x = var("x"), y = var("y");
  auto random_scalar = [&] {
    switch (sampler.index(3)) {
    case 0:
      return Scalar(sampler.rational());
    case 1:
      return sampler.rational() * x + sampler.rational() * y.pow(2) + sampler.rational();
    default: {
      Scalar den = x + sampler.rational() * y;
      return (sampler.rational() * x * y + sampler.rational()) / den;
    }
    }
  };
  for (int n = 0; n < 300; ++n) {
    const Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero())
      CHECK(a * (1 / a) == Scalar(1));
  }
}

TEST_CASE("substitute is a ring homomorphism and respects zero") {
  Sampler sampler(12);
  const Scalar x = var("x"), y = var("y");
  const Scalar f = (x.pow(2) - 2 * y) / (x + y + 1), g = x * y - Scalar(q(1, 3));
  int checked = 0;
  for (int n = 0; n < 300; ++n) {
    const Assignment s{{"x", sampler.rational()}, {"y", sampler.rational()}};
    Rational fs;
    try {
      fs = f.substitute(s);
    } catch (const DivisionByZero &) {
      continue;
    }
    const Rational gs = g.substitute(s);
    CHECK((f + g).substitute(s) == fs + gs);
    CHECK((f * g).substitute(s) == fs * gs);
    CHECK((f - f).substitute(s).is_zero());
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("parse of render is the identity") {
  Sampler sampler(13);
  const Scalar a = var("alpha"), b = var("b"), t = var("theta1");
  std::vector<Scalar> corpus = {Scalar(q(-7, 3)), a, -a, a.pow(3) * b, (a - b) / (t + 1), 2 * a.pow(2) / b,
                                -(a * b - 1) / (3 * t.pow(2))};
  for (int n = 0; n < 50; ++n)
    corpus.push_back((sampler.rational() * a + sampler.rational() * b * t) /
                     (a.pow(2) + sampler.rational() * t + 1));
  for (const auto &s : corpus) {
    CAPTURE(s.to_string());
    CHECK(parse_scalar(s.to_string()) == s);
    CHECK(parse_scalar(s.to_string()).to_string() == s.to_string());
  }
}
