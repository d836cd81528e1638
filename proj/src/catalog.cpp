// The twenty families of conformal foliations with minimal leaves and the
// almost Kaehler (AK), integrable (I) and Kaehler (K) subfamilies of the
// adapted structure J. Each table below is a transcription of the displayed
// bracket relations; brackets not listed vanish.

#include "liealg/families.hpp"

#include <initializer_list>
#include <utility>

namespace liealg {

namespace {

const Vector4 X = Vector4::basis(kX);
const Vector4 Y = Vector4::basis(kY);
const Vector4 Z = Vector4::basis(kZ);
const Vector4 W = Vector4::basis(kW);

Scalar var(const char *name) { return Scalar::variable(name); }

using Extra = std::initializer_list<std::pair<const std::string, Scalar>>;

/// The chart's own parameters plus values for the remaining family parameters.
ParamMap extend(const Params &p, Extra extra) {
  ParamMap out = p.values();
  for (const auto &[name, value] : extra)
    out[name] = value;
  return out;
}

ParamMap identity(const Params &p) { return p.values(); }

constexpr auto AK = HermitianClass::AlmostKahler;
constexpr auto I = HermitianClass::Integrable;
constexpr auto K = HermitianClass::Kahler;

SubfamilyClaim parametric(int id, HermitianClass cls, std::vector<Scalar> conditions, std::vector<Branch> branches,
                          std::vector<std::size_t> dims, std::vector<std::string> notes = {}) {
  SubfamilyClaim c;
  c.family_id = id;
  c.cls = cls;
  c.outcome = Outcome::Parametric;
  c.conditions = std::move(conditions);
  c.branches = std::move(branches);
  c.claimed_dimensions = std::move(dims);
  c.notes = std::move(notes);
  return c;
}

/// Single-branch, single-chart subfamily.
SubfamilyClaim simple(int id, HermitianClass cls, std::vector<Scalar> conditions, std::string label,
                      std::vector<std::string> params, std::vector<Constraint> constraints, Embedding embed,
                      Builder build, std::size_t dim, std::vector<std::string> notes = {}) {
  Chart chart{label, std::move(params), std::move(constraints), std::move(embed), std::move(build)};
  return parametric(id, cls, std::move(conditions), {Branch{std::move(label), {std::move(chart)}}}, {dim},
                    std::move(notes));
}

SubfamilyClaim whole(int id, HermitianClass cls, std::size_t dim) {
  SubfamilyClaim c;
  c.family_id = id;
  c.cls = cls;
  c.outcome = Outcome::Whole;
  c.claimed_dimensions = {dim};
  return c;
}

SubfamilyClaim empty(int id, HermitianClass cls, Obstruction obstruction, std::vector<std::string> notes = {}) {
  SubfamilyClaim c;
  c.family_id = id;
  c.cls = cls;
  c.outcome = Outcome::Empty;
  c.obstruction = std::move(obstruction);
  c.notes = std::move(notes);
  return c;
}

/// Obstruction on the whole family.
Obstruction on_family(const FamilySpec &f, std::string display, std::array<Scalar, 4> multipliers,
                      std::vector<Scalar> squares, Scalar anchor) {
  Chart chart{"g" + std::to_string(f.id), f.params, f.constraints, identity, {}};
  return Obstruction{std::move(display), std::move(chart), std::move(multipliers), std::move(squares),
                     std::move(anchor)};
}

// ---------------------------------------------------------------------------
// Case (A): lambda != 0 and (lambda - alpha)^2 + beta^2 != 0

void add_g1(Catalog &cat) {
  const Scalar lambda = var("lambda"), r = var("r"), w1 = var("w1"), w2 = var("w2");
  FamilySpec f{1, 'A', {"lambda", "r", "w1", "w2"}, {nonzero(lambda), nonzero(r)}, "solvable",
               [](const Params &p) {
                 const Scalar &lambda = p("lambda"), &r = p("r"), &w1 = p("w1"), &w2 = p("w2");
                 BracketTable4 t;
                 t.set(kW, kZ, lambda * W);
                 t.set(kZ, kX, w1 * W);
                 t.set(kZ, kY, w2 * W);
                 t.set(kY, kX, r * X + (r * w1 / lambda) * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      1, AK, {w1}, "g1^AK(lambda,r,w2)", {"lambda", "r", "w2"}, {nonzero(lambda), nonzero(r)},
      [](const Params &p) { return extend(p, {{"w1", 0}}); },
      [](const Params &p) {
        BracketTable4 t;
        t.set(kW, kZ, p("lambda") * W);
        t.set(kZ, kY, p("w2") * W);
        t.set(kY, kX, p("r") * X);
        return t;
      },
      3));
  auto g1_i = [](const Params &p) {
    BracketTable4 t;
    t.set(kW, kZ, p("lambda") * W);
    t.set(kY, kX, p("r") * X);
    return t;
  };
  auto no_w = [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); };
  cat.claims.push_back(simple(1, I, {w1, w2}, "g1^I(lambda,r)", {"lambda", "r"}, {nonzero(lambda), nonzero(r)}, no_w,
                              g1_i, 2));
  cat.claims.push_back(simple(1, K, {w1, w2}, "g1^K(lambda,r)", {"lambda", "r"}, {nonzero(lambda), nonzero(r)}, no_w,
                              g1_i, 2,
                              {"the Kaehler groups are described both as a direct and as a semidirect product of hyperbolic "
                               "disks; group-level statements are not checked"}));
  cat.families.push_back(std::move(f));
}

void add_g2(Catalog &cat) {
  const Scalar lambda = var("lambda"), alpha = var("alpha"), beta = var("beta"), w1 = var("w1"), w2 = var("w2");
  FamilySpec f{2, 'A', {"lambda", "alpha", "beta", "w1", "w2"},
               {nonzero(lambda), nonzero((lambda - alpha).pow(2) + beta.pow(2))}, "solvable",
               [](const Params &p) {
                 const Scalar &lambda = p("lambda"), &alpha = p("alpha"), &beta = p("beta");
                 BracketTable4 t;
                 t.set(kW, kZ, lambda * W);
                 t.set(kZ, kX, alpha * X + beta * Y + p("w1") * W);
                 t.set(kZ, kY, -beta * X + alpha * Y + p("w2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      2, AK, {alpha}, "g2^AK(lambda,beta,w1,w2)", {"lambda", "beta", "w1", "w2"}, {nonzero(lambda)},
      [](const Params &p) { return extend(p, {{"alpha", 0}}); },
      [](const Params &p) {
        BracketTable4 t;
        t.set(kW, kZ, p("lambda") * W);
        t.set(kZ, kX, p("beta") * Y + p("w1") * W);
        t.set(kZ, kY, -p("beta") * X + p("w2") * W);
        return t;
      },
      4));
  cat.claims.push_back(simple(
      2, I, {w1, w2}, "g2^I(lambda,alpha,beta)", {"lambda", "alpha", "beta"},
      {nonzero(lambda), nonzero((lambda - alpha).pow(2) + beta.pow(2))},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &alpha = p("alpha"), &beta = p("beta");
        BracketTable4 t;
        t.set(kW, kZ, p("lambda") * W);
        t.set(kZ, kX, alpha * X + beta * Y);
        t.set(kZ, kY, -beta * X + alpha * Y);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      2, K, {alpha, w1, w2}, "g2^K(lambda,beta)", {"lambda", "beta"}, {nonzero(lambda)},
      [](const Params &p) { return extend(p, {{"alpha", 0}, {"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        BracketTable4 t;
        t.set(kW, kZ, p("lambda") * W);
        t.set(kZ, kX, p("beta") * Y);
        t.set(kZ, kY, -p("beta") * X);
        return t;
      },
      2));
  cat.families.push_back(std::move(f));
}

void add_g3(Catalog &cat) {
  const Scalar alpha = var("alpha"), w1 = var("w1"), w2 = var("w2"), theta2 = var("theta2");
  // lambda = -2 alpha, r = theta1 = 0
  FamilySpec f{3, 'A', {"alpha", "beta", "w1", "w2", "theta2"}, {nonzero(alpha), nonzero(theta2)}, "solvable",
               [](const Params &p) {
                 const Scalar &alpha = p("alpha"), &beta = p("beta");
                 BracketTable4 t;
                 t.set(kW, kZ, -2 * alpha * W);
                 t.set(kZ, kX, alpha * X + beta * Y + p("w1") * W);
                 t.set(kZ, kY, -beta * X + alpha * Y + p("w2") * W);
                 t.set(kY, kX, p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      3, AK, {theta2 + 2 * alpha}, "g3^AK(alpha,beta,w1,w2)", {"alpha", "beta", "w1", "w2"}, {nonzero(alpha)},
      [](const Params &p) { return extend(p, {{"theta2", -2 * p("alpha")}}); },
      [](const Params &p) {
        const Scalar &alpha = p("alpha"), &beta = p("beta");
        BracketTable4 t;
        t.set(kW, kZ, -2 * alpha * W);
        t.set(kZ, kX, alpha * X + beta * Y + p("w1") * W);
        t.set(kZ, kY, -beta * X + alpha * Y + p("w2") * W);
        t.set(kY, kX, -2 * alpha * W);
        return t;
      },
      4));
  cat.claims.push_back(simple(
      3, I, {w1, w2}, "g3^I(alpha,beta,theta2)", {"alpha", "beta", "theta2"}, {nonzero(alpha), nonzero(theta2)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &alpha = p("alpha"), &beta = p("beta");
        BracketTable4 t;
        t.set(kW, kZ, -2 * alpha * W);
        t.set(kZ, kX, alpha * X + beta * Y);
        t.set(kZ, kY, -beta * X + alpha * Y);
        t.set(kY, kX, p("theta2") * W);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      3, K, {theta2 + 2 * alpha, w1, w2}, "g3^K(alpha,beta)", {"alpha", "beta"}, {nonzero(alpha)},
      [](const Params &p) { return extend(p, {{"theta2", -2 * p("alpha")}, {"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &alpha = p("alpha"), &beta = p("beta");
        BracketTable4 t;
        t.set(kW, kZ, -2 * alpha * W);
        t.set(kZ, kX, alpha * X + beta * Y);
        t.set(kZ, kY, -beta * X + alpha * Y);
        t.set(kY, kX, -2 * alpha * W);
        return t;
      },
      2));
  cat.families.push_back(std::move(f));
}

// ---------------------------------------------------------------------------
// Case (B): lambda != 0 and (lambda - alpha)^2 + beta^2 = 0

void add_g4(Catalog &cat) {
  const Scalar lambda = var("lambda"), z2 = var("z2"), w1 = var("w1"), w2 = var("w2");
  FamilySpec f{4, 'B', {"lambda", "z2", "w1", "w2"}, {nonzero(lambda)}, "solvable", [](const Params &p) {
                 const Scalar &lambda = p("lambda"), &z2 = p("z2"), &w1 = p("w1");
                 BracketTable4 t;
                 t.set(kW, kZ, lambda * W);
                 t.set(kZ, kX, lambda * X + w1 * W);
                 t.set(kZ, kY, lambda * Y + z2 * Z + p("w2") * W);
                 t.set(kW, kY, -z2 * W);
                 t.set(kY, kX, -z2 * X - (z2 * w1 / lambda) * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      4, AK, {w1 * z2 - 2 * lambda.pow(2)}, "g4^AK(lambda,z2,w2)", {"lambda", "z2", "w2"},
      {nonzero(lambda), nonzero(z2)},
      [](const Params &p) { return extend(p, {{"w1", 2 * p("lambda").pow(2) / p("z2")}}); },
      [](const Params &p) {
        const Scalar &lambda = p("lambda"), &z2 = p("z2");
        BracketTable4 t;
        t.set(kW, kZ, lambda * W);
        t.set(kZ, kX, lambda * X + (2 * lambda.pow(2) / z2) * W);
        t.set(kZ, kY, lambda * Y + z2 * Z + p("w2") * W);
        t.set(kW, kY, -z2 * W);
        t.set(kY, kX, -z2 * X - 2 * lambda * W);
        return t;
      },
      3));

  Chart integrable{"g4^I(lambda,z2)", {"lambda", "z2"}, {nonzero(lambda)},
                   [](const Params &p) { return extend(p, {{"w1", -2 * p("z2")}, {"w2", 0}}); },
                   [](const Params &p) {
                     const Scalar &lambda = p("lambda"), &z2 = p("z2");
                     BracketTable4 t;
                     t.set(kW, kZ, lambda * W);
                     t.set(kZ, kX, lambda * X - 2 * z2 * W);
                     t.set(kZ, kY, lambda * Y + z2 * Z);
                     t.set(kW, kY, -z2 * W);
                     t.set(kY, kX, -z2 * X + (2 * z2.pow(2) / lambda) * W);
                     return t;
                   }};
  cat.claims.push_back(parametric(4, I, {2 * z2 + w1, w2}, {Branch{integrable.label, {integrable}}}, {2}));

  // On the integrable locus theta2 + 2 alpha = 2 (lambda^2 + z2^2) / lambda.
  Obstruction k_obstruction{"lambda^2 + z2^2", integrable, {0, lambda / 2, 0, 0}, {lambda, z2}, lambda};
  k_obstruction.chart.build = {};
  cat.claims.push_back(empty(4, K, std::move(k_obstruction)));
  cat.families.push_back(std::move(f));
}

// ---------------------------------------------------------------------------
// Case (C): lambda = 0, r != 0 and a beta - alpha b != 0

BracketTable4 g5_table(const Scalar &alpha, const Scalar &a, const Scalar &beta, const Scalar &b, const Scalar &r) {
  const Scalar d2 = 2 * (alpha * b - a * beta);
  BracketTable4 t;
  t.set(kZ, kX, alpha * X + beta * Y - (r * (beta * b - alpha * a) / d2) * Z - (r * (alpha.pow(2) - beta.pow(2)) / d2) * W);
  t.set(kZ, kY, -beta * X + alpha * Y - (r * (alpha * b + beta * a) / d2) * Z + (2 * r * alpha * beta / d2) * W);
  t.set(kW, kX, a * X + b * Y - (r * (b.pow(2) - a.pow(2)) / d2) * Z - (r * (alpha * a - beta * b) / d2) * W);
  t.set(kW, kY, -b * X + a * Y - (2 * r * a * b / d2) * Z + (r * (alpha * b + beta * a) / d2) * W);
  t.set(kY, kX, r * X + (a * r.pow(2) / d2) * Z - (alpha * r.pow(2) / d2) * W);
  return t;
}

/// The two almost Kaehler tables; `root` stands for sqrt(alpha b - a beta) and
/// `sign` selects the upper (+1) or lower (-1) signs.
BracketTable4 g5_ak_table(int sign, const Scalar &alpha, const Scalar &a, const Scalar &beta, const Scalar &b,
                          const Scalar &root) {
  const Scalar s = Scalar(sign);
  BracketTable4 t;
  t.set(kZ, kX, alpha * X + beta * Y - (s * (beta * b - alpha * a) / root) * Z - (s * (alpha.pow(2) - beta.pow(2)) / root) * W);
  t.set(kZ, kY, -beta * X + alpha * Y - (s * (alpha * b + beta * a) / root) * Z + (s * 2 * alpha * beta / root) * W);
  t.set(kW, kX, a * X + b * Y - (s * (b.pow(2) - a.pow(2)) / root) * Z - (s * (alpha * a - beta * b) / root) * W);
  t.set(kW, kY, -b * X + a * Y - (s * 2 * a * b / root) * Z + (s * (alpha * b + beta * a) / root) * W);
  t.set(kY, kX, s * 2 * root * X + 2 * a * Z - 2 * alpha * W);
  return t;
}

Branch g5_ak_branch(int sign) {
  const Scalar alpha = var("alpha"), a = var("a"), r = var("r");
  const std::string tag = sign > 0 ? "+" : "-";
  const Constraint r_sign = sign > 0 ? positive(r) : negative(r);
  // r^2 = 4 (alpha b - a beta) solved for b (alpha != 0) or beta (alpha = 0);
  // the root is r/2 on the upper branch and -r/2 on the lower one.
  Chart generic{"g5^AK" + tag + "(alpha,a,beta,r), alpha != 0",
                {"alpha", "a", "beta", "r"},
                {nonzero(alpha), r_sign},
                [](const Params &p) {
                  return extend(p, {{"b", (p("r").pow(2) / 4 + p("a") * p("beta")) / p("alpha")}});
                },
                [sign](const Params &p) {
                  const Scalar &alpha = p("alpha"), &a = p("a"), &beta = p("beta"), &r = p("r");
                  const Scalar b = (r.pow(2) / 4 + a * beta) / alpha;
                  return g5_ak_table(sign, alpha, a, beta, b, Scalar(sign) * r / 2);
                }};
  Chart slice{"g5^AK" + tag + "(a,b,r), alpha = 0",
              {"a", "b", "r"},
              {nonzero(a), r_sign},
              [](const Params &p) { return extend(p, {{"alpha", 0}, {"beta", -p("r").pow(2) / (4 * p("a"))}}); },
              [sign](const Params &p) {
                const Scalar &a = p("a"), &b = p("b"), &r = p("r");
                const Scalar beta = -r.pow(2) / (4 * a);
                return g5_ak_table(sign, Scalar(0), a, beta, b, Scalar(sign) * r / 2);
              }};
  return Branch{"g5^AK(alpha,a,beta,b)" + tag, {generic, slice}};
}

void add_g5(Catalog &cat) {
  const Scalar alpha = var("alpha"), a = var("a"), beta = var("beta"), b = var("b"), r = var("r");
  FamilySpec f{5, 'C', {"alpha", "a", "beta", "b", "r"}, {nonzero(r), nonzero(alpha * b - a * beta)}, "solvable",
               [](const Params &p) { return g5_table(p("alpha"), p("a"), p("beta"), p("b"), p("r")); }};

  cat.claims.push_back(parametric(5, AK, {r.pow(2) - 4 * (alpha * b - a * beta)}, {g5_ak_branch(+1), g5_ak_branch(-1)},
                                  {4, 4},
                                  {"sqrt(alpha*b - a*beta) is carried as r/2 (upper) or -r/2 (lower); the alpha = 0 "
                                   "slice is covered by a second chart"}));

  Chart integrable{"g5^I(alpha,beta,r)", {"alpha", "beta", "r"}, {nonzero(r), nonzero(alpha.pow(2) + beta.pow(2))},
                   [](const Params &p) { return extend(p, {{"a", p("beta")}, {"b", -p("alpha")}}); },
                   [](const Params &p) {
                     const Scalar &alpha = p("alpha"), &beta = p("beta"), &r = p("r");
                     const Scalar s = beta.pow(2) + alpha.pow(2);
                     const Scalar diff = alpha.pow(2) - beta.pow(2);
                     BracketTable4 t;
                     t.set(kZ, kX, alpha * X + beta * Y - (r * alpha * beta / s) * Z + (r * diff / (2 * s)) * W);
                     t.set(kZ, kY, -beta * X + alpha * Y - (r * diff / (2 * s)) * Z - (r * alpha * beta / s) * W);
                     t.set(kW, kX, beta * X - alpha * Y + (r * diff / (2 * s)) * Z + (r * alpha * beta / s) * W);
                     t.set(kW, kY, alpha * X + beta * Y - (r * alpha * beta / s) * Z + (r * diff / (2 * s)) * W);
                     t.set(kY, kX, r * X - (beta * r.pow(2) / (2 * s)) * Z + (alpha * r.pow(2) / (2 * s)) * W);
                     return t;
                   }};
  cat.claims.push_back(parametric(5, I, {a - beta, b + alpha}, {Branch{integrable.label, {integrable}}}, {3}));

  // -2 beta (theta1 - 2a) + 2 alpha (theta2 + 2 alpha) = r^2 + 4 (alpha^2 + beta^2) on the integrable locus.
  Obstruction k_obstruction{"r^2 + 4*(alpha^2 + beta^2)", integrable, {-2 * beta, 2 * alpha, 0, 0},
                            {r, 2 * alpha, 2 * beta}, r};
  k_obstruction.chart.build = {};
  cat.claims.push_back(empty(5, K, std::move(k_obstruction)));
  cat.families.push_back(std::move(f));
}

// ---------------------------------------------------------------------------
// Case (D): lambda = 0, r != 0 and a beta - alpha b = 0

void add_g6(Catalog &cat) {
  const Scalar z1 = var("z1"), z2 = var("z2"), z3 = var("z3"), r = var("r"), theta1 = var("theta1"),
               theta2 = var("theta2");
  // z4 = z3 (r + 2 z2) / (2 z1), w1 = -z1^2 / z3, w2 = z1 (r - 2 z2) / (2 z3)
  FamilySpec f{6, 'D', {"z1", "z2", "z3", "r", "theta1", "theta2"}, {nonzero(z1), nonzero(z3), nonzero(r)},
               "solvable", [](const Params &p) {
                 const Scalar &z1 = p("z1"), &z2 = p("z2"), &z3 = p("z3"), &r = p("r");
                 BracketTable4 t;
                 t.set(kZ, kX, z1 * Z - (z1.pow(2) / z3) * W);
                 t.set(kZ, kY, z2 * Z + (z1 * (r - 2 * z2) / (2 * z3)) * W);
                 t.set(kW, kX, z3 * Z - z1 * W);
                 t.set(kW, kY, (z3 * (r + 2 * z2) / (2 * z1)) * Z - z2 * W);
                 t.set(kY, kX, r * X + p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      6, AK, {theta1, theta2}, "g6^AK(z1,z2,z3,r)", {"z1", "z2", "z3", "r"}, {nonzero(z1), nonzero(z3), nonzero(r)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z1 = p("z1"), &z2 = p("z2"), &z3 = p("z3"), &r = p("r");
        BracketTable4 t;
        t.set(kZ, kX, z1 * Z - (z1.pow(2) / z3) * W);
        t.set(kZ, kY, z2 * Z + (z1 * (r - 2 * z2) / (2 * z3)) * W);
        t.set(kW, kX, z3 * Z - z1 * W);
        t.set(kW, kY, (z3 * (r + 2 * z2) / (2 * z1)) * Z - z2 * W);
        t.set(kY, kX, r * X);
        return t;
      },
      4));

  const Scalar r_i = (z1.pow(2) + z3.pow(2)) / z3;
  const Scalar z2_i = (z1.pow(2) - z3.pow(2)) / (2 * z3);
  auto integrable_table = [](const Params &p, const Scalar &theta1, const Scalar &theta2) {
    const Scalar &z1 = p("z1"), &z3 = p("z3");
    const Scalar half_diff = (z1.pow(2) - z3.pow(2)) / (2 * z3);
    BracketTable4 t;
    t.set(kZ, kX, z1 * Z - (z1.pow(2) / z3) * W);
    t.set(kZ, kY, half_diff * Z + z1 * W);
    t.set(kW, kX, z3 * Z - z1 * W);
    t.set(kW, kY, z1 * Z - half_diff * W);
    t.set(kY, kX, ((z1.pow(2) + z3.pow(2)) / z3) * X + theta1 * Z + theta2 * W);
    return t;
  };
  auto integrable_embed = [](const Params &p) {
    const Scalar &z1 = p("z1"), &z3 = p("z3");
    return extend(p, {{"r", (z1.pow(2) + z3.pow(2)) / z3}, {"z2", (z1.pow(2) - z3.pow(2)) / (2 * z3)}});
  };
  cat.claims.push_back(simple(
      6, I, {r - r_i, z2 - z2_i}, "g6^I(z1,z3,theta1,theta2)", {"z1", "z3", "theta1", "theta2"},
      {nonzero(z1), nonzero(z3)}, integrable_embed,
      [integrable_table](const Params &p) { return integrable_table(p, p("theta1"), p("theta2")); }, 4));
  cat.claims.push_back(simple(
      6, K, {theta1, theta2, r - r_i, z2 - z2_i}, "g6^K(z1,z3)", {"z1", "z3"}, {nonzero(z1), nonzero(z3)},
      [integrable_embed](const Params &p) {
        ParamMap out = integrable_embed(p);
        out["theta1"] = 0;
        out["theta2"] = 0;
        return out;
      },
      [integrable_table](const Params &p) { return integrable_table(p, 0, 0); }, 2));
  cat.families.push_back(std::move(f));
}

void add_g7(Catalog &cat) {
  const Scalar z2 = var("z2"), w1 = var("w1"), w2 = var("w2"), theta1 = var("theta1"), theta2 = var("theta2");
  // z1 = z3 = z4 = 0 and r = 2 z2
  FamilySpec f{7, 'D', {"z2", "w1", "w2", "theta1", "theta2"}, {nonzero(w1), nonzero(z2)}, "solvable",
               [](const Params &p) {
                 const Scalar &z2 = p("z2");
                 BracketTable4 t;
                 t.set(kZ, kX, p("w1") * W);
                 t.set(kZ, kY, z2 * Z + p("w2") * W);
                 t.set(kW, kY, -z2 * W);
                 t.set(kY, kX, 2 * z2 * X + p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      7, AK, {theta1, theta2}, "g7^AK(z2,w1,w2)", {"z2", "w1", "w2"}, {nonzero(w1), nonzero(z2)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kX, p("w1") * W);
        t.set(kZ, kY, z2 * Z + p("w2") * W);
        t.set(kW, kY, -z2 * W);
        t.set(kY, kX, 2 * z2 * X);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      7, I, {2 * z2 + w1, w2}, "g7^I(z2,theta1,theta2)", {"z2", "theta1", "theta2"}, {nonzero(z2)},
      [](const Params &p) { return extend(p, {{"w1", -2 * p("z2")}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kX, -2 * z2 * W);
        t.set(kZ, kY, z2 * Z);
        t.set(kW, kY, -z2 * W);
        t.set(kY, kX, 2 * z2 * X + p("theta1") * Z + p("theta2") * W);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      7, K, {theta1, theta2, 2 * z2 + w1, w2}, "g7^K(z2)", {"z2"}, {nonzero(z2)},
      [](const Params &p) { return extend(p, {{"w1", -2 * p("z2")}, {"w2", 0}, {"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kX, -2 * z2 * W);
        t.set(kZ, kY, z2 * Z);
        t.set(kW, kY, -z2 * W);
        t.set(kY, kX, 2 * z2 * X);
        return t;
      },
      1));
  cat.families.push_back(std::move(f));
}

void add_g8(Catalog &cat) {
  const Scalar z2 = var("z2"), z4 = var("z4"), w2 = var("w2"), theta1 = var("theta1"), theta2 = var("theta2");
  FamilySpec f{8, 'D', {"z2", "z4", "w2", "r", "theta1", "theta2"}, {nonzero(var("r"))}, "solvable",
               [](const Params &p) {
                 const Scalar &z2 = p("z2");
                 BracketTable4 t;
                 t.set(kZ, kY, z2 * Z + p("w2") * W);
                 t.set(kW, kY, p("z4") * Z - z2 * W);
                 t.set(kY, kX, p("r") * X + p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      8, AK, {theta1, theta2}, "g8^AK(z2,z4,w2,r)", {"z2", "z4", "w2", "r"}, {nonzero(var("r"))},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kY, z2 * Z + p("w2") * W);
        t.set(kW, kY, p("z4") * Z - z2 * W);
        t.set(kY, kX, p("r") * X);
        return t;
      },
      4));
  cat.claims.push_back(simple(
      8, I, {z2, z4 + w2}, "g8^I(w2,r,theta1,theta2)", {"w2", "r", "theta1", "theta2"}, {nonzero(var("r"))},
      [](const Params &p) { return extend(p, {{"z2", 0}, {"z4", -p("w2")}}); },
      [](const Params &p) {
        const Scalar &w2 = p("w2");
        BracketTable4 t;
        t.set(kZ, kY, w2 * W);
        t.set(kW, kY, -w2 * Z);
        t.set(kY, kX, p("r") * X + p("theta1") * Z + p("theta2") * W);
        return t;
      },
      4));
  cat.claims.push_back(simple(
      8, K, {theta1, theta2, z2, z4 + w2}, "g8^K(w2,r)", {"w2", "r"}, {nonzero(var("r"))},
      [](const Params &p) { return extend(p, {{"z2", 0}, {"z4", -p("w2")}, {"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &w2 = p("w2");
        BracketTable4 t;
        t.set(kZ, kY, w2 * W);
        t.set(kW, kY, -w2 * Z);
        t.set(kY, kX, p("r") * X);
        return t;
      },
      2));
  cat.families.push_back(std::move(f));
}

void add_g9(Catalog &cat) {
  const Scalar z2 = var("z2"), z3 = var("z3"), z4 = var("z4"), theta1 = var("theta1"), theta2 = var("theta2");
  // r = -2 z2
  FamilySpec f{9, 'D', {"z2", "z3", "z4", "theta1", "theta2"}, {nonzero(z3), nonzero(z2)}, "solvable",
               [](const Params &p) {
                 const Scalar &z2 = p("z2");
                 BracketTable4 t;
                 t.set(kZ, kY, z2 * Z);
                 t.set(kW, kX, p("z3") * Z);
                 t.set(kW, kY, p("z4") * Z - z2 * W);
                 t.set(kY, kX, -2 * z2 * X + p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      9, AK, {theta1, theta2}, "g9^AK(z2,z3,z4)", {"z2", "z3", "z4"}, {nonzero(z3), nonzero(z2)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kY, z2 * Z);
        t.set(kW, kX, p("z3") * Z);
        t.set(kW, kY, p("z4") * Z - z2 * W);
        t.set(kY, kX, -2 * z2 * X);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      9, I, {2 * z2 + z3, z4}, "g9^I(z2,theta1,theta2)", {"z2", "theta1", "theta2"}, {nonzero(z2)},
      [](const Params &p) { return extend(p, {{"z3", -2 * p("z2")}, {"z4", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kY, z2 * Z);
        t.set(kW, kX, -2 * z2 * Z);
        t.set(kW, kY, -z2 * W);
        t.set(kY, kX, -2 * z2 * X + p("theta1") * Z + p("theta2") * W);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      9, K, {theta1, theta2, 2 * z2 + z3, z4}, "g9^K(z2)", {"z2"}, {nonzero(z2)},
      [](const Params &p) { return extend(p, {{"z3", -2 * p("z2")}, {"z4", 0}, {"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kY, z2 * Z);
        t.set(kW, kX, -2 * z2 * Z);
        t.set(kW, kY, -z2 * W);
        t.set(kY, kX, -2 * z2 * X);
        return t;
      },
      1));
  cat.families.push_back(std::move(f));
}

// ---------------------------------------------------------------------------
// Case (E): lambda = 0, r = 0 and alpha b - a beta != 0

void add_g10(Catalog &cat) {
  const Scalar alpha = var("alpha"), a = var("a"), beta = var("beta"), b = var("b");
  const Scalar det = alpha * b - a * beta;
  FamilySpec f{10, 'E', {"alpha", "a", "beta", "b"}, {nonzero(det)}, "solvable", [](const Params &p) {
                 const Scalar &alpha = p("alpha"), &a = p("a"), &beta = p("beta"), &b = p("b");
                 BracketTable4 t;
                 t.set(kZ, kX, alpha * X + beta * Y);
                 t.set(kZ, kY, -beta * X + alpha * Y);
                 t.set(kW, kX, a * X + b * Y);
                 t.set(kW, kY, -b * X + a * Y);
                 return t;
               }};

  // theta1 - 2a = -2a and theta2 + 2 alpha = 2 alpha cannot both vanish while alpha b - a beta != 0.
  const std::array<Scalar, 4> mult = {beta * det / 2, b * det / 2, 0, 0};
  cat.claims.push_back(empty(10, AK, on_family(f, "(alpha*b - a*beta)^2", mult, {det}, det)));
  cat.claims.push_back(whole(10, I, 4));
  cat.claims.push_back(empty(10, K, on_family(f, "(alpha*b - a*beta)^2", mult, {det}, det)));
  cat.families.push_back(std::move(f));
}

// ---------------------------------------------------------------------------
// Case (F): lambda = 0, r = 0 and alpha b - a beta = 0

void add_g11(Catalog &cat) {
  const Scalar z1 = var("z1"), z2 = var("z2"), theta1 = var("theta1"), theta2 = var("theta2");
  FamilySpec f{11, 'F', {"z1", "z2", "z3", "w1", "theta1", "theta2"}, {nonzero(z1)}, "solvable",
               [](const Params &p) {
                 const Scalar &z1 = p("z1"), &z2 = p("z2"), &z3 = p("z3"), &w1 = p("w1");
                 BracketTable4 t;
                 t.set(kZ, kX, z1 * Z + w1 * W);
                 t.set(kZ, kY, z2 * Z + (z2 * w1 / z1) * W);
                 t.set(kW, kX, z3 * Z - z1 * W);
                 t.set(kW, kY, (z2 * z3 / z1) * Z - z2 * W);
                 t.set(kY, kX, p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      11, AK, {theta1, theta2}, "g11^AK(z1,z2,z3,w1)", {"z1", "z2", "z3", "w1"}, {nonzero(z1)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z1 = p("z1"), &z2 = p("z2"), &z3 = p("z3"), &w1 = p("w1");
        BracketTable4 t;
        t.set(kZ, kX, z1 * Z + w1 * W);
        t.set(kZ, kY, z2 * Z + (z2 * w1 / z1) * W);
        t.set(kW, kX, z3 * Z - z1 * W);
        t.set(kW, kY, (z2 * z3 / z1) * Z - z2 * W);
        return t;
      },
      4));
  const std::array<Scalar, 4> mult = {0, 0, z1 / 2, z2 / 2};
  cat.claims.push_back(empty(11, I, on_family(f, "z1^2 + z2^2", mult, {z1, z2}, z1),
                             {"the integrability paragraph concludes with the Kaehler subfamily being {0}; "
                              "the integrable subfamily is recorded as empty"}));
  cat.claims.push_back(empty(11, K, on_family(f, "z1^2 + z2^2", mult, {z1, z2}, z1)));
  cat.families.push_back(std::move(f));
}

void add_g12(Catalog &cat) {
  const Scalar z3 = var("z3"), w1 = var("w1"), theta1 = var("theta1"), theta2 = var("theta2");
  // z1 = z2 = 0, z4 = z3 w2 / w1
  FamilySpec f{12, 'F', {"z3", "w1", "w2", "theta1", "theta2"}, {nonzero(w1)}, "solvable", [](const Params &p) {
                 const Scalar &z3 = p("z3"), &w1 = p("w1"), &w2 = p("w2");
                 BracketTable4 t;
                 t.set(kZ, kX, w1 * W);
                 t.set(kZ, kY, w2 * W);
                 t.set(kW, kX, z3 * Z);
                 t.set(kW, kY, (z3 * w2 / w1) * Z);
                 t.set(kY, kX, p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      12, AK, {theta1, theta2}, "g12^AK(z3,w1,w2)", {"z3", "w1", "w2"}, {nonzero(w1)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z3 = p("z3"), &w1 = p("w1"), &w2 = p("w2");
        BracketTable4 t;
        t.set(kZ, kX, w1 * W);
        t.set(kZ, kY, w2 * W);
        t.set(kW, kX, z3 * Z);
        t.set(kW, kY, (z3 * w2 / w1) * Z);
        return t;
      },
      3));
  auto integrable_table = [](const Params &p, const Scalar &theta1, const Scalar &theta2) {
    const Scalar &w1 = p("w1"), &w2 = p("w2");
    BracketTable4 t;
    t.set(kZ, kX, w1 * W);
    t.set(kZ, kY, w2 * W);
    t.set(kW, kX, -w1 * Z);
    t.set(kW, kY, -w2 * Z);
    t.set(kY, kX, theta1 * Z + theta2 * W);
    return t;
  };
  cat.claims.push_back(simple(
      12, I, {z3 + w1}, "g12^I(w1,w2,theta1,theta2)", {"w1", "w2", "theta1", "theta2"}, {nonzero(w1)},
      [](const Params &p) { return extend(p, {{"z3", -p("w1")}}); },
      [integrable_table](const Params &p) { return integrable_table(p, p("theta1"), p("theta2")); }, 4));
  cat.claims.push_back(simple(
      12, K, {theta1, theta2, z3 + w1}, "g12^K(w1,w2)", {"w1", "w2"}, {nonzero(w1)},
      [](const Params &p) { return extend(p, {{"z3", -p("w1")}, {"theta1", 0}, {"theta2", 0}}); },
      [integrable_table](const Params &p) { return integrable_table(p, 0, 0); }, 2));
  cat.families.push_back(std::move(f));
}

void add_g13(Catalog &cat) {
  const Scalar z3 = var("z3"), theta1 = var("theta1"), theta2 = var("theta2");
  FamilySpec f{13, 'F', {"z3", "z4", "theta1", "theta2"}, {nonzero(z3)}, "nilpotent", [](const Params &p) {
                 BracketTable4 t;
                 t.set(kW, kX, p("z3") * Z);
                 t.set(kW, kY, p("z4") * Z);
                 t.set(kY, kX, p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      13, AK, {theta1, theta2}, "g13^AK(z3,z4)", {"z3", "z4"}, {nonzero(z3)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        BracketTable4 t;
        t.set(kW, kX, p("z3") * Z);
        t.set(kW, kY, p("z4") * Z);
        return t;
      },
      2));
  // 2 z2 + z3 + w1 = z3 on this family.
  const std::array<Scalar, 4> mult = {0, 0, 0, z3};
  cat.claims.push_back(empty(13, I, on_family(f, "z3^2", mult, {z3}, z3)));
  cat.claims.push_back(empty(13, K, on_family(f, "z3^2", mult, {z3}, z3)));
  cat.families.push_back(std::move(f));
}

void add_g14(Catalog &cat) {
  const Scalar z2 = var("z2"), z4 = var("z4"), w2 = var("w2"), theta1 = var("theta1"), theta2 = var("theta2");
  FamilySpec f{14, 'F', {"z2", "z4", "w2", "theta1", "theta2"}, {}, "solvable", [](const Params &p) {
                 const Scalar &z2 = p("z2");
                 BracketTable4 t;
                 t.set(kZ, kY, z2 * Z + p("w2") * W);
                 t.set(kW, kY, p("z4") * Z - z2 * W);
                 t.set(kY, kX, p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      14, AK, {theta1, theta2}, "g14^AK(z2,z4,w2)", {"z2", "z4", "w2"}, {},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &z2 = p("z2");
        BracketTable4 t;
        t.set(kZ, kY, z2 * Z + p("w2") * W);
        t.set(kW, kY, p("z4") * Z - z2 * W);
        return t;
      },
      3));
  auto integrable_table = [](const Params &p, const Scalar &theta1, const Scalar &theta2) {
    const Scalar &w2 = p("w2");
    BracketTable4 t;
    t.set(kZ, kY, w2 * W);
    t.set(kW, kY, -w2 * Z);
    t.set(kY, kX, theta1 * Z + theta2 * W);
    return t;
  };
  cat.claims.push_back(simple(
      14, I, {z2, z4 + w2}, "g14^I(w2,theta1,theta2)", {"w2", "theta1", "theta2"}, {},
      [](const Params &p) { return extend(p, {{"z2", 0}, {"z4", -p("w2")}}); },
      [integrable_table](const Params &p) { return integrable_table(p, p("theta1"), p("theta2")); }, 3));
  cat.claims.push_back(simple(
      14, K, {theta1, theta2, z2, z4 + w2}, "g14^K(w2)", {"w2"}, {},
      [](const Params &p) { return extend(p, {{"z2", 0}, {"z4", -p("w2")}, {"theta1", 0}, {"theta2", 0}}); },
      [integrable_table](const Params &p) { return integrable_table(p, 0, 0); }, 1));
  cat.families.push_back(std::move(f));
}

void add_g15(Catalog &cat) {
  const Scalar alpha = var("alpha"), w1 = var("w1"), w2 = var("w2");
  FamilySpec f{15, 'F', {"alpha", "w1", "w2"}, {nonzero(alpha)}, "solvable", [](const Params &p) {
                 const Scalar &alpha = p("alpha");
                 BracketTable4 t;
                 t.set(kZ, kX, alpha * X + p("w1") * W);
                 t.set(kZ, kY, alpha * Y + p("w2") * W);
                 return t;
               }};

  const std::array<Scalar, 4> mult = {0, alpha / 2, 0, 0};
  cat.claims.push_back(empty(15, AK, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.claims.push_back(simple(
      15, I, {w1, w2}, "g15^I(alpha)", {"alpha"}, {nonzero(alpha)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        BracketTable4 t;
        t.set(kZ, kX, p("alpha") * X);
        t.set(kZ, kY, p("alpha") * Y);
        return t;
      },
      1));
  cat.claims.push_back(empty(15, K, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.families.push_back(std::move(f));
}

void add_g16(Catalog &cat) {
  const Scalar beta = var("beta"), w1 = var("w1"), w2 = var("w2"), theta1 = var("theta1"), theta2 = var("theta2");
  FamilySpec f{16, 'F', {"beta", "w1", "w2", "theta1", "theta2"}, {nonzero(beta)}, "not solvable in general",
               [](const Params &p) {
                 const Scalar &beta = p("beta");
                 BracketTable4 t;
                 t.set(kZ, kX, beta * Y + p("w1") * W);
                 t.set(kZ, kY, -beta * X + p("w2") * W);
                 t.set(kY, kX, p("theta1") * Z + p("theta2") * W);
                 return t;
               }};

  cat.claims.push_back(simple(
      16, AK, {theta1, theta2}, "g16^AK(beta,w1,w2)", {"beta", "w1", "w2"}, {nonzero(beta)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &beta = p("beta");
        BracketTable4 t;
        t.set(kZ, kX, beta * Y + p("w1") * W);
        t.set(kZ, kY, -beta * X + p("w2") * W);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      16, I, {w1, w2}, "g16^I(beta,theta1,theta2)", {"beta", "theta1", "theta2"}, {nonzero(beta)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &beta = p("beta");
        BracketTable4 t;
        t.set(kZ, kX, beta * Y);
        t.set(kZ, kY, -beta * X);
        t.set(kY, kX, p("theta1") * Z + p("theta2") * W);
        return t;
      },
      3));
  cat.claims.push_back(simple(
      16, K, {theta1, theta2, w1, w2}, "g16^K(beta)", {"beta"}, {nonzero(beta)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}, {"theta1", 0}, {"theta2", 0}}); },
      [](const Params &p) {
        const Scalar &beta = p("beta");
        BracketTable4 t;
        t.set(kZ, kX, beta * Y);
        t.set(kZ, kY, -beta * X);
        return t;
      },
      1));
  cat.families.push_back(std::move(f));
}

void add_g17(Catalog &cat) {
  const Scalar alpha = var("alpha"), a = var("a"), w1 = var("w1"), w2 = var("w2");
  FamilySpec f{17, 'F', {"alpha", "a", "w1", "w2"}, {nonzero(alpha), nonzero(a)}, "solvable", [](const Params &p) {
                 const Scalar &alpha = p("alpha"), &a = p("a"), &w1 = p("w1"), &w2 = p("w2");
                 BracketTable4 t;
                 t.set(kZ, kX, alpha * X - (a * w1 / alpha) * Z + w1 * W);
                 t.set(kZ, kY, alpha * Y - (a * w2 / alpha) * Z + w2 * W);
                 t.set(kW, kX, a * X - (a.pow(2) * w1 / alpha.pow(2)) * Z + (a * w1 / alpha) * W);
                 t.set(kW, kY, a * Y - (a.pow(2) * w2 / alpha.pow(2)) * Z + (a * w2 / alpha) * W);
                 return t;
               }};

  const std::array<Scalar, 4> mult = {0, alpha / 2, 0, 0};
  cat.claims.push_back(empty(17, AK, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.claims.push_back(simple(
      17, I, {w1, w2}, "g17^I(alpha,a)", {"alpha", "a"}, {nonzero(alpha), nonzero(a)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        BracketTable4 t;
        t.set(kZ, kX, p("alpha") * X);
        t.set(kZ, kY, p("alpha") * Y);
        t.set(kW, kX, p("a") * X);
        t.set(kW, kY, p("a") * Y);
        return t;
      },
      2, {"integrable subfamily also appears under an H superscript; read as I"}));
  cat.claims.push_back(empty(17, K, on_family(f, "alpha^2", mult, {alpha}, alpha),
                             {"Kaehler emptiness is also stated for the almost Kaehler label; read as K"}));
  cat.families.push_back(std::move(f));
}

void add_g18(Catalog &cat) {
  const Scalar beta = var("beta"), b = var("b"), z3 = var("z3"), z4 = var("z4"), theta1 = var("theta1"),
               theta2 = var("theta2");
  auto table = [](const Params &p, const Scalar &z3, const Scalar &z4, const Scalar &theta1, const Scalar &theta2) {
    const Scalar &beta = p("beta"), &b = p("b");
    BracketTable4 t;
    t.set(kZ, kX, beta * Y + (beta * z3 / b) * Z - (beta.pow(2) * z3 / b.pow(2)) * W);
    t.set(kZ, kY, -beta * X + (beta * z4 / b) * Z - (beta.pow(2) * z4 / b.pow(2)) * W);
    t.set(kW, kX, b * Y + z3 * Z - (beta * z3 / b) * W);
    t.set(kW, kY, -b * X + z4 * Z - (beta * z4 / b) * W);
    t.set(kY, kX, theta1 * Z + theta2 * W);
    return t;
  };
  FamilySpec f{18, 'F', {"beta", "b", "z3", "z4", "theta1", "theta2"}, {nonzero(beta), nonzero(b)},
               "not solvable in general",
               [table](const Params &p) { return table(p, p("z3"), p("z4"), p("theta1"), p("theta2")); }};

  cat.claims.push_back(simple(
      18, AK, {theta1, theta2}, "g18^AK(beta,b,z3,z4)", {"beta", "b", "z3", "z4"}, {nonzero(beta), nonzero(b)},
      [](const Params &p) { return extend(p, {{"theta1", 0}, {"theta2", 0}}); },
      [table](const Params &p) { return table(p, p("z3"), p("z4"), 0, 0); }, 4));
  auto integrable_table = [](const Params &p, const Scalar &theta1, const Scalar &theta2) {
    const Scalar &beta = p("beta"), &b = p("b");
    BracketTable4 t;
    t.set(kZ, kX, beta * Y);
    t.set(kZ, kY, -beta * X);
    t.set(kW, kX, b * Y);
    t.set(kW, kY, -b * X);
    t.set(kY, kX, theta1 * Z + theta2 * W);
    return t;
  };
  cat.claims.push_back(simple(
      18, I, {z3, z4}, "g18^I(beta,b,theta1,theta2)", {"beta", "b", "theta1", "theta2"},
      {nonzero(beta), nonzero(b)}, [](const Params &p) { return extend(p, {{"z3", 0}, {"z4", 0}}); },
      [integrable_table](const Params &p) { return integrable_table(p, p("theta1"), p("theta2")); }, 4));
  cat.claims.push_back(simple(
      18, K, {theta1, theta2, z3, z4}, "g18^K(beta,b)", {"beta", "b"}, {nonzero(beta), nonzero(b)},
      [](const Params &p) { return extend(p, {{"z3", 0}, {"z4", 0}, {"theta1", 0}, {"theta2", 0}}); },
      [integrable_table](const Params &p) { return integrable_table(p, 0, 0); }, 2));
  cat.families.push_back(std::move(f));
}

void add_g19(Catalog &cat) {
  const Scalar alpha = var("alpha"), beta = var("beta"), w1 = var("w1"), w2 = var("w2");
  FamilySpec f{19, 'F', {"alpha", "beta", "w1", "w2"}, {nonzero(alpha), nonzero(beta)}, "solvable",
               [](const Params &p) {
                 const Scalar &alpha = p("alpha"), &beta = p("beta");
                 BracketTable4 t;
                 t.set(kZ, kX, alpha * X + beta * Y + p("w1") * W);
                 t.set(kZ, kY, -beta * X + alpha * Y + p("w2") * W);
                 return t;
               }};

  const std::array<Scalar, 4> mult = {0, alpha / 2, 0, 0};
  cat.claims.push_back(empty(19, AK, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.claims.push_back(simple(
      19, I, {w1, w2}, "g19^I(alpha,beta)", {"alpha", "beta"}, {nonzero(alpha), nonzero(beta)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &alpha = p("alpha"), &beta = p("beta");
        BracketTable4 t;
        t.set(kZ, kX, alpha * X + beta * Y);
        t.set(kZ, kY, -beta * X + alpha * Y);
        return t;
      },
      2, {"integrable subfamily also appears under an H superscript; read as I"}));
  cat.claims.push_back(empty(19, K, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.families.push_back(std::move(f));
}

void add_g20(Catalog &cat) {
  const Scalar alpha = var("alpha"), a = var("a"), beta = var("beta"), w1 = var("w1"), w2 = var("w2");
  // b = beta a / alpha
  FamilySpec f{20, 'F', {"alpha", "a", "beta", "w1", "w2"}, {nonzero(alpha), nonzero(a), nonzero(beta)}, "solvable",
               [](const Params &p) {
                 const Scalar &alpha = p("alpha"), &a = p("a"), &beta = p("beta"), &w1 = p("w1"), &w2 = p("w2");
                 BracketTable4 t;
                 t.set(kZ, kX, alpha * X + beta * Y - (a * w1 / alpha) * Z + w1 * W);
                 t.set(kZ, kY, -beta * X + alpha * Y - (a * w2 / alpha) * Z + w2 * W);
                 t.set(kW, kX, a * X + (beta * a / alpha) * Y - (a.pow(2) * w1 / alpha.pow(2)) * Z + (a / alpha * w1) * W);
                 t.set(kW, kY, -(beta * a / alpha) * X + a * Y - (a.pow(2) * w2 / alpha.pow(2)) * Z + (a / alpha * w2) * W);
                 return t;
               }};

  const std::array<Scalar, 4> mult = {0, alpha / 2, 0, 0};
  cat.claims.push_back(empty(20, AK, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.claims.push_back(simple(
      20, I, {w1, w2}, "g20^I(alpha,a,beta)", {"alpha", "a", "beta"}, {nonzero(alpha), nonzero(a), nonzero(beta)},
      [](const Params &p) { return extend(p, {{"w1", 0}, {"w2", 0}}); },
      [](const Params &p) {
        const Scalar &alpha = p("alpha"), &a = p("a"), &beta = p("beta");
        BracketTable4 t;
        t.set(kZ, kX, alpha * X + beta * Y);
        t.set(kZ, kY, -beta * X + alpha * Y);
        t.set(kW, kX, a * X + (beta * a / alpha) * Y);
        t.set(kW, kY, -(beta * a / alpha) * X + a * Y);
        return t;
      },
      3));
  cat.claims.push_back(empty(20, K, on_family(f, "alpha^2", mult, {alpha}, alpha)));
  cat.families.push_back(std::move(f));
}

} // namespace

Catalog build_catalog() {
  Catalog cat;
  for (auto add : {add_g1, add_g2, add_g3, add_g4, add_g5, add_g6, add_g7, add_g8, add_g9, add_g10, add_g11, add_g12,
                   add_g13, add_g14, add_g15, add_g16, add_g17, add_g18, add_g19, add_g20})
    add(cat);
  return cat;
}

} // namespace liealg
