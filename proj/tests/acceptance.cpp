// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "support.hpp"

#include "liealg/geometry.hpp"
#include "liealg/hermitian.hpp"
#include "liealg/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sys/wait.h>

using namespace liealg;

namespace {

constexpr auto AK = HermitianClass::AlmostKahler;
constexpr auto I = HermitianClass::Integrable;
constexpr auto K = HermitianClass::Kahler;

const Vector4 X = Vector4::basis(kX), Y = Vector4::basis(kY), Z = Vector4::basis(kZ), W = Vector4::basis(kW);

Scalar var(const char *name) { return Scalar::variable(name); }

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string &what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

Verdict symbolic_jacobi() {
  Verdict out;
  VerificationOptions options;
  options.lie_samples = 0;
  for (const auto &family : catalog().families) {
    const auto report = verify_family_symbolic(catalog(), family.id, options);
    out.require(report.jacobi_ok && report.clean(), "g" + std::to_string(family.id) + " residuals do not vanish");
  }
  return out;
}

Verdict class_equivalence() {
  Verdict out;
  Sampler sampler(801);
  std::size_t ak = 0, in = 0;
  for (int n = 0; n < 1000; ++n) {
    const StructureConstants sc = support::random_biased_constants(sampler);
    const BracketTable4 t = to_bracket_table(sc);
    const bool ak_conditions = sc.theta1 == 2 * sc.a && sc.theta2 == -2 * sc.alpha;
    const bool in_conditions = (2 * sc.z1 - sc.z4 - sc.w2).is_zero() && (2 * sc.z2 + sc.z3 + sc.w1).is_zero();
    out.require(kahler_form_closed(t) == ak_conditions, "d omega disagrees at sample " + std::to_string(n));
    out.require(nijenhuis_vanishes(t) == in_conditions, "Nijenhuis disagrees at sample " + std::to_string(n));
    ak += ak_conditions;
    in += in_conditions;
  }
  out.require(ak >= 100 && in >= 100, "too few samples inside the classes");
  return out;
}

Verdict displayed_formulas() {
  Verdict out;
  const BracketTable4 t = to_bracket_table(support::generic_constants());
  out.require(d_omega(t, X, Y, Z) == -var("theta2") - 2 * var("alpha"), "d omega(X,Y,Z)");
  const Scalar nz = 2 * var("z1") - var("z4") - var("w2"), nw = 2 * var("z2") + var("z3") + var("w1");
  out.require(nijenhuis(t, X, Z) == -nz * Z - nw * W, "N(X,Z)");
  out.require(nijenhuis(t, X, Y).is_zero(), "N(X,Y)");
  out.require(nijenhuis(t, Z, W).is_zero(), "N(Z,W)");
  return out;
}

Verdict subfamily_table() {
  Verdict out;
  VerificationOptions options;
  options.tightness_samples = 1000;
  const auto reports = verify_paper(catalog(), options);
  std::map<std::pair<int, HermitianClass>, const VerificationReport *> claims;
  for (const auto &r : reports) {
    if (!r.cls)
      continue;
    claims[{r.family_id, *r.cls}] = &r;
    const std::string name = "g" + std::to_string(r.family_id) + "." + std::string(class_name(*r.cls));
    out.require(r.clean(), name + ": " + (r.failures.empty() ? "" : r.failures.front()));
    out.require(r.tightness_samples >= 1000, name + ": fewer than 1000 samples");
  }
  out.require(claims.size() == 60, "expected 60 claim reports");

  using D = std::vector<std::size_t>;
  const std::vector<std::tuple<int, HermitianClass, D>> parametric = {
      {1, AK, {3}}, {2, AK, {4}}, {3, K, {2}},  {5, AK, {4, 4}}, {6, K, {2}},  {7, K, {1}},
      {9, K, {1}},  {12, K, {2}}, {14, K, {1}}, {16, K, {1}},    {18, K, {2}}};
  for (const auto &[id, cls, dims] : parametric) {
    const auto *r = claims[{id, cls}];
    out.require(r && r->outcome == liealg::Outcome::Parametric && r->dimensions == dims,
                "dimension of g" + std::to_string(id) + "." + std::string(class_name(cls)));
  }
  const std::vector<std::pair<int, HermitianClass>> empty = {{4, K},   {11, I},  {13, I},  {17, AK}, {17, K},
                                                             {19, AK}, {19, K},  {20, AK}, {20, K}};
  for (const auto &[id, cls] : empty) {
    const auto *r = claims[{id, cls}];
    out.require(r && r->outcome == liealg::Outcome::Empty,
                "g" + std::to_string(id) + "." + std::string(class_name(cls)) + " should be empty");
  }
  const auto *whole = claims[{10, I}];
  out.require(whole && whole->outcome == liealg::Outcome::Whole, "g10.I should be the whole family");
  return out;
}

Verdict foliation_geometry() {
  Verdict out;
  Sampler sampler(805);
  for (int n = 0; n < 1000; ++n) {
    const StructureConstants sc = support::random_family_point(sampler);
    const BracketTable4 t = to_bracket_table(sc);
    const auto forms = second_fundamental_forms(levi_civita(t));
    const Vector4 mean = sc.alpha * Z + sc.a * W;
    out.require(forms.bh_xy.is_zero() && forms.bh_xx == mean && forms.bh_yy == mean, "B^H is not g (x) V");
    out.require(forms.trace_bv().is_zero(), "trace B^V is not zero");
    const FoliationFlags closed = foliation_flags(sc), direct = connection_flags(t);
    out.require(closed.totally_geodesic == direct.totally_geodesic && closed.riemannian == direct.riemannian &&
                    closed.h_integrable == direct.h_integrable && closed.mean_curvature == direct.mean_curvature,
                "closed-form flags differ from connection flags");
  }
  return out;
}

Verdict curvature() {
  Verdict out;
  const Scalar lambda = var("lambda");
  out.require(gaussian_curvature_k(lambda) == -lambda.pow(2), "curvature is not -lambda^2");
  return out;
}

Verdict oracle_equivalence() {
  Verdict out;
  Sampler sampler(807);
  std::size_t lie = 0;
  for (int n = 0; n < 1000; ++n) {
    const StructureConstants sc = n % 2 ? support::random_family_point(sampler) : support::random_constants(sampler);
    bool generic = true;
    for (const auto &v : jacobi_residuals_generic(to_bracket_table(sc)))
      generic = generic && v.is_zero();
    out.require(is_lie_algebra(sc) == generic, "Jacobi forms disagree at sample " + std::to_string(n));
    lie += generic;
  }
  out.require(lie >= 500, "too few Lie samples");
  return out;
}

int exit_code(const std::string &args) {
  const int status = std::system((std::string(LIEALG_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict end_to_end() {
  Verdict out;
  out.require(exit_code("verify-paper") == 0, "clean build does not exit 0");
  for (const char *m : {"6:w2:negate", "1:r:negate", "5:z4:negate", "17:z3:negate", "4.AK:theta2:negate",
                        "12.I:z4:drop", "20:b:drop"})
    out.require(exit_code(std::string("verify-paper --mutate ") + m) == 1, std::string("mutation ") + m + " not detected");
  return out;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"symbolic Jacobi soundness of all 20 families", symbolic_jacobi},
      {"class conditions equal d omega and Nijenhuis vanishing", class_equivalence},
      {"displayed d omega and Nijenhuis formulas", displayed_formulas},
      {"all 60 subfamily claims and their dimensions", subfamily_table},
      {"foliation geometry invariants", foliation_geometry},
      {"curvature of K is -lambda^2", curvature},
      {"appendix and generic Jacobi forms agree", oracle_equivalence},
      {"verify-paper exit codes under mutation", end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict result = criteria[i].second();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << "criterion " << i + 1 << ": " << (result.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << " (" << std::fixed << std::setprecision(2) << elapsed.count() << " s)";
    if (!result.pass)
      std::cout << "  " << result.detail;
    std::cout << std::endl;
    failed += !result.pass;
  }
  return failed == 0 ? 0 : 1;
}
