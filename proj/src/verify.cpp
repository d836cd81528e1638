#include "liealg/verify.hpp"

#include "liealg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace liealg {

namespace {

constexpr std::array<const char *, 4> kWitnessNames = {"theta1 - 2a", "theta2 + 2alpha", "2z1 - z4 - w2",
                                                       "2z2 + z3 + w1"};
constexpr std::size_t kMaxSampleFailures = 5;
constexpr std::size_t kChartDomainSamples = 50;

std::array<bool, 4> class_mask(HermitianClass cls) {
  switch (cls) {
  case HermitianClass::AlmostKahler:
    return {true, true, false, false};
  case HermitianClass::Integrable:
    return {false, false, true, true};
  case HermitianClass::Kahler:
    break;
  }
  return {true, true, true, true};
}

std::size_t class_index(HermitianClass cls) {
  switch (cls) {
  case HermitianClass::AlmostKahler:
    return 1;
  case HermitianClass::Integrable:
    return 2;
  case HermitianClass::Kahler:
    break;
  }
  return 3;
}

std::string render(const Assignment &point) {
  std::string out = "{";
  for (const auto &[name, value] : point) {
    if (out.size() > 1)
      out += ", ";
    out += name + "=" + value.to_string();
  }
  return out + "}";
}

Assignment evaluate_all(const ParamMap &values, const std::vector<std::string> &names, const Assignment &point) {
  Assignment out;
  for (const auto &name : names)
    out[name] = values.at(name).substitute(point);
  return out;
}

std::string first_difference(const StructureConstants &lhs, const StructureConstants &rhs) {
  for (auto name : StructureConstants::kNames)
    if (!(lhs.field(name) == rhs.field(name)))
      return std::string(name);
  return {};
}

/// Appends one failure per non-vanishing residual; true when all vanish.
bool check_jacobi(const StructureConstants &sc, const std::string &where, VerificationReport &report) {
  const auto residuals = jacobi_residuals_appendix(sc);
  bool ok = true;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (residuals[i].is_zero())
      continue;
    ok = false;
    report.failures.push_back(where + "Jacobi residual #" + std::to_string(i + 1) +
                              " does not vanish: " + residuals[i].to_string());
  }
  return ok;
}

bool check_witnesses(const StructureConstants &sc, HermitianClass cls, const std::string &where,
                     VerificationReport &report) {
  const auto witnesses = class_witnesses(sc).as_array();
  const auto mask = class_mask(cls);
  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!mask[i] || witnesses[i].is_zero())
      continue;
    ok = false;
    report.failures.push_back(where + kWitnessNames[i] + " = " + witnesses[i].to_string() + " does not vanish");
  }
  return ok;
}

/// A chart with its symbolic embedding precomputed.
struct PreparedChart {
  const Chart *chart = nullptr;
  ParamMap embedded;
  StructureConstants constants;
};

/// Symbolic checks shared by parametric charts and obstruction charts: the
/// embedding binds every family parameter and the displayed table (if any)
/// equals the family table at the embedding.
std::optional<PreparedChart> prepare_chart(const FamilySpec &family, const Chart &chart, VerificationReport &report) {
  const std::string where = chart.label + ": ";
  const ParamMap sym = symbolic_params(chart.params);
  const Params p(sym);
  PreparedChart out{&chart, {}, {}};
  try {
    out.embedded = chart.embed(p);
    for (const auto &name : family.params)
      if (!out.embedded.contains(name))
        throw MissingBinding(name);
    const StructureConstants on_family = family.construct(out.embedded);
    out.constants = chart.build ? from_bracket_table(chart.build(p)) : on_family;
    const std::string diff = first_difference(out.constants, on_family);
    if (!diff.empty()) {
      report.failures.push_back(where + "displayed table differs from the family table in " + diff);
      return std::nullopt;
    }
  } catch (const Error &e) {
    report.failures.push_back(where + e.what());
    return std::nullopt;
  }
  return out;
}

/// Chart points must land in the family domain.
void check_chart_domain(const FamilySpec &family, const PreparedChart &prepared, Sampler &sampler,
                        VerificationReport &report) {
  const Chart &chart = *prepared.chart;
  for (std::size_t n = 0; n < kChartDomainSamples; ++n) {
    auto point = sampler.point_in(chart.params, chart.constraints);
    if (!point) {
      report.failures.push_back(chart.label + ": no sample satisfies the chart constraints");
      return;
    }
    try {
      const Assignment image = evaluate_all(prepared.embedded, family.params, *point);
      for (const auto &c : family.constraints)
        if (!c.holds(image)) {
          report.failures.push_back(chart.label + ": point " + render(*point) + " leaves the family domain (" +
                                    c.to_string() + ")");
          return;
        }
    } catch (const Error &e) {
      report.failures.push_back(chart.label + ": point " + render(*point) + ": " + e.what());
      return;
    }
  }
}

/// The chart domain contains the family domain when the embedding is the
/// identity and every chart constraint is a family constraint.
bool covers_family(const FamilySpec &family, const PreparedChart &prepared) {
  for (const auto &name : family.params)
    if (!(prepared.embedded.at(name) == Scalar::variable(name)))
      return false;
  for (const auto &c : prepared.chart->constraints) {
    const bool listed = std::any_of(family.constraints.begin(), family.constraints.end(), [&](const Constraint &f) {
      return f.relation == c.relation && f.expression == c.expression;
    });
    if (!listed)
      return false;
  }
  return true;
}

/// Whether `label` is a chart of a parametric claim for a class containing `cls`.
bool is_enclosing_chart(const Catalog &catalog, int family_id, HermitianClass cls, const std::string &label) {
  if (cls != HermitianClass::Kahler)
    return false;
  for (auto outer : {HermitianClass::AlmostKahler, HermitianClass::Integrable}) {
    const SubfamilyClaim &claim = catalog.claim(family_id, outer);
    if (claim.outcome != Outcome::Parametric)
      continue;
    for (const auto &branch : claim.branches)
      for (const auto &chart : branch.charts)
        if (chart.label == label)
          return true;
  }
  return false;
}

void check_obstruction(const Catalog &catalog, const FamilySpec &family, const SubfamilyClaim &claim,
                       VerificationReport &report, std::vector<PreparedChart> &charts) {
  if (!claim.obstruction) {
    report.failures.push_back("empty claim without an obstruction certificate");
    return;
  }
  const Obstruction &ob = *claim.obstruction;
  report.obstruction = ob.display;
  auto prepared = prepare_chart(family, ob.chart, report);
  if (!prepared)
    return;

  const auto witnesses = class_witnesses(prepared->constants).as_array();
  const auto mask = class_mask(claim.cls);
  Scalar lhs;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!mask[i] && !ob.multipliers[i].is_zero())
      report.failures.push_back(std::string("obstruction uses ") + kWitnessNames[i] + ", which is not a class condition");
    lhs += ob.multipliers[i] * witnesses[i];
  }
  Scalar rhs;
  for (const auto &s : ob.squares)
    rhs += s * s;
  if (!(lhs == rhs))
    report.failures.push_back("obstruction identity fails: difference " + (lhs - rhs).to_string());
  try {
    if (!(parse_scalar(ob.display) == rhs))
      report.failures.push_back("obstruction display '" + ob.display + "' is not the sum of squares " + rhs.to_string());
  } catch (const Error &e) {
    report.failures.push_back(std::string("obstruction display: ") + e.what());
  }

  const bool anchored = std::any_of(ob.squares.begin(), ob.squares.end(),
                                    [&](const Scalar &s) { return s == ob.anchor || s == -ob.anchor; });
  const bool anchor_nonzero = std::any_of(ob.chart.constraints.begin(), ob.chart.constraints.end(), [&](const Constraint &c) {
    const Scalar ratio = c.expression / ob.anchor;
    return ratio.variables().empty() && !ratio.is_zero();
  });
  if (!anchored || !anchor_nonzero)
    report.failures.push_back("obstruction anchor " + ob.anchor.to_string() + " is not a square that is nonzero on " +
                              ob.chart.label);

  if (!covers_family(family, *prepared) && !is_enclosing_chart(catalog, family.id, claim.cls, ob.chart.label))
    report.failures.push_back("obstruction chart " + ob.chart.label + " does not cover the class locus");

  if (!covers_family(family, *prepared))
    charts.push_back(std::move(*prepared));
}

/// Randomized comparison of the class predicate with the claim. Points come
/// from the family domain, from the charts, and from chart points with one
/// coordinate replaced.
void check_tightness(const Catalog &catalog, const FamilySpec &family, const SubfamilyClaim &claim,
                     const std::vector<PreparedChart> &charts, const VerificationOptions &options,
                     VerificationReport &report) {
  Sampler sampler(derive_seed(options.seed, 7));
  const SubfamilyClaim *ak = nullptr, *in = nullptr;
  if (claim.cls == HermitianClass::Kahler) {
    ak = &catalog.claim(family.id, HermitianClass::AlmostKahler);
    in = &catalog.claim(family.id, HermitianClass::Integrable);
  }

  std::size_t failures = 0, samples = 0;
  const std::size_t max_attempts = 20 * options.tightness_samples + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && samples < options.tightness_samples; ++attempt) {
    const std::size_t source = charts.empty() ? 0 : attempt % 3;
    std::optional<Assignment> point;
    try {
      if (source == 0) {
        point = sampler.point_in(family.params, family.constraints);
      } else {
        const PreparedChart &pc = charts[sampler.index(charts.size())];
        auto local = sampler.point_in(pc.chart->params, pc.chart->constraints);
        if (!local)
          continue;
        point = evaluate_all(pc.embedded, family.params, *local);
        if (source == 2)
          (*point)[family.params[sampler.index(family.params.size())]] = sampler.rational();
        if (!satisfies_all(family.constraints, *point))
          continue;
      }
      if (!point)
        break;

      ++samples;
      const bool predicate = classify(make_family(family, *point)).in_class(claim.cls);
      const bool expected = claim.contains(*point);
      std::string problem;
      if (predicate != expected)
        problem = std::string("class predicate is ") + (predicate ? "true" : "false") + " but the claim says " +
                  (expected ? "member" : "non-member");
      else if (source == 1 && claim.outcome == Outcome::Parametric && !expected)
        problem = "chart point fails the claimed conditions";
      else if (ak && (expected != (ak->contains(*point) && in->contains(*point))))
        problem = "Kaehler membership differs from almost Kaehler and integrable membership";
      if (!problem.empty() && failures++ < kMaxSampleFailures)
        report.failures.push_back("sample " + render(*point) + ": " + problem);
    } catch (const Error &e) {
      if (failures++ < kMaxSampleFailures)
        report.failures.push_back(std::string("sampling: ") + e.what() + (point ? " at " + render(*point) : ""));
    }
  }
  report.tightness_samples = samples;
  if (samples < options.tightness_samples) {
    ++failures;
    report.failures.push_back("only " + std::to_string(samples) + " in-domain samples drawn");
  }
  report.tightness_ok = failures == 0;
}

} // namespace

VerificationReport verify_family_symbolic(const Catalog &catalog, int family_id, const VerificationOptions &options) {
  VerificationReport report;
  report.family_id = family_id;
  const FamilySpec &family = catalog.family(family_id);
  report.dimensions = {family.params.size()};

  StructureConstants sc;
  try {
    sc = family.construct(symbolic_params(family.params));
  } catch (const Error &e) {
    report.failures.push_back(e.what());
    return report;
  }
  report.jacobi_ok = check_jacobi(sc, "", report);

  const std::set<std::string> declared(family.params.begin(), family.params.end());
  for (auto name : StructureConstants::kNames)
    for (const auto &v : sc.field(name).variables())
      if (!declared.contains(v))
        report.failures.push_back(std::string(name) + " uses undeclared parameter " + v);
  for (const auto &c : family.constraints)
    for (const auto &v : c.expression.variables())
      if (!declared.contains(v))
        report.failures.push_back("constraint " + c.to_string() + " uses undeclared parameter " + v);
  report.membership_ok = report.clean();

  Sampler sampler(options.seed);
  std::size_t bad = 0;
  for (std::size_t n = 0; n < options.lie_samples; ++n) {
    auto point = sampler.point_in(family.params, family.constraints);
    if (!point) {
      report.failures.push_back("no sample satisfies the domain constraints");
      ++bad;
      break;
    }
    ++report.tightness_samples;
    const StructureConstants numeric = make_family(family, *point);
    bool generic_ok = true;
    for (const auto &v : jacobi_residuals_generic(to_bracket_table(numeric)))
      generic_ok = generic_ok && v.is_zero();
    if ((!is_lie_algebra(numeric) || !generic_ok) && bad++ < kMaxSampleFailures)
      report.failures.push_back("not a Lie algebra at " + render(*point));
  }
  report.tightness_ok = bad == 0;
  return report;
}

VerificationReport verify_subfamily(const Catalog &catalog, int family_id, HermitianClass cls,
                                    const VerificationOptions &options) {
  const FamilySpec &family = catalog.family(family_id);
  const SubfamilyClaim &claim = catalog.claim(family_id, cls);
  VerificationReport report;
  report.family_id = family_id;
  report.cls = cls;
  report.outcome = claim.outcome;
  report.notes = claim.notes;
  report.jacobi_ok = true;

  std::vector<PreparedChart> charts;
  Sampler domain_sampler(derive_seed(options.seed, 3));
  switch (claim.outcome) {
  case Outcome::Parametric: {
    if (claim.branches.size() != claim.claimed_dimensions.size() || claim.branches.empty())
      report.failures.push_back("branch count does not match the claimed dimensions");
    for (std::size_t b = 0; b < claim.branches.size(); ++b) {
      const Branch &branch = claim.branches[b];
      report.dimensions.push_back(branch.dimension());
      if (b < claim.claimed_dimensions.size() && branch.dimension() != claim.claimed_dimensions[b])
        report.failures.push_back(branch.label + ": " + std::to_string(branch.dimension()) +
                                  " free parameters, claimed " + std::to_string(claim.claimed_dimensions[b]));
      for (const auto &chart : branch.charts) {
        auto prepared = prepare_chart(family, chart, report);
        if (!prepared)
          continue;
        const std::string where = chart.label + ": ";
        report.jacobi_ok = check_jacobi(prepared->constants, where, report) && report.jacobi_ok;
        check_witnesses(prepared->constants, cls, where, report);
        for (const auto &condition : claim.conditions) {
          try {
            const Scalar value = condition.compose(prepared->embedded);
            if (!value.is_zero())
              report.failures.push_back(where + "condition " + condition.to_string() + " = 0 fails: " +
                                        value.to_string());
          } catch (const Error &e) {
            report.failures.push_back(where + "condition " + condition.to_string() + ": " + e.what());
          }
        }
        check_chart_domain(family, *prepared, domain_sampler, report);
        charts.push_back(std::move(*prepared));
      }
    }
    break;
  }
  case Outcome::Whole: {
    report.dimensions = {family.params.size()};
    if (claim.claimed_dimensions != report.dimensions)
      report.failures.push_back("whole-family claim with a dimension other than the family's");
    try {
      check_witnesses(family.construct(symbolic_params(family.params)), cls, "", report);
    } catch (const Error &e) {
      report.failures.push_back(e.what());
    }
    break;
  }
  case Outcome::Empty:
    check_obstruction(catalog, family, claim, report, charts);
    break;
  }
  report.membership_ok = report.clean();

  check_tightness(catalog, family, claim, charts, options, report);
  return report;
}

std::vector<VerificationReport> verify_paper(const Catalog &catalog, const VerificationOptions &options) {
  struct Job {
    int id;
    std::optional<HermitianClass> cls;
    VerificationOptions options;
  };
  std::vector<Job> jobs;
  for (const auto &family : catalog.families) {
    const auto id = static_cast<std::uint64_t>(family.id);
    jobs.push_back({family.id, std::nullopt, options});
    jobs.back().options.seed = derive_seed(options.seed, id * 4);
    for (auto cls : {HermitianClass::AlmostKahler, HermitianClass::Integrable, HermitianClass::Kahler}) {
      jobs.push_back({family.id, cls, options});
      jobs.back().options.seed = derive_seed(options.seed, id * 4 + class_index(cls));
    }
  }

  std::vector<VerificationReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job &job = jobs[i];
      try {
        reports[i] = job.cls ? verify_subfamily(catalog, job.id, *job.cls, job.options)
                             : verify_family_symbolic(catalog, job.id, job.options);
      } catch (const std::exception &e) {
        reports[i].family_id = job.id;
        reports[i].cls = job.cls;
        reports[i].failures.push_back(e.what());
      }
    }
  };
  const std::size_t thread_count = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < thread_count; ++t)
    threads.emplace_back(worker);
  for (auto &t : threads)
    t.join();
  return reports;
}

StructureConstants make_subfamily(const Catalog &catalog, int family_id, HermitianClass cls, const Assignment &params,
                                  std::size_t branch, std::size_t chart) {
  const FamilySpec &family = catalog.family(family_id);
  const Chart &c = catalog.claim(family_id, cls).branches.at(branch).charts.at(chart);
  for (const auto &name : c.params)
    if (!params.contains(name))
      throw MissingBinding(name);
  for (const auto &constraint : c.constraints)
    if (!constraint.holds(params))
      throw DomainViolation(constraint.to_string());
  const ParamMap values = to_param_map(params);
  const Params p(values);
  return c.build ? from_bracket_table(c.build(p)) : family.construct(c.embed(p));
}

} // namespace liealg
