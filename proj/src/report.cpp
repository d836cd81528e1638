#include "liealg/report.hpp"

#include "liealg/errors.hpp"

#include <iomanip>
#include <sstream>

namespace liealg {

namespace {

struct BracketKey {
  const char *name;
  BasisIndex i, j;
};

constexpr std::array<BracketKey, 6> kBracketKeys = {{{"[W,Z]", kW, kZ},
                                                     {"[Z,X]", kZ, kX},
                                                     {"[Z,Y]", kZ, kY},
                                                     {"[W,X]", kW, kX},
                                                     {"[W,Y]", kW, kY},
                                                     {"[Y,X]", kY, kX}}};

Json vector_json(const Vector4 &v) {
  Json out = Json::array();
  for (const auto &x : v.c)
    out.push_back(x.to_string());
  return out;
}

Json scalars_json(const std::vector<Scalar> &values) {
  Json out = Json::array();
  for (const auto &x : values)
    out.push_back(x.to_string());
  return out;
}

Json constraints_json(const std::vector<Constraint> &constraints) {
  Json out = Json::array();
  for (const auto &c : constraints)
    out.push_back(c.to_string());
  return out;
}

Json chart_json(const Chart &chart) {
  return Json{{"label", chart.label}, {"params", chart.params}, {"constraints", constraints_json(chart.constraints)}};
}

Json claim_json(const SubfamilyClaim &claim) {
  Json out{{"class", class_name(claim.cls)}, {"outcome", outcome_name(claim.outcome)}};
  if (claim.outcome == Outcome::Parametric) {
    out["conditions"] = scalars_json(claim.conditions);
    Json branches = Json::array();
    for (const auto &branch : claim.branches) {
      Json charts = Json::array();
      for (const auto &chart : branch.charts)
        charts.push_back(chart_json(chart));
      branches.push_back(Json{{"label", branch.label}, {"dimension", branch.dimension()}, {"charts", charts}});
    }
    out["branches"] = branches;
  }
  if (claim.outcome != Outcome::Empty)
    out["dimensions"] = claim.claimed_dimensions;
  if (claim.obstruction) {
    const Obstruction &ob = *claim.obstruction;
    Json multipliers = Json::array();
    for (const auto &m : ob.multipliers)
      multipliers.push_back(m.to_string());
    out["obstruction"] = Json{{"expression", ob.display},
                              {"chart", chart_json(ob.chart)},
                              {"multipliers", multipliers},
                              {"squares", scalars_json(ob.squares)},
                              {"anchor", ob.anchor.to_string()}};
  }
  if (!claim.notes.empty())
    out["notes"] = claim.notes;
  return out;
}

} // namespace

Json to_json(const StructureConstants &sc) {
  Json out = Json::object();
  for (auto name : StructureConstants::kNames)
    out[std::string(name)] = sc.field(name).to_string();
  return out;
}

StructureConstants structure_constants_from_json(const Json &json) {
  if (!json.is_object())
    throw ParseError("expected a JSON object of structure coefficients", 0);
  StructureConstants sc;
  for (const auto &[key, value] : json.items()) {
    bool known = false;
    for (auto name : StructureConstants::kNames)
      known = known || name == key;
    if (!known)
      throw ParseError("unknown coefficient '" + key + "'", 0);
    if (!value.is_string())
      throw ParseError("value of '" + key + "' must be a string", 0);
    const std::string text = value.get<std::string>();
    try {
      sc.field(key) = parse_scalar(text);
    } catch (const ParseError &e) {
      throw ParseError("'" + key + "': cannot parse \"" + text + "\"", e.position());
    }
  }
  return sc;
}

Json classification_json(const StructureConstants &sc) {
  const BracketTable4 table = to_bracket_table(sc);
  const auto residuals = jacobi_residuals_appendix(sc);
  Json residual_list = Json::array();
  bool lie = true;
  for (const auto &r : residuals) {
    residual_list.push_back(r.to_string());
    lie = lie && r.is_zero();
  }

  const SecondFundamentalForms forms = second_fundamental_forms(levi_civita(table));
  bool conformal = true;
  try {
    conformal_witness(forms);
  } catch (const NotConformal &) {
    conformal = false;
  }
  const ClassificationResult result = classify(sc);
  const ClassWitnesses &w = result.witnesses;

  return Json{{"structure_constants", to_json(sc)},
              {"is_lie_algebra", lie},
              {"residuals", residual_list},
              {"foliation",
               {{"conformal", conformal},
                {"minimal", forms.trace_bv().is_zero()},
                {"totally_geodesic", result.flags.totally_geodesic},
                {"riemannian", result.flags.riemannian},
                {"h_integrable", result.flags.h_integrable},
                {"mean_curvature", vector_json(result.flags.mean_curvature)}}},
              {"classification",
               {{"almost_kahler", result.almost_kahler},
                {"integrable", result.integrable},
                {"kahler", result.kahler}}},
              {"witnesses",
               {{"theta1 - 2*a", w.theta1_minus_2a.to_string()},
                {"theta2 + 2*alpha", w.theta2_plus_2alpha.to_string()},
                {"2*z1 - z4 - w2", w.integrability_z.to_string()},
                {"2*z2 + z3 + w1", w.integrability_w.to_string()}}}};
}

Json brackets_json(const StructureConstants &sc) {
  const BracketTable4 table = to_bracket_table(sc);
  Json out = Json::object();
  for (const auto &key : kBracketKeys)
    out[key.name] = vector_json(table.bracket_of_basis(key.i, key.j));
  return out;
}

Json catalog_json(const Catalog &catalog) {
  Json out = Json::array();
  for (const auto &family : catalog.families) {
    Json claims = Json::array();
    for (const auto &claim : catalog.claims)
      if (claim.family_id == family.id)
        claims.push_back(claim_json(claim));
    out.push_back(Json{{"id", family.id},
                       {"case", std::string(1, family.case_label)},
                       {"params", family.params},
                       {"constraints", constraints_json(family.constraints)},
                       {"prose", family.prose_tag},
                       {"brackets", brackets_json(family.construct(symbolic_params(family.params)))},
                       {"claims", claims}});
  }
  return out;
}

Json to_json(const VerificationReport &report) {
  Json out{{"family", report.family_id}};
  out["class"] = report.cls ? Json(class_name(*report.cls)) : Json(nullptr);
  out["outcome"] = report.outcome ? Json(outcome_name(*report.outcome)) : Json("family");
  out["clean"] = report.clean();
  out["jacobi_ok"] = report.jacobi_ok;
  out["membership_ok"] = report.membership_ok;
  out["tightness_ok"] = report.tightness_ok;
  out["tightness_samples"] = report.tightness_samples;
  out["dimensions"] = report.dimensions;
  if (!report.obstruction.empty())
    out["obstruction"] = report.obstruction;
  out["failures"] = report.failures;
  if (!report.notes.empty())
    out["notes"] = report.notes;
  return out;
}

Json reports_json(const std::vector<VerificationReport> &reports) {
  Json list = Json::array();
  bool clean = true;
  for (const auto &r : reports) {
    list.push_back(to_json(r));
    clean = clean && r.clean();
  }
  return Json{{"clean", clean}, {"reports", list}};
}

std::string reports_text(const std::vector<VerificationReport> &reports) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "family" << std::setw(7) << "class" << std::setw(12) << "outcome"
      << std::setw(11) << "dimension" << "status\n";
  std::size_t failed = 0;
  for (const auto &r : reports) {
    std::string dims;
    for (auto d : r.dimensions)
      dims += (dims.empty() ? "" : ",") + std::to_string(d);
    if (r.outcome == Outcome::Empty)
      dims = "-";
    out << std::setw(8) << ("g" + std::to_string(r.family_id)) << std::setw(7)
        << (r.cls ? std::string(class_name(*r.cls)) : "-") << std::setw(12)
        << (r.outcome ? std::string(outcome_name(*r.outcome)) : "family") << std::setw(11) << dims
        << (r.clean() ? "ok" : "FAILED") << '\n';
    failed += r.clean() ? 0 : 1;
  }
  for (const auto &r : reports) {
    if (r.clean())
      continue;
    out << "\ng" << r.family_id << (r.cls ? " " + std::string(class_name(*r.cls)) : "") << ":\n";
    for (const auto &f : r.failures)
      out << "  " << f << '\n';
  }
  out << '\n' << (reports.size() - failed) << "/" << reports.size() << " reports clean\n";
  return out.str();
}

} // namespace liealg
