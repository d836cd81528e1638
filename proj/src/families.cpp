#include "liealg/families.hpp"

#include "liealg/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace liealg {

const Scalar &Params::operator()(const std::string &name) const {
  auto it = values_.find(name);
  if (it == values_.end())
    throw MissingBinding(name);
  return it->second;
}

ParamMap symbolic_params(const std::vector<std::string> &names) {
  ParamMap out;
  for (const auto &name : names)
    out[name] = Scalar::variable(name);
  return out;
}

ParamMap to_param_map(const Assignment &point) {
  ParamMap out;
  for (const auto &[name, value] : point)
    out[name] = value;
  return out;
}

StructureConstants FamilySpec::construct(const ParamMap &values) const {
  return from_bracket_table(build(Params(values)));
}

bool SubfamilyClaim::contains(const Assignment &family_point) const {
  switch (outcome) {
  case Outcome::Whole:
    return true;
  case Outcome::Empty:
    return false;
  case Outcome::Parametric:
    for (const auto &c : conditions)
      if (!c.substitute(family_point).is_zero())
        return false;
    return true;
  }
  return false;
}

const FamilySpec &Catalog::family(int id) const {
  for (const auto &f : families)
    if (f.id == id)
      return f;
  throw std::out_of_range("unknown family " + std::to_string(id));
}

const SubfamilyClaim &Catalog::claim(int id, HermitianClass cls) const {
  for (const auto &c : claims)
    if (c.family_id == id && c.cls == cls)
      return c;
  throw std::out_of_range("no claim for family " + std::to_string(id) + " class " + std::string(class_name(cls)));
}

const Catalog &catalog() {
  static const Catalog instance = build_catalog();
  return instance;
}

StructureConstants make_family(const FamilySpec &family, const Assignment &params) {
  for (const auto &name : family.params)
    if (!params.contains(name))
      throw MissingBinding(name);
  for (const auto &c : family.constraints)
    if (!c.holds(params))
      throw DomainViolation(c.to_string());
  return family.construct(to_param_map(params));
}

StructureConstants make_family(int id, const Assignment &params) { return make_family(catalog().family(id), params); }

std::string_view class_name(HermitianClass cls) {
  switch (cls) {
  case HermitianClass::AlmostKahler:
    return "AK";
  case HermitianClass::Integrable:
    return "I";
  case HermitianClass::Kahler:
    return "K";
  }
  return "?";
}

std::optional<HermitianClass> parse_class(std::string_view name) {
  if (name == "AK")
    return HermitianClass::AlmostKahler;
  if (name == "I")
    return HermitianClass::Integrable;
  if (name == "K")
    return HermitianClass::Kahler;
  return std::nullopt;
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
  case Outcome::Whole:
    return "whole";
  case Outcome::Empty:
    return "empty";
  case Outcome::Parametric:
    return "parametric";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Mutations

Mutation Mutation::parse(std::string_view text) {
  Mutation m;
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos)
    throw ParseError("mutation must look like <family>[.<class>]:<field>:<negate|drop>", text.size());

  std::string_view target = text.substr(0, first);
  const auto dot = target.find('.');
  std::string_view id_text = target.substr(0, dot);
  auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), m.family_id);
  if (ec != std::errc() || ptr != id_text.data() + id_text.size() || m.family_id < 1 || m.family_id > 20)
    throw ParseError("bad family id", 0);
  if (dot != std::string_view::npos) {
    m.cls = parse_class(target.substr(dot + 1));
    if (!m.cls)
      throw ParseError("bad class", dot + 1);
  }

  m.field = std::string(text.substr(first + 1, second - first - 1));
  bool known = false;
  for (auto name : StructureConstants::kNames)
    known = known || name == m.field;
  if (!known)
    throw ParseError("unknown field '" + m.field + "'", first + 1);

  std::string_view kind = text.substr(second + 1);
  if (kind == "negate")
    m.kind = Kind::Negate;
  else if (kind == "drop")
    m.kind = Kind::Drop;
  else
    throw ParseError("unknown mutation kind", second + 1);
  return m;
}

std::string Mutation::to_string() const {
  std::string out = std::to_string(family_id);
  if (cls)
    out += "." + std::string(class_name(*cls));
  return out + ":" + field + ":" + (kind == Kind::Negate ? "negate" : "drop");
}

namespace {

Builder mutated(Builder original, const Mutation &m) {
  return [original = std::move(original), field = m.field, kind = m.kind](const Params &p) {
    StructureConstants sc = from_bracket_table(original(p));
    Scalar &value = sc.field(field);
    value = kind == Mutation::Kind::Negate ? -value : Scalar(0);
    return to_bracket_table(sc);
  };
}

} // namespace

Catalog mutate(Catalog cat, const Mutation &m) {
  if (!m.cls) {
    for (auto &f : cat.families)
      if (f.id == m.family_id)
        f.build = mutated(f.build, m);
    return cat;
  }
  for (auto &claim : cat.claims) {
    if (claim.family_id != m.family_id || claim.cls != *m.cls)
      continue;
    const FamilySpec &family = cat.family(m.family_id);
    for (auto &branch : claim.branches)
      for (auto &chart : branch.charts) {
        Builder base = chart.build;
        if (!base) {
          base = [build = family.build, embed = chart.embed](const Params &p) {
            const ParamMap values = embed(p);
            return build(Params(values));
          };
        }
        chart.build = mutated(base, m);
      }
  }
  return cat;
}

} // namespace liealg
