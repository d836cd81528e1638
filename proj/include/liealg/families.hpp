#pragma once

#include "liealg/hermitian.hpp"
#include "liealg/sampling.hpp"
#include "liealg/structure.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liealg {

using ParamMap = std::map<std::string, Scalar>;

/// Read-only view of a parameter binding; lookups of unbound names throw
/// MissingBinding.
class Params {
public:
  explicit Params(const ParamMap &values) : values_(values) {}
  const Scalar &operator()(const std::string &name) const;
  const ParamMap &values() const { return values_; }

private:
  const ParamMap &values_;
};

ParamMap symbolic_params(const std::vector<std::string> &names);
ParamMap to_param_map(const Assignment &point);

/// Builds the displayed bracket relations from a parameter binding.
using Builder = std::function<BracketTable4(const Params &)>;
/// Maps chart parameters to the parameters of the enclosing family.
using Embedding = std::function<ParamMap(const Params &)>;

struct FamilySpec {
  int id = 0;
  char case_label = 'A';
  std::vector<std::string> params;
  std::vector<Constraint> constraints;
  std::string prose_tag;
  Builder build;

  /// Throws ShapeViolation if the displayed relations leave the structure-constant shape.
  StructureConstants construct(const ParamMap &values) const;
};

/// A rational parametrization of (part of) a subfamily.
struct Chart {
  std::string label;
  std::vector<std::string> params;
  std::vector<Constraint> constraints;
  Embedding embed;
  /// Displayed bracket relations; when empty the family table at embed(p) is used.
  Builder build;
};

/// One branch of a subfamily; its dimension is the arity of the first chart.
/// Further charts cover lower-dimensional slices the first chart misses.
struct Branch {
  std::string label;
  std::vector<Chart> charts;

  std::size_t dimension() const { return charts.front().params.size(); }
};

/// Certificate that a class is empty on a family: on `chart`,
///   sum_i multipliers[i] * witness_i == sum_j squares[j]^2
/// identically, with `anchor` (one of the squares) nonzero on the domain.
/// Witness order: theta1 - 2a, theta2 + 2alpha, 2z1 - z4 - w2, 2z2 + z3 + w1.
struct Obstruction {
  std::string display;
  Chart chart;
  std::array<Scalar, 4> multipliers;
  std::vector<Scalar> squares;
  Scalar anchor;
};

enum class Outcome { Whole, Empty, Parametric };

struct SubfamilyClaim {
  int family_id = 0;
  HermitianClass cls = HermitianClass::AlmostKahler;
  Outcome outcome = Outcome::Parametric;
  /// Parametric: expressions in the family parameters that all vanish exactly on the subfamily.
  std::vector<Scalar> conditions;
  std::vector<Branch> branches;
  /// Branch dimensions as stated for the subfamily.
  std::vector<std::size_t> claimed_dimensions;
  std::optional<Obstruction> obstruction;
  std::vector<std::string> notes;

  /// Membership test at a rational point of the family.
  bool contains(const Assignment &family_point) const;
};

struct Catalog {
  std::vector<FamilySpec> families;
  std::vector<SubfamilyClaim> claims;

  const FamilySpec &family(int id) const;
  const SubfamilyClaim &claim(int id, HermitianClass cls) const;
};

/// The twenty families and their sixty class claims, built once.
const Catalog &catalog();
Catalog build_catalog();

/// Throws MissingBinding or DomainViolation.
StructureConstants make_family(const FamilySpec &family, const Assignment &params);
StructureConstants make_family(int id, const Assignment &params);

std::string_view class_name(HermitianClass cls);
std::optional<HermitianClass> parse_class(std::string_view name);
std::string_view outcome_name(Outcome outcome);

/// A single injected catalog defect, used to check that verification notices it.
/// Text form: `<family>[.<AK|I|K>]:<field>:<negate|drop>`, e.g. `6:w2:negate`
/// or `4.AK:theta2:drop`. Without a class the family table is altered, with a
/// class every chart table of that claim is.
struct Mutation {
  enum class Kind { Negate, Drop };

  int family_id = 0;
  std::optional<HermitianClass> cls;
  std::string field;
  Kind kind = Kind::Negate;

  /// Throws ParseError.
  static Mutation parse(std::string_view text);
  std::string to_string() const;
};

Catalog mutate(Catalog catalog, const Mutation &mutation);

} // namespace liealg
