#pragma once

#include "liealg/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace liealg {

using Json = nlohmann::ordered_json;

/// Object with the fourteen coefficient keys; values are rendered scalars.
Json to_json(const StructureConstants &sc);

/// Inverse of to_json. Omitted keys are zero. Throws ParseError for a
/// non-object, an unknown key, a non-string value or a malformed scalar.
StructureConstants structure_constants_from_json(const Json &json);

/// Residuals, foliation flags, class flags and class witnesses of `sc`.
Json classification_json(const StructureConstants &sc);

/// Bracket relations of `sc` keyed "[W,Z]", "[Z,X]", "[Z,Y]", "[W,X]", "[W,Y]",
/// "[Y,X]", each an array of its X, Y, Z, W coefficients.
Json brackets_json(const StructureConstants &sc);

/// The family export: one object per family with its claims.
Json catalog_json(const Catalog &catalog);

Json to_json(const VerificationReport &report);
Json reports_json(const std::vector<VerificationReport> &reports);

/// Table of family, class, outcome, dimension and status, one row per report,
/// followed by the failures of unclean reports.
std::string reports_text(const std::vector<VerificationReport> &reports);

} // namespace liealg
