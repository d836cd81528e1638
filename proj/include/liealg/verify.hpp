#pragma once

#include "liealg/families.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

struct VerificationOptions {
  /// Randomized falsification trials per subfamily claim.
  std::size_t tightness_samples = 1000;
  /// Sampled Lie checks per family, on top of the symbolic one.
  std::size_t lie_samples = 100;
  std::uint64_t seed = 0;
};

/// Outcome of one verification job. A family job has no class; a claim job
/// has one. jacobi_ok always means identical (symbolic) vanishing.
struct VerificationReport {
  int family_id = 0;
  std::optional<HermitianClass> cls;
  std::optional<Outcome> outcome;
  bool jacobi_ok = false;
  bool membership_ok = false;
  bool tightness_ok = false;
  std::size_t tightness_samples = 0;
  std::vector<std::size_t> dimensions;
  std::string obstruction;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool clean() const { return failures.empty(); }
};

/// Substitutes the symbolic family table into the fourteen Jacobi polynomials
/// and checks that they vanish identically; also checks declared parameters
/// and samples the Lie property at in-domain points.
VerificationReport verify_family_symbolic(const Catalog &catalog, int family_id,
                                          const VerificationOptions &options = {});

/// Membership (symbolic), emptiness certificates (symbolic) and tightness
/// (randomized) for one class claim.
VerificationReport verify_subfamily(const Catalog &catalog, int family_id, HermitianClass cls,
                                    const VerificationOptions &options = {});

/// All 20 family jobs and 60 claim jobs, run in parallel. Reports are ordered
/// by family id, with the family report first and then AK, I, K.
std::vector<VerificationReport> verify_paper(const Catalog &catalog, const VerificationOptions &options = {});

/// Structure constants of a claim chart at a point of the chart parameters.
/// Throws MissingBinding, DomainViolation, or std::out_of_range for a bad
/// branch/chart index.
StructureConstants make_subfamily(const Catalog &catalog, int family_id, HermitianClass cls, const Assignment &params,
                                  std::size_t branch = 0, std::size_t chart = 0);

} // namespace liealg
