// liealg: classify structure constants, reproduce the family catalog
// checks, list the families and sample them.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "liealg/errors.hpp"
#include "liealg/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace liealg;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char *env = std::getenv("LIEALG_SEED");
  if (!env || !*env)
    return 0;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used != std::string(env).size())
      throw std::invalid_argument(env);
    return value;
  } catch (const std::exception &) {
    throw UsageError(std::string("LIEALG_SEED is not an unsigned integer: ") + env);
  }
}

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

int cmd_classify(const std::string &input, const std::string &format) {
  Json parsed;
  try {
    parsed = Json::parse(read_input(input));
  } catch (const Json::parse_error &e) {
    throw ParseError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  const StructureConstants sc = structure_constants_from_json(parsed);
  const Json report = classification_json(sc);
  if (format == "json") {
    std::cout << report.dump(2) << '\n';
    return kOk;
  }
  std::cout << "Lie algebra:      " << yes_no(report["is_lie_algebra"]) << '\n';
  const auto &residuals = report["residuals"];
  for (std::size_t i = 0; i < residuals.size(); ++i)
    if (residuals[i] != "0")
      std::cout << "  residual #" << i + 1 << " = " << residuals[i].get<std::string>() << '\n';
  const auto &fol = report["foliation"];
  for (const char *key : {"conformal", "minimal", "totally_geodesic", "riemannian", "h_integrable"})
    std::cout << std::left << std::setw(18) << (std::string(key) + ":") << yes_no(fol[key]) << '\n';
  const auto &cls = report["classification"];
  for (const char *key : {"almost_kahler", "integrable", "kahler"})
    std::cout << std::left << std::setw(18) << (std::string(key) + ":") << yes_no(cls[key]) << '\n';
  for (const auto &[name, value] : report["witnesses"].items())
    std::cout << "  " << name << " = " << value.get<std::string>() << '\n';
  return kOk;
}

int cmd_verify_paper(const std::string &format, const std::string &out, const std::vector<std::string> &mutations,
                     std::size_t samples, std::uint64_t seed, const std::string &golden) {
  Catalog cat = build_catalog();
  for (const auto &text : mutations)
    cat = mutate(std::move(cat), Mutation::parse(text));

  VerificationOptions options;
  options.tightness_samples = samples;
  options.seed = seed;
  std::vector<VerificationReport> reports = verify_paper(cat, options);
  bool clean = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.clean(); });

  const Json families = catalog_json(cat);
  std::string golden_diff;
  if (!golden.empty()) {
    const Json expected = Json::parse(read_input(golden));
    if (expected != families) {
      clean = false;
      golden_diff = "family export differs from " + golden;
      for (std::size_t i = 0; i < std::min(expected.size(), families.size()); ++i)
        if (expected[i] != families[i]) {
          golden_diff += " (first difference: family " + std::to_string(families[i]["id"].get<int>()) + ")";
          break;
        }
    }
  }

  if (format == "json") {
    Json doc = reports_json(reports);
    doc["clean"] = clean;
    doc["seed"] = seed;
    doc["mutations"] = mutations;
    if (!golden.empty())
      doc["golden"] = golden_diff.empty() ? "match" : golden_diff;
    doc["families"] = families;
    write_output(doc.dump(2) + "\n", out);
  } else {
    std::string text = reports_text(reports);
    if (!golden.empty())
      text += golden_diff.empty() ? "family export matches " + golden + "\n" : golden_diff + "\n";
    write_output(text, out);
  }

  if (!clean) {
    std::cerr << "verification failed:";
    for (const auto &r : reports)
      if (!r.clean())
        std::cerr << " g" << r.family_id << (r.cls ? "." + std::string(class_name(*r.cls)) : "");
    std::cerr << (golden_diff.empty() ? "" : " golden") << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_list_families(const std::string &format, const std::string &out) {
  const Catalog &cat = catalog();
  if (format == "json") {
    write_output(catalog_json(cat).dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream text;
  for (const auto &f : cat.families) {
    text << "g" << f.id << " (case " << f.case_label << ", " << f.prose_tag << ") params:";
    for (const auto &p : f.params)
      text << ' ' << p;
    text << '\n';
    for (const auto &c : f.constraints)
      text << "    " << c.to_string() << '\n';
    for (const auto &claim : cat.claims) {
      if (claim.family_id != f.id)
        continue;
      text << "  " << std::left << std::setw(3) << class_name(claim.cls) << outcome_name(claim.outcome);
      for (auto d : claim.claimed_dimensions)
        text << ' ' << d;
      text << '\n';
    }
  }
  write_output(text.str(), out);
  return kOk;
}

int cmd_sample(int family_id, std::size_t count, std::uint64_t seed, const std::string &format) {
  if (family_id < 1 || family_id > 20)
    throw UsageError("unknown family " + std::to_string(family_id));
  const FamilySpec &family = catalog().family(family_id);
  Sampler sampler(seed);
  Json points = Json::array();
  std::size_t lie = 0, ak = 0, integrable = 0, kahler = 0;
  for (std::size_t n = 0; n < count; ++n) {
    auto point = sampler.point_in(family.params, family.constraints);
    if (!point) {
      std::cerr << "no in-domain sample found for g" << family_id << '\n';
      return kVerificationFailed;
    }
    const StructureConstants sc = make_family(family, *point);
    const ClassificationResult result = classify(sc);
    const bool is_lie = is_lie_algebra(sc);
    lie += is_lie;
    ak += result.almost_kahler;
    integrable += result.integrable;
    kahler += result.kahler;
    Json params = Json::object();
    for (const auto &name : family.params)
      params[name] = point->at(name).to_string();
    points.push_back(Json{{"params", params},
                          {"is_lie_algebra", is_lie},
                          {"almost_kahler", result.almost_kahler},
                          {"integrable", result.integrable},
                          {"kahler", result.kahler}});
  }
  if (format == "json") {
    const Json doc{{"family", family_id},
                   {"seed", seed},
                   {"count", count},
                   {"summary",
                    {{"is_lie_algebra", lie}, {"almost_kahler", ak}, {"integrable", integrable}, {"kahler", kahler}}},
                   {"points", points}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "g" << family_id << ", " << count << " samples, seed " << seed << '\n'
              << "  lie algebra:   " << lie << "/" << count << '\n'
              << "  almost kahler: " << ak << "/" << count << '\n'
              << "  integrable:    " << integrable << "/" << count << '\n'
              << "  kahler:        " << kahler << "/" << count << '\n';
  }
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Almost Hermitian classification of 4-dimensional Lie algebras with conformal foliations"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string input, out, golden;
  std::vector<std::string> mutations;
  std::size_t samples = 1000, count = 100;
  std::uint64_t seed = 0;
  int family_id = 0;
  const auto formats = CLI::IsMember({"json", "text"});

  auto *classify_cmd = app.add_subcommand("classify", "Classify structure constants read from a JSON object");
  classify_cmd->add_option("--input", input, "JSON file, or - for stdin")->required();
  classify_cmd->add_option("--format", format)->check(formats);

  auto *verify_cmd = app.add_subcommand("verify-paper", "Verify all families and class claims");
  verify_cmd->add_option("--format", format)->check(formats);
  verify_cmd->add_option("--out", out, "Write the report here instead of stdout");
  verify_cmd->add_option("--mutate", mutations, "Inject a catalog defect, e.g. 6:w2:negate or 4.AK:theta2:drop");
  verify_cmd->add_option("--samples", samples, "Randomized trials per claim")->check(CLI::PositiveNumber);
  auto *verify_seed = verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--golden", golden, "Compare the family export with this file");

  auto *list_cmd = app.add_subcommand("list-families", "Export the family catalog");
  list_cmd->add_option("--format", format)->check(formats);
  list_cmd->add_option("--out", out);

  auto *sample_cmd = app.add_subcommand("sample", "Classify random in-domain points of a family");
  sample_cmd->add_option("--family", family_id)->required();
  sample_cmd->add_option("-n,--count", count)->check(CLI::PositiveNumber);
  auto *sample_seed = sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--format", format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (!verify_seed->count() && !sample_seed->count())
      seed = default_seed();
    if (*classify_cmd)
      return cmd_classify(input, format);
    if (*verify_cmd)
      return cmd_verify_paper(format, out, mutations, samples, seed, golden);
    if (*list_cmd)
      return cmd_list_families(format, out);
    return cmd_sample(family_id, count, seed, format);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Json::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
