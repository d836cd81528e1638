// End-to-end tests of the liealg executable.

#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string &args) {
  const std::string command = std::string(LIEALG_CLI) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string &name, const std::string &content) {
  const std::string path = std::string(LIEALG_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

using nlohmann::json;

} // namespace

TEST_CASE("classify") {
  const Run ok = run("classify --input " + write_temp("lambda.json", R"({"lambda":"1"})"));
  CHECK(ok.status == 0);
  const json a = json::parse(ok.out);
  CHECK(a["is_lie_algebra"] == true);
  CHECK(a["classification"]["almost_kahler"] == true);
  CHECK(a["classification"]["integrable"] == true);

  const Run bad = run("classify --input " + write_temp("bad.json", R"({"lambda":"1","a":"1"})"));
  CHECK(bad.status == 0);
  const json b = json::parse(bad.out);
  CHECK(b["is_lie_algebra"] == false);
  CHECK(b["residuals"][0] == "1");

  const Run ak = run("classify --input " + write_temp("ak.json", R"({"theta2":"-2","alpha":"1"})"));
  CHECK(json::parse(ak.out)["classification"]["almost_kahler"] == true);

  CHECK(run("classify --input " + write_temp("syntax.json", R"({"lambda":"1//2"})")).status == 2);
  CHECK(run("classify --input " + write_temp("broken.json", R"({"lambda":)")).status == 2);
  CHECK(run("classify --input /nonexistent/file.json").status == 2);
  CHECK(run("classify").status == 2);
}

TEST_CASE("classify output is byte-identical across runs") {
  const std::string path = write_temp("g1.json", R"({"lambda":"1","r":"2","w1":"3","w2":"4","theta2":"6"})");
  const Run first = run("classify --input " + path);
  const Run second = run("classify --input " + path);
  CHECK(first.out == second.out);
  CHECK(run("classify --format text --input " + path).out.find("almost_kahler:") != std::string::npos);
}

TEST_CASE("sample") {
  const Run g10 = run("sample --family 10 -n 50 --seed 1");
  REQUIRE(g10.status == 0);
  const json s = json::parse(g10.out);
  CHECK(s["summary"]["integrable"] == 50);
  CHECK(s["summary"]["almost_kahler"] == 0);
  CHECK(s["summary"]["is_lie_algebra"] == 50);
  CHECK(s["points"].size() == 50);

  CHECK(run("sample --family 4 -n 50 --seed 9").out == run("sample --family 4 -n 50 --seed 9").out);
  CHECK(run("sample --family 4 -n 50 --seed 9").out != run("sample --family 4 -n 50 --seed 10").out);
  CHECK(run("sample --family 21 -n 5").status == 2);
  CHECK(run("sample --family 0").status == 2);
}

TEST_CASE("seed from the environment") {
  const Run env = run("sample --family 4 -n 5 --seed 3");
  const std::string command = "LIEALG_SEED=3 " + std::string(LIEALG_CLI) + " sample --family 4 -n 5";
  FILE *pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  pclose(pipe);
  CHECK(out == env.out);
}

TEST_CASE("list-families matches the golden export") {
  const Run listed = run("list-families");
  REQUIRE(listed.status == 0);
  CHECK(json::parse(listed.out) == json::parse(read_file(LIEALG_GOLDEN)));
  CHECK(run("list-families --format text").out.find("g13 (case F, nilpotent)") != std::string::npos);
}

TEST_CASE("verify-paper") {
  const Run clean = run("verify-paper --format text --samples 100 --golden " + std::string(LIEALG_GOLDEN));
  CHECK(clean.status == 0);
  CHECK(clean.out.find("80/80 reports clean") != std::string::npos);
  CHECK(clean.out.find("family export matches") != std::string::npos);

  const Run broken = run("verify-paper --samples 100 --mutate 6:w2:negate");
  CHECK(broken.status == 1);
  const json doc = json::parse(broken.out);
  CHECK(doc["clean"] == false);
  bool names_six = false;
  for (const auto &r : doc["reports"])
    names_six = names_six || (r["family"] == 6 && r["clean"] == false);
  CHECK(names_six);

  CHECK(run("verify-paper --mutate nonsense").status == 2);
  CHECK(run("verify-paper --format xml").status == 2);
}
