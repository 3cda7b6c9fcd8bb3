#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Output {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Output run(const std::string& args) {
  std::string cmd = std::string(STRATA_CLI) + " " + args + " 2>/dev/null";
  Output o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) o.out.append(buf.data(), n);
  int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--format yaml table").status == 2);
  CHECK(run("--format gap-style table").status == 2);
  CHECK(run("present nowhere").status == 2);
  CHECK(run("present 2,2 --format csv").status == 2);
  CHECK(run("--no-cache verify --claim C99").status == 2);
  CHECK(run("coxeter translation E8~ 0 1").status == 2);
  CHECK(run("coxeter translation E7~ 0 4").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("verify a claim subset") {
  auto o = run("--no-cache --format json verify --claim C1 --claim C17");
  CHECK(o.status == 0);
  auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["summary"]["passed"] == 2);
  CHECK(j["claims"][1]["id"] == "C17");
}

TEST_CASE("verify output is stable across cache states") {
  auto dir = std::filesystem::temp_directory_path() / "strata-cli-test-cache";
  std::filesystem::remove_all(dir);
  std::string args = "--format json --cache-dir " + dir.string() + " verify --claim C9 --claim C16";
  auto cold = run(args);
  auto warm = run(args);
  auto uncached = run("--format json --no-cache verify --claim C9 --claim C16");
  CHECK(cold.status == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == uncached.out);
  CHECK(!std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("present") {
  auto o = run("present 2,1^2 --format json");
  REQUIRE(o.status == 0);
  auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["generators"].size() == 8);
  CHECK(j["relators"].size() == 37);

  auto gap = run("--format gap-style present braid/7");
  CHECK(gap.status == 0);
  CHECK(gap.out.rfind("# B_7\n<", 0) == 0);
  CHECK(gap.out.find("s1*s2*s1*s2^-1*s1^-1*s2^-1") != std::string::npos);
}

TEST_CASE("other subcommands") {
  auto table = run("--format csv table");
  CHECK(table.status == 0);
  CHECK(table.out.find("PH(4),stratum,III (add),E6") != std::string::npos);

  auto tr = run("coxeter translation E7~ 0 2");
  CHECK(tr.status == 0);
  CHECK(tr.out.find("(2, 7/2, 4, 6, 9/2, 3, 3/2)") != std::string::npos);

  auto qs = run("--format json coxeter quasi-special E6~");
  CHECK(qs.status == 0);
  CHECK(nlohmann::ordered_json::parse(qs.out)["rows"].size() == 7);

  auto ex = run("--format markdown exceptional");
  CHECK(ex.status == 0);
  CHECK(std::count(ex.out.begin(), ex.out.end(), '\n') == 58);

  CHECK(run("degeneration verify").status == 0);
}
