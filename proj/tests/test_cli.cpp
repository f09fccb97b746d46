#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "gammalab/data.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GAMMALAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("catalog list").status == 0);
  CHECK(run("verify-paper --filter 'pauli.*'").status == 0);
  CHECK(run("verify-paper --filter 'nonexistent.*'").status == 2);
  CHECK(run("analyze").status == 2);
  CHECK(run("analyze pauli --format yaml").status == 2);
  CHECK(run("analyze no-such-entry").status == 2);
  CHECK(run("brackets pauli --table 5").status == 2);
  CHECK(run("brackets pauli --table d").status == 0);
  CHECK(run("brackets pauli --table b").status == 1);
  CHECK(run("search --signature '+x'").status == 2);
  CHECK(run("subgroups D_II --order 12").status == 2);
  CHECK(run("analyze Delta1 --cap 10").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("a failing claim gives status 1") {
  // a copy of the data with one catalog entry altered so that its claims fail
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gammalab_test_cli_data";
  fs::remove_all(dir);
  fs::copy(gammalab::default_data_dir(), dir, fs::copy_options::recursive);
  auto q = nlohmann::ordered_json::parse(gammalab::read_text(dir / "catalog" / "Q2.json"));
  q["generators"][2] = "[[0,1],[1,0]]";
  std::ofstream(dir / "catalog" / "Q2.json") << q.dump(2);
  const std::string data = "--data " + dir.string();
  auto r = run(data + " verify-paper --filter 'quaternion.Q2.*'");
  CHECK(r.status == 1);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["claims"][0]["id"] == "quaternion.Q2.order");
  CHECK(doc["claims"][0]["status"] == "FAIL");
  CHECK(doc["claims"][0]["computed"] == "16");
  CHECK(run(data + " verify-paper --filter 'pauli.*'").status == 0);
  CHECK(run(data + " analyze Q2").status == 1);
}

TEST_CASE("output round-trips and is stable") {
  for (const char* args : {"catalog list", "analyze D_II", "verify-paper --filter 'quaternion.*'",
                           "verify-paper --filter 'pauli.*' --timings", "subgroups pauli --order 8",
                           "search --signature ++-+:c --pool gamma4"}) {
    CAPTURE(args);
    auto r = run(args);
    REQUIRE(r.status == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(doc["tool_version"].is_string());
    CHECK(doc.contains("input"));
    CHECK(doc.contains("profile"));
    CHECK(doc["claims"].is_array());
    CHECK(doc.contains("timings") == (std::string(args).find("--timings") != std::string::npos));
  }
  CHECK(run("analyze D_II").out == run("analyze D_II --jobs 3").out);
}

TEST_CASE("markdown carries the same numbers") {
  auto json = nlohmann::ordered_json::parse(run("analyze pauli").out);
  auto md = run("analyze pauli --format markdown");
  REQUIRE(md.status == 0);
  CHECK(md.out.rfind("# gammalab report", 0) == 0);
  for (const char* key : {"order", "classes", "center", "census", "rank", "index2_count"}) {
    CAPTURE(key);
    CHECK(md.out.find("- " + std::string(key) + ": " + (json["profile"][key].is_string()
                                                          ? json["profile"][key].get<std::string>()
                                                          : json["profile"][key].dump())) != std::string::npos);
  }
}

TEST_CASE("user pools") {
  namespace fs = std::filesystem;
  const fs::path pool = fs::temp_directory_path() / "gammalab_test_pool.json";
  std::ofstream(pool) << R"(["[[0,1],[1,0]]", "[[0,-i],[i,0]]", "[[1,0],[0,-1]]"])";
  auto r = run("search --signature ++ --pool " + pool.string());
  REQUIRE(r.status == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  REQUIRE(doc["result"]["classes"].size() == 1);
  CHECK(doc["result"]["classes"][0]["order"] == 8);
  // sigma_x sigma_y sigma_z is scalar, so no faithful triple exists
  CHECK(nlohmann::ordered_json::parse(run("search --signature +++ --pool " + pool.string()).out)["result"]["classes"].empty());
  CHECK(run("search --signature +++ --pool /nonexistent/pool.json").status == 2);
}
