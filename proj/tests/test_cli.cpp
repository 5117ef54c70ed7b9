#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* b = std::getenv("BISETKIT_BIN");
  return b ? b : "./bisetkit";
}

std::string cache() {
  static auto dir = (std::filesystem::temp_directory_path() / "bisetkit-cli-test").string();
  return dir;
}

Run run(const std::string& args) {
  std::string cmd = binary() + " --cache-dir " + cache() + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_CASE("cli ahat") {
  auto r = run("ahat --backend rb --group V4");
  CHECK(r.code == 0);
  CHECK(r.out.find("quotient_dim 6\n") != std::string::npos);
  auto j = run("--json ahat --backend rq --group C5");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["quotient"] == 3);
  CHECK(doc["backend"] == "rq");
  auto rbc = run("ahat --backend rbc --group C2 --c C2 --json");
  REQUIRE(rbc.code == 0);
  CHECK(nlohmann::json::parse(rbc.out)["quotient"] == 3);
  CHECK(run("ahat --backend rbc --group C2").code == 2);
  CHECK(run("ahat --backend xx --group C2").code == 2);
}

TEST_CASE("cli seeds") {
  auto r = run("--json seeds --max-m 12");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["consistent"] == true);
  std::vector<long> zeros;
  for (const auto& row : doc["counts"])
    if (row["count"] == 0) zeros.push_back(row["m"]);
  CHECK(zeros == std::vector<long>{2, 6, 10});
  CHECK(run("seeds --max-m 65").code == 2);
}

TEST_CASE("cli counterexample") {
  auto r = run("counterexample");
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "NOT DECOMPOSABLE");
  auto j = run("counterexample --json");
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["verdict"] == "NOT DECOMPOSABLE");
}

TEST_CASE("cli group and no-bridge") {
  auto r = run("--json group auts Q8");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["aut"] == 24);
  CHECK(doc["out"] == 6);
  auto s = run("--json group subgroups S3");
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["subgroups"] == 6);
  CHECK(run("no-bridge C4 V4 C2").code == 0);
  CHECK(run("no-bridge C4 V4 C4").code == 1);
  CHECK(run("crc-check S3 C2").code == 0);
  CHECK(run("dress-compose C2 C1 C2 C2").code == 0);
}

TEST_CASE("cli compose and bouc") {
  auto path = std::filesystem::temp_directory_path() / "bisetkit-cli-compose.json";
  {
    std::ofstream f(path);
    // C2 x C2 / 1 composed with C2 x C1 / 1
    f << R"({"x": {"terms": [{"subgroup": [0], "coeff": "1"}]}, "y": {"terms": [{"subgroup": [0]}]}})";
  }
  for (const char* extra : {"", " --oracle"}) {
    auto r = run("--json compose --left C2 --mid C2 --right C1 --input " + path.string() + extra);
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["coeff"] == "2");
    CHECK(doc["terms"][0]["subgroup"] == nlohmann::json::array({0}));
  }
  auto b = run("bouc C2 S3 class:2");
  CHECK(b.code == 0);
  CHECK(b.out.find("round trip ok") != std::string::npos);
  CHECK(run("bouc C2 C2 0,3,1").code == 1);  // not a subgroup
  std::filesystem::remove(path);
}

TEST_CASE("cli usage errors") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("group info").code == 2);
  CHECK(run("group info NoSuchGroup").code == 2);
  CHECK(run("ahat --group C2").code == 2);
}

TEST_CASE("cli output is deterministic") {
  for (const char* args : {"--json ahat --backend rb --group S3", "seeds --max-m 20", "--json counterexample",
                           "--json group subgroups C4"}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli character tables and catalog overrides") {
  auto r = run("--json group info S3");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["characters"].size() == 3);
  long squares = 0;
  for (const auto& chi : doc["characters"]) {
    const auto& deg = chi["values"][0];  // identity class: rational, conductor 1
    CHECK(deg[2] == 1);
    long d = deg[0][0].get<long>() / deg[1].get<long>();
    squares += d * d;
  }
  CHECK(squares == 6);

  auto path = std::filesystem::temp_directory_path() / "bisetkit-cli-catalog.json";
  {
    std::ofstream f(path);
    f << R"([{"order": 2, "name": "Z2", "table": [[0, 1], [1, 0]]}])";
  }
  CHECK(run("--catalog " + path.string() + " group info C2").code == 2);  // duplicates C2
  std::filesystem::remove(path);
}
