#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef COXHECKE_CLI
#error "COXHECKE_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  std::string out;
  int status = -1;
};

// stdout and stderr together, plus the exit status.
Run run(const std::string& args) {
  const std::string cmd = std::string("'") + COXHECKE_CLI + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json runJson(const std::string& args) {
  const Run r = run("--format json " + args);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli output is deterministic") {
  for (const char* args : {"--type A3 classes", "--type B2 --format json center", "--type A2 classpoly",
                           "--type D4 --delta 3,1,2,0 --format json cocenter"}) {
    INFO(args);
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli exit codes") {
  const Run bad = run("--type Z9 info");
  CHECK(bad.status == 2);
  const auto err = nlohmann::json::parse(bad.out);
  CHECK(err["error"] == "ParseError");
  CHECK(run("--type A2 --delta 0,0 info").status == 2);
  CHECK(run("--type H4 info").status == 2);
  CHECK(run("--type A2 --delta 1,0 trace").status == 2);
  CHECK(run("--type A2 frobnicate").status == 2);
  CHECK(run("--type B3 verify").status == 0);
}

TEST_CASE("cli gamma and center for small groups") {
  const auto g = runJson("--type A2 gamma");
  CHECK(g["classCount"] == 3);
  CHECK(g["gamma"].size() == 4);
  CHECK(g["gammaPrime"].size() == 3);
  const auto c = runJson("--type A1 center");
  CHECK(c["dimension"] == 2);
  CHECK(c["basis"].size() == 2);
  CHECK(c["basisOfCenter"] == true);
}

TEST_CASE("cli words round trip") {
  const auto r = runJson("--type A2 reduce 1.2.1");
  CHECK(r["element"] == nlohmann::json::array({0, 1, 0}));
  CHECK(r["sign"] == -1);
  CHECK(r["cocenterImage"]["J"] == nlohmann::json::array({0, 1}));
  const Run table = run("--type A2 reduce 1.2.1");
  CHECK(table.status == 0);
  CHECK(table.out.find("1.2") != std::string::npos);
  CHECK(run("--type A2 reduce 1.3").status == 2);
}

TEST_CASE("cli csv outputs") {
  const Run cp = run("--type A2 classpoly");
  CHECK(cp.status == 0);
  CHECK(cp.out.find("1.2.1,0,q,q-1") != std::string::npos);
  const Run tr = run("--type A1 trace");
  CHECK(tr.status == 0);
  CHECK(tr.out.find("0:e,1,1\n1:1,0,-1") != std::string::npos);
}
