#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "fixtures.hpp"

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(HOPFGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) {
    output.append(buf, n);
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

std::string fixture(const std::string& name) {
  return std::string(HOPFGRAPH_FIXTURE_DIR) + "/" + name;
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("coproduct subcommand") {
  auto r = run_cli("coproduct " + fixture("triangle.g") +
                   " --variant 1pi --mode hopf");
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 2);

  SUBCASE("full variant has five terms") {
    auto full = run_cli("coproduct " + fixture("triangle.g") +
                        " --variant full --mode hopf");
    CHECK(full.exit_code == 0);
    CHECK(line_count(full.output) == 5);
  }

  SUBCASE("discard produces the coefficient 2") {
    auto d = run_cli("coproduct " + fixture("triangle.g") +
                     " --variant full --mode hopf --externals discard");
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("2 * ") != std::string::npos);
  }

  SUBCASE("json format") {
    auto j = run_cli("coproduct " + fixture("triangle.g") + " --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("hopfgraph/1") != std::string::npos);
  }
}

TEST_CASE("cutcoproduct subcommand") {
  auto r = run_cli("cutcoproduct " + fixture("triangle.g"));
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 4);

  SUBCASE("cyclic input is a usage error") {
    auto bad = run_cli("cutcoproduct " + fixture("twocycle.g"));
    CHECK(bad.exit_code == 2);
  }
}

TEST_CASE("antipode subcommand") {
  auto r = run_cli("antipode " + fixture("triangle.g") + " --variant 1pi");
  CHECK(r.exit_code == 0);
  // the triangle is primitive there: S(T) = -T prints as one line
  CHECK(line_count(r.output) == 1);
  CHECK(r.output.find("-[3;") != std::string::npos);
}

TEST_CASE("covers subcommand") {
  auto r = run_cli("covers " + fixture("triangle.g") + " --variant full");
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 5);
  CHECK(r.output.find("locally_1pi=") != std::string::npos);
  CHECK(r.output.find("poset_compatible=") != std::string::npos);

  SUBCASE("cyclic graphs flag poset compatibility as n/a") {
    auto cyc = run_cli("covers " + fixture("twocycle.g"));
    CHECK(cyc.exit_code == 0);
    CHECK(cyc.output.find("poset_compatible=n/a") != std::string::npos);
  }
}

TEST_CASE("cuts subcommand") {
  auto r = run_cli("cuts " + fixture("triangle.g"));
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 4);
  CHECK(r.output.find("V1={b c} V2={a}") != std::string::npos);
}

TEST_CASE("canon subcommand") {
  auto r = run_cli("canon " + fixture("triangle.g"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("graph triangle {") != std::string::npos);
  CHECK(r.output.find("edge e0: v0 -> v1;") != std::string::npos);
}

TEST_CASE("render subcommand") {
  auto r = run_cli("render " + fixture("decorated.g") + " --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph selfenergy") != std::string::npos);
  CHECK(r.output.find("style=dashed") != std::string::npos);
}

TEST_CASE("json input") {
  auto r = run_cli("canon " + fixture("forest.json"));
  CHECK(r.exit_code == 0);
  // two blocks in the file form one disjoint-union graph: 4 vertices
  CHECK(line_count(r.output) >= 4);
}

TEST_CASE("exit codes") {
  SUBCASE("parse error") {
    std::string path = std::string(HOPFGRAPH_FIXTURE_DIR) + "/../build_bad.g";
    {
      std::ofstream bad("/tmp/hopfgraph_bad.g");
      bad << "graph x { vertex a }\n";  // missing ';'
    }
    auto r = run_cli("canon /tmp/hopfgraph_bad.g");
    CHECK(r.exit_code == 2);
  }

  SUBCASE("semantic error") {
    {
      std::ofstream bad("/tmp/hopfgraph_dangling.g");
      bad << "graph x { edge e: a -> b; }\n";
    }
    auto r = run_cli("canon /tmp/hopfgraph_dangling.g");
    CHECK(r.exit_code == 2);
  }

  SUBCASE("missing file") {
    CHECK(run_cli("canon /tmp/does_not_exist_xyz.g").exit_code == 2);
  }

  SUBCASE("unknown flag value") {
    CHECK(run_cli("coproduct " + fixture("triangle.g") + " --variant bogus")
              .exit_code == 2);
  }

  SUBCASE("no subcommand") { CHECK(run_cli("").exit_code == 2); }

  SUBCASE("golden suite passes through the CLI") {
    CHECK(run_cli("check --suite golden").exit_code == 0);
  }
}
