#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_tool(const std::string& args) {
  const char* tool = std::getenv("FVBTOOL");
  REQUIRE_MESSAGE(tool != nullptr, "FVBTOOL not set");
  std::string cmd = std::string(tool) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("parse") {
  RunResult r = run_tool("parse --n 3 --braid \"r1 r1 s2^-1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "S2\n");
  // in fvb mode adjacent equal sigmas cancel regardless of sign
  RunResult f = run_tool("parse --n 3 --mode fvb --braid \"s2 s2^-1 s2\"");
  CHECK(f.code == 0);
  CHECK(f.out == "s2\n");
  RunResult v = run_tool("parse --n 3 --mode vb --braid \"s2 s2\"");
  CHECK(v.code == 0);
  CHECK(v.out == "s2 s2\n");
}

TEST_CASE("act") {
  RunResult r = run_tool("act --n 2 --braid s1");
  CHECK(r.code == 0);
  CHECK(r.out.find("x1 -> x2 y2") != std::string::npos);
  CHECK(r.out.find("x2 -> x1 y2^-1") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run_tool("verify --n 4 --mode fvb --rep theta").code == 0);
  CHECK(run_tool("verify --n 4 --mode fvb --rep Theta").code == 0);
  CHECK(run_tool("verify --n 4 --mode fvb --rep Delta").code == 0);
  CHECK(run_tool("verify --n 3 --mode gvb --rep thetaGstar").code == 0);
  // thetaG trades the mixed families for forbidden-relation preservation
  RunResult g = run_tool("verify --n 3 --mode gvb --rep thetaG --format json");
  CHECK(g.code == 1);
  json gj = json::parse(g.out);
  CHECK(gj["forbidden_hold"] == true);
  CHECK(gj["all_defining_hold"] == false);
  // theta does not satisfy the wb forbidden relation
  RunResult bad = run_tool("verify --n 3 --mode fwb --rep theta");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("DEFINING RELATION FAILURE") != std::string::npos);
}

TEST_CASE("verify json") {
  RunResult r = run_tool("verify --n 3 --mode fvb --rep theta --format json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_defining_hold"] == true);
  CHECK(j["forbidden_hold"] == false);
  CHECK(j["n"] == 3);
  CHECK(j["mode"] == "FVB");
  bool saw_forbidden_witness = false;
  for (const auto& c : j["checks"])
    if (c["holds"] == false && c.contains("witness") &&
        !c["witness"].get<std::string>().empty())
      saw_forbidden_witness = true;
  CHECK(saw_forbidden_witness);
}

TEST_CASE("kernel-check") {
  RunResult in = run_tool("kernel-check --n 3 --braid \"r1 s2 r1 s2 r1 s2 r1 s2 r1 s2 r1 s2\"");
  CHECK(in.code == 0);
  CHECK(in.out == "identity\n");
  RunResult out = run_tool("kernel-check --n 3 --braid \"r1 s2\"");
  CHECK(out.code == 1);
  CHECK(out.out == "non-identity\n");
  CHECK(run_tool("kernel-check --n 3 --rep Delta --braid "
                 "\"r1 s2 r1 s2 r1 s2 r1 s2 r1 s2 r1 s2\"")
            .code == 1);
  CHECK(run_tool("kernel-check --n 3 --rep Theta --braid "
                 "\"r1 s2 r1 s2 r1 s2 r1 s2 r1 s2 r1 s2\"")
            .code == 0);
}

TEST_CASE("rewrite") {
  RunResult lam = run_tool("rewrite --n 3 --braid \"r2 r1 S1 r2\" --to lambda");
  CHECK(lam.code == 0);
  CHECK(lam.out == "L(1,3)\n");
  RunResult abc = run_tool(
      "rewrite --n 3 --mode fvb --to abc --braid "
      "\"r1 s2 r1 s2 r1 s2 r1 s2 r1 s2 r1 s2\"");
  CHECK(abc.code == 0);
  CHECK(abc.out.find("normal form:") != std::string::npos);
  RunResult x = run_tool("rewrite --n 3 --braid \"s1 s1\" --to x");
  CHECK(x.code == 0);
}

TEST_CASE("matrix") {
  RunResult r = run_tool("matrix --n 2 --rep Theta --braid s1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "[0, 0, 1, p]\n[0, 1, 0, 0]\n[1, 0, 0, -p]\n[0, 0, 0, 1]\n");
  RunResult j = run_tool("matrix --n 2 --rep Delta --braid s1 --format json");
  CHECK(j.code == 0);
  json m = json::parse(j.out)[0]["matrix"];
  CHECK(m["rows"] == 6);
  CHECK(m["cols"] == 6);
  CHECK(m["entries"][0][2][0]["coeff"] == "1");
  CHECK(m["entries"][0][0].empty());
}

TEST_CASE("invariant") {
  RunResult r = run_tool("invariant --n 2 --braid \"r1 s1 r1 s1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "< x1, x2, y | y^2 >\nZ^2 + Z/2\n");
  RunResult j = run_tool(
      "invariant --n 2 --braid \"r1 s1 r1 s1 r1 s1\" --format json");
  CHECK(j.code == 0);
  json o = json::parse(j.out)[0];
  CHECK(o["abelianization"] == "Z^2 + Z/3");
  CHECK(o["free_rank"] == 2);
  CHECK(o["torsion"] == json::array({"3"}));
}

TEST_CASE("switch-check and gauss-image") {
  RunResult s = run_tool("switch-check");
  CHECK(s.code == 0);
  CHECK(s.out.find("yang-baxter: holds") != std::string::npos);
  RunResult g = run_tool("gauss-image --n 3 --braid \"s1 r2\"");
  CHECK(g.code == 0);
  CHECK(g.out.find("x: [3 1 2]") != std::string::npos);
  CHECK(g.out.find("y: [1 3 2]") != std::string::npos);
}

TEST_CASE("normal-gens") {
  RunResult r = run_tool("normal-gens --n 2 --mode vb");
  CHECK(r.code == 0);
  CHECK(!r.out.empty());
  RunResult g = run_tool("normal-gens --n 2 --mode gvb");
  CHECK(g.code == 0);
  CHECK(g.out.empty());
}

TEST_CASE("errors") {
  CHECK(run_tool("nonsense").code == 2);
  CHECK(run_tool("act --n 2").code == 2);            // no braid given
  CHECK(run_tool("act --n 2 --braid s7").code == 2); // index out of range
  CHECK(run_tool("act --n 2 --braid s1 --format yaml").code == 2);
  CHECK(run_tool("verify --n 2 --rep bogus").code == 2);
  CHECK(run_tool("act --n 2 --file /nonexistent-input").code == 2);
}

TEST_CASE("determinism and file input") {
  RunResult a = run_tool("act --n 3 --braid \"s1 r2 s2\" --format json");
  RunResult b = run_tool("act --n 3 --braid \"s1 r2 s2\" --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::string path = "cli_braids_tmp.txt";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("s1\nr1\n\n", f);
    fclose(f);
  }
  RunResult r = run_tool("kernel-check --n 2 --file " + path);
  std::remove(path.c_str());
  CHECK(r.code == 1);
  CHECK(r.out == "non-identity\nnon-identity\n");
}
