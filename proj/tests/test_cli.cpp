// End-to-end tests for the command-line front end. The harness receives the
// binary path as its last argument and shells out for every case.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_cli;
fs::path g_tmp;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path out = g_tmp / ("stdout_" + std::to_string(counter) + ".txt");
  fs::path err = g_tmp / ("stderr_" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd =
      "\"" + g_cli + "\" " + args + " >" + out.string() + " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path scratch(const std::string& name) { return g_tmp / name; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-grr-binary>\n");
    return 1;
  }
  g_cli = argv[argc - 1];
  g_tmp = fs::temp_directory_path() / ("grr_cli_test_" + std::to_string(getpid()));
  fs::create_directories(g_tmp);
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  int rc = ctx.run();
  fs::remove_all(g_tmp);
  return rc;
}

TEST_CASE("version flag") {
  RunResult r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find('.') != std::string::npos);
}

TEST_CASE("classify emits all three verdicts with the config echoed") {
  RunResult r = run("classify --group q8");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["group"] == "q8");
  CHECK(j["grr"]["verdict"] == "exception");
  CHECK(j["drr"]["verdict"] == "exception");
  CHECK(j["orr"]["verdict"] == "exception");
  CHECK(j["config"]["command"] == "classify");
  CHECK(j["config"]["group"] == "q8");

  RunResult one = run("classify --group sym:4 --kind grr");
  REQUIRE(one.code == 0);
  json k = json::parse(one.out);
  CHECK(k["kind"] == "grr");
  CHECK(k["verdict"] == "admits");
  CHECK(k["config"]["kind"] == "grr");
}

TEST_CASE("classify writes to a file when asked") {
  fs::path out = scratch("classify.json");
  RunResult r = run("classify --group dihedral:8 --kind grr --out " + out.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  json j = json::parse(slurp(out));
  CHECK(j["verdict"] == "exception");
  CHECK(j["exception_id"] == "[8,3]");
}

TEST_CASE("exit codes track the failure class") {
  CHECK(run("classify --group fictional").code == 1);           // argument
  CHECK(run("classify").code == 1);                             // no group source
  CHECK(run("construct --group cyclic:8").code == 2);           // hypothesis gate
  CHECK(run("construct --group cyclic:8 --force").code == 3);   // search gives up
  CHECK(run("classify --table /no/such/file.json").code == 4);  // io
  CHECK(run("verify --group free:2 --mode grr").code == 5);     // unsupported

  RunResult err = run("construct --group cyclic:8");
  CHECK(err.err.find("error (hypothesis)") != std::string::npos);
  RunResult io = run("classify --table /no/such/file.json");
  CHECK(io.err.find("error (io)") != std::string::npos);
  RunResult uns = run("verify --group free:2 --mode grr");
  CHECK(uns.err.find("error (unsupported)") != std::string::npos);
}

TEST_CASE("groups load from table and permutation files") {
  fs::path table = scratch("z3.json");
  std::ofstream(table) << R"({"table": [[0,1,2],[1,2,0],[2,0,1]], "names": ["e","a","b"]})";
  RunResult r = run("classify --table " + table.string() + " --kind grr");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "exception");  // Z/3 is abelian with an element of order > 2

  fs::path perms = scratch("s3.txt");
  std::ofstream(perms) << "(1 2)\n(1 2 3)\n";
  RunResult p = run("verify --perms " + perms.string() + " --mode grr");
  REQUIRE(p.code == 0);
  json v = json::parse(p.out);
  CHECK(v["mode"] == "grr");
  CHECK(v["holds"] == false);

  fs::path broken = scratch("broken.json");
  std::ofstream(broken) << "{oops";
  CHECK(run("classify --table " + broken.string()).code == 4);
}

TEST_CASE("verify handles inline sets and all modes") {
  RunResult drr = run("verify --group cyclic:5 --set 1,2 --mode drr");
  REQUIRE(drr.code == 0);
  json j = json::parse(drr.out);
  CHECK(j["mode"] == "drr");
  CHECK(j["holds"] == true);
  CHECK(j["aut_order"] == "5");
  CHECK(j["config"]["set"] == "1,2");

  RunResult orr = run("verify --group cyclic:5 --set 1,2 --mode orr");
  REQUIRE(orr.code == 0);
  CHECK(json::parse(orr.out)["holds"] == true);

  RunResult rig = run("verify --group sym:3 --mode rigidity");
  REQUIRE(rig.code == 0);
  json rj = json::parse(rig.out);
  CHECK(rj["rigid"] == false);
  CHECK(rj["solutions"].get<uint64_t>() == 12);

  CHECK(run("verify --group q8 --mode nonsense").code == 1);
  CHECK(run("verify --group q8 --set i,i").code == 1);
}

TEST_CASE("construct round-trips through verify and export") {
  fs::path trace = scratch("trace.json");
  fs::path set = scratch("set.txt");
  RunResult r = run("construct --group heisenberg --out " + trace.string() +
                    " --set-out " + set.string());
  REQUIRE(r.code == 0);
  json t = json::parse(slurp(trace));
  CHECK(t["complete"] == true);
  CHECK(t["group"] == "heisenberg");
  CHECK(t["config"]["command"] == "construct");
  size_t set_size = t["final_set"].size();
  CHECK(set_size >= t["initial_set"].size());

  // ball of radius 1 around the identity = identity + the set itself
  fs::path ball = scratch("ball.json");
  RunResult e = run("export --group heisenberg --gens " + set.string() +
                    " --radius 1 --format json --out " + ball.string());
  REQUIRE(e.code == 0);
  json b = json::parse(slurp(ball));
  CHECK(b["vertices"].size() == set_size + 1);
}

TEST_CASE("failed construction still writes the partial trace") {
  fs::path trace = scratch("partial.json");
  fs::path set = scratch("partial_set.txt");
  RunResult r = run("construct --group cyclic:8 --force --out " + trace.string() +
                    " --set-out " + set.string());
  CHECK(r.code == 3);
  json t = json::parse(slurp(trace));
  CHECK(t["complete"] == false);
  CHECK_FALSE(slurp(set).empty());

  // without --force the gate fires before anything is produced
  fs::path none = scratch("none.json");
  RunResult g = run("construct --group cyclic:8 --out " + none.string());
  CHECK(g.code == 2);
  CHECK_FALSE(fs::exists(none));
}

TEST_CASE("probe emits estimates as json and csv") {
  std::string base = "probe --group q8 --quantity commute --n 4,8 --samples 2000 --seed 7";
  RunResult r = run(base);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["lengths"] == json::array({4, 8}));
  CHECK(j["estimates"].size() == 2);
  CHECK(j["config"]["samples"] == 2000);
  CHECK(j["config"]["quantity"] == "commute");
  CHECK(j["config"]["seed"] == 7);

  RunResult c = run(base + " --format csv");
  REQUIRE(c.code == 0);
  std::istringstream lines(c.out);
  std::string header, cols, row1, row2, trend;
  std::getline(lines, header);
  std::getline(lines, cols);
  std::getline(lines, row1);
  std::getline(lines, row2);
  std::getline(lines, trend);
  CHECK(header.rfind("# {", 0) == 0);
  CHECK(cols == "n,value,radius,samples,exact");
  CHECK(row1.rfind("4,", 0) == 0);
  CHECK(row2.rfind("8,", 0) == 0);
  CHECK(trend.rfind("# trend_verdict,", 0) == 0);
}

TEST_CASE("identical config and seed reproduce byte-identical outputs") {
  fs::path a = scratch("probe_a.json");
  fs::path b = scratch("probe_b.json");
  std::string cmd = "probe --group sym:4 --quantity square --n 16 --samples 3000 --seed 99";
  REQUIRE(run(cmd + " --out " + a.string()).code == 0);
  REQUIRE(run(cmd + " --out " + b.string()).code == 0);
  std::string ta = slurp(a), tb = slurp(b);
  CHECK_FALSE(ta.empty());
  CHECK(ta == tb);

  fs::path c = scratch("probe_c.json");
  REQUIRE(run("probe --group sym:4 --quantity square --n 16 --samples 3000 --seed 100 --out " +
              c.string())
              .code == 0);
  CHECK(slurp(c) != ta);
}

TEST_CASE("cover probe reports through json and csv") {
  RunResult r = run("probe --group dinf --quantity cover --radius 6");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["cover"]["covers"] == true);
  CHECK(j["cover"]["scope_size"] == 13);
  CHECK(j["translate"] == "(0,1)");

  RunResult c = run("probe --group dinf --quantity cover --radius 6 --format csv");
  REQUIRE(c.code == 0);
  CHECK(c.out.find("covers,alpha,alpha_complete,scope_size") != std::string::npos);
  CHECK(c.out.find("1,0.0,1,13") != std::string::npos);
}

TEST_CASE("export prefixes dot output with the config comment") {
  RunResult r = run("export --group cyclic:4 --set 1,3 --format dot");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("// {", 0) == 0);
  CHECK(r.out.find("graph cayley {") != std::string::npos);

  RunResult d = run("export --group cyclic:4 --set 1,3 --format dot --directed");
  REQUIRE(d.code == 0);
  CHECK(d.out.find("digraph cayley {") != std::string::npos);

  RunResult j = run("export --group cyclic:4 --set 1,3 --format json");
  REQUIRE(j.code == 0);
  json g = json::parse(j.out);
  CHECK(g["vertices"].size() == 4);
  CHECK(g["config"]["command"] == "export");

  CHECK(run("export --group cyclic:4 --set 1,3 --format svg").code == 4);
}
