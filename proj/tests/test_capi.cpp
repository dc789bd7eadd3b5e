#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "grr.h"

#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct GroupHandle {
  grr_group* g = nullptr;
  ~GroupHandle() { grr_group_close(g); }
};

struct SetHandle {
  grr_genset* s = nullptr;
  ~SetHandle() { grr_genset_close(s); }
};

struct Text {
  char* p = nullptr;
  ~Text() { grr_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(grr_version() != nullptr);
  CHECK(std::string(grr_version()).find('.') != std::string::npos);
  CHECK(std::string(grr_status_name(GRR_OK)) == "ok");
  CHECK(std::string(grr_status_name(GRR_ERR_ARGUMENT)) == "argument");
  CHECK(std::string(grr_status_name(GRR_ERR_HYPOTHESIS)) == "hypothesis");
  CHECK(std::string(grr_status_name(GRR_ERR_SEARCH)) == "search");
  CHECK(std::string(grr_status_name(GRR_ERR_IO)) == "io");
  CHECK(std::string(grr_status_name(GRR_ERR_UNSUPPORTED)) == "unsupported");
  CHECK(std::string(grr_status_name(GRR_ERR_INTERNAL)) == "internal");
  CHECK(std::string(grr_status_name(static_cast<grr_status>(99))) == "unknown");
}

TEST_CASE("group lifecycle and error reporting") {
  GroupHandle h;
  REQUIRE(grr_group_open("q8", &h.g) == GRR_OK);
  CHECK(std::string(grr_last_error()).empty());

  uint64_t order = 0;
  int finite = 0;
  REQUIRE(grr_group_order(h.g, &order, &finite) == GRR_OK);
  CHECK(order == 8);
  CHECK(finite == 1);

  GroupHandle inf;
  REQUIRE(grr_group_open("free:2", &inf.g) == GRR_OK);
  REQUIRE(grr_group_order(inf.g, &order, &finite) == GRR_OK);
  CHECK(order == 0);
  CHECK(finite == 0);

  grr_group* out = nullptr;
  CHECK(grr_group_open("nونsense", &out) == GRR_ERR_ARGUMENT);
  CHECK(out == nullptr);
  CHECK_FALSE(std::string(grr_last_error()).empty());
  CHECK(grr_group_open(nullptr, &out) == GRR_ERR_ARGUMENT);
  CHECK(grr_group_open("q8", nullptr) == GRR_ERR_ARGUMENT);
  CHECK(grr_group_order(nullptr, &order, &finite) == GRR_ERR_ARGUMENT);

  // a subsequent success clears the sticky message
  GroupHandle ok;
  REQUIRE(grr_group_open("sym:3", &ok.g) == GRR_OK);
  CHECK(std::string(grr_last_error()).empty());

  grr_group_close(nullptr);  // harmless
  grr_free(nullptr);
}

TEST_CASE("groups from tables and permutations") {
  GroupHandle t;
  const char* table = R"({"table": [[0,1,2],[1,2,0],[2,0,1]], "names": ["e","r","rr"]})";
  REQUIRE(grr_group_from_table_json(table, &t.g) == GRR_OK);
  uint64_t order = 0;
  int finite = 0;
  REQUIRE(grr_group_order(t.g, &order, &finite) == GRR_OK);
  CHECK(order == 3);

  grr_group* out = nullptr;
  CHECK(grr_group_from_table_json("{not json", &out) == GRR_ERR_IO);
  CHECK(grr_group_from_table_json(R"({"table": [[0,0],[0,0]]})", &out) == GRR_ERR_IO);

  GroupHandle p;
  REQUIRE(grr_group_from_permutations("(1 2)\n(1 2 3)\n", &p.g) == GRR_OK);
  REQUIRE(grr_group_order(p.g, &order, &finite) == GRR_OK);
  CHECK(order == 6);
  CHECK(grr_group_from_permutations("0 1", &out) == GRR_ERR_IO);
  CHECK(grr_group_from_permutations(nullptr, &out) == GRR_ERR_ARGUMENT);
}

TEST_CASE("connection set handles") {
  GroupHandle h;
  REQUIRE(grr_group_open("q8", &h.g) == GRR_OK);

  SetHandle s;
  REQUIRE(grr_genset_default(h.g, &s.s) == GRR_OK);
  CHECK(grr_genset_size(s.s) == 4);
  CHECK(grr_genset_size(nullptr) == 0);

  Text printed;
  REQUIRE(grr_genset_print(s.s, &printed.p) == GRR_OK);
  SetHandle again;
  REQUIRE(grr_genset_parse(h.g, printed.p, &again.s) == GRR_OK);
  CHECK(grr_genset_size(again.s) == 4);
  Text reprinted;
  REQUIRE(grr_genset_print(again.s, &reprinted.p) == GRR_OK);
  CHECK(printed.str() == reprinted.str());

  SetHandle custom;
  REQUIRE(grr_genset_parse(h.g, "# the two i's\ni\n-i\n", &custom.s) == GRR_OK);
  CHECK(grr_genset_size(custom.s) == 2);

  SetHandle dedup;
  REQUIRE(grr_genset_parse(h.g, "i\ni\n", &dedup.s) == GRR_OK);  // repeats collapse
  CHECK(grr_genset_size(dedup.s) == 1);

  grr_genset* bad = nullptr;
  CHECK(grr_genset_parse(h.g, "1\n", &bad) == GRR_ERR_ARGUMENT);       // identity
  CHECK(grr_genset_parse(h.g, "wibble\n", &bad) == GRR_ERR_ARGUMENT);  // unparsable
  CHECK(grr_genset_parse(nullptr, "i\n", &bad) == GRR_ERR_ARGUMENT);
  CHECK(grr_genset_print(nullptr, &printed.p) == GRR_ERR_ARGUMENT);
  grr_genset_close(nullptr);
}

TEST_CASE("classification over the c surface") {
  GroupHandle h;
  REQUIRE(grr_group_open("q8", &h.g) == GRR_OK);
  Text out;
  REQUIRE(grr_classify(h.g, "grr", &out.p) == GRR_OK);
  json j = json::parse(out.str());
  CHECK(j["kind"] == "grr");
  CHECK(j["verdict"] == "exception");
  CHECK(j["group"] == "q8");

  Text drr;
  REQUIRE(grr_classify(h.g, "drr", &drr.p) == GRR_OK);
  CHECK(json::parse(drr.str())["verdict"] == "exception");

  GroupHandle s4;
  REQUIRE(grr_group_open("sym:4", &s4.g) == GRR_OK);
  Text adm;
  REQUIRE(grr_classify(s4.g, "orr", &adm.p) == GRR_OK);
  CHECK(json::parse(adm.str())["verdict"] == "admits");

  Text bad;
  CHECK(grr_classify(h.g, "frr", &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_classify(h.g, nullptr, &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_classify(h.g, "grr", nullptr) == GRR_ERR_ARGUMENT);
}

TEST_CASE("census over the c surface") {
  GroupHandle h;
  REQUIRE(grr_group_open("q8", &h.g) == GRR_OK);
  SetHandle s;
  REQUIRE(grr_genset_default(h.g, &s.s) == GRR_OK);
  Text out;
  REQUIRE(grr_census(s.s, &out.p) == GRR_OK);
  json j = json::parse(out.str());
  REQUIRE(j["census"].size() == 4);
  for (const json& row : j["census"]) {
    CHECK(row.contains("s"));
    CHECK(row["delta"] == 0);  // the q8 one-skeleton is K4,4: triangle-free
  }
  CHECK(grr_census(nullptr, &out.p) == GRR_ERR_ARGUMENT);
}

TEST_CASE("verification over the c surface") {
  GroupHandle h;
  REQUIRE(grr_group_open("q8", &h.g) == GRR_OK);
  SetHandle s;
  REQUIRE(grr_genset_default(h.g, &s.s) == GRR_OK);

  Text out;
  REQUIRE(grr_verify(s.s, "grr", &out.p) == GRR_OK);
  json j = json::parse(out.str());
  CHECK(j["mode"] == "grr");
  CHECK(j["holds"] == false);
  CHECK(j["aut_order"] == "1152");
  CHECK(j["group"] == "q8");
  CHECK(j["set"].size() == 4);

  Text rig;
  REQUIRE(grr_verify(s.s, "rigidity", &rig.p) == GRR_OK);
  json r = json::parse(rig.str());
  CHECK(r["rigid"] == false);
  CHECK(r["solutions"].get<uint64_t>() >= 16);

  Text bad;
  CHECK(grr_verify(s.s, "borked", &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_verify(nullptr, "grr", &bad.p) == GRR_ERR_ARGUMENT);
}

TEST_CASE("construction pipeline over the c surface") {
  GroupHandle h;
  REQUIRE(grr_group_open("heisenberg", &h.g) == GRR_OK);
  SetHandle s;
  REQUIRE(grr_genset_default(h.g, &s.s) == GRR_OK);

  Text trace, set_text;
  REQUIRE(grr_construct(s.s, 0, 0, &trace.p, &set_text.p) == GRR_OK);
  json t = json::parse(trace.str());
  CHECK(t["complete"] == true);
  CHECK(t["group"] == "heisenberg");
  REQUIRE(set_text.p != nullptr);

  SetHandle round;
  REQUIRE(grr_genset_parse(h.g, set_text.p, &round.s) == GRR_OK);
  CHECK(grr_genset_size(round.s) == t["final_set"].size());
}

TEST_CASE("construction failure paths over the c surface") {
  GroupHandle cyc;
  REQUIRE(grr_group_open("cyclic:8", &cyc.g) == GRR_OK);
  SetHandle s;
  REQUIRE(grr_genset_default(cyc.g, &s.s) == GRR_OK);

  Text trace, set_text;
  CHECK(grr_construct(s.s, 0, 0, &trace.p, &set_text.p) == GRR_ERR_HYPOTHESIS);
  CHECK(trace.p == nullptr);
  CHECK(set_text.p == nullptr);
  CHECK_FALSE(std::string(grr_last_error()).empty());

  // forcing past the gate leaves a partial trace behind when the search dies
  Text ptrace, pset;
  CHECK(grr_construct(s.s, 0, 1, &ptrace.p, &pset.p) == GRR_ERR_SEARCH);
  REQUIRE(ptrace.p != nullptr);
  REQUIRE(pset.p != nullptr);
  json t = json::parse(ptrace.str());
  CHECK(t["complete"] == false);

  CHECK(grr_construct(nullptr, 0, 0, &trace.p, &set_text.p) == GRR_ERR_ARGUMENT);
}

TEST_CASE("probes over the c surface") {
  GroupHandle h;
  REQUIRE(grr_group_open("q8", &h.g) == GRR_OK);

  Text commute;
  REQUIRE(grr_probe(h.g, nullptr, "commute", "4,8", 2000, 7, -1, &commute.p) == GRR_OK);
  json j = json::parse(commute.str());
  CHECK(j["group"] == "q8");
  CHECK(j["quantity"] == "commute");
  CHECK(j["lengths"] == json::array({4, 8}));
  REQUIRE(j["estimates"].size() == 2);
  CHECK(j["radii"].size() == 2);
  CHECK(j.contains("trend_verdict"));
  for (const json& e : j["estimates"]) {
    CHECK(e["value"].get<double>() > 0.3);
    CHECK(e["value"].get<double>() < 1.0);
  }

  Text square;
  REQUIRE(grr_probe(h.g, nullptr, "square", "8,16", 2000, 7, -1, &square.p) == GRR_OK);
  json sq = json::parse(square.str());
  REQUIRE(sq["argmax"].size() == 2);
  CHECK(sq["argmax"][0] == "-1");
  CHECK(sq["argmax"][1] == "-1");

  Text invo;
  REQUIRE(grr_probe(h.g, nullptr, "involution", "8", 2000, 7, -1, &invo.p) == GRR_OK);
  json iv = json::parse(invo.str());
  REQUIRE(iv["reports"].size() == 1);
  CHECK(iv["reports"][0]["exceeds_threshold"] == false);

  GroupHandle dinf;
  REQUIRE(grr_group_open("dinf", &dinf.g) == GRR_OK);
  Text coset;
  REQUIRE(grr_probe(dinf.g, nullptr, "coset", "50", 2000, 31, -1, &coset.p) == GRR_OK);
  json cj = json::parse(coset.str());
  CHECK(cj["subgroup"] == "rotations");
  CHECK(cj["subgroup_index"] == 2);
  double v = cj["estimates"][0]["value"].get<double>();
  CHECK(v > 0.4);
  CHECK(v < 0.6);

  Text cover;
  REQUIRE(grr_probe(dinf.g, nullptr, "cover", nullptr, 0, 0, 8, &cover.p) == GRR_OK);
  json cv = json::parse(cover.str());
  CHECK(cv["translate"] == "(0,1)");
  CHECK(cv["cover"]["covers"] == true);
  CHECK(cv["radius"] == 8);

  // a coset probe needs a declared subgroup; q8 has none
  Text bad;
  CHECK(grr_probe(h.g, nullptr, "coset", "8", 100, 1, -1, &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_probe(h.g, nullptr, "commute", "x", 100, 1, -1, &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_probe(h.g, nullptr, "commute", "8", 0, 1, -1, &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_probe(h.g, nullptr, "nothing", "8", 100, 1, -1, &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_probe(nullptr, nullptr, "commute", "8", 100, 1, -1, &bad.p) == GRR_ERR_ARGUMENT);

  // sets are bound to their owning group handle
  SetHandle foreign;
  REQUIRE(grr_genset_default(dinf.g, &foreign.s) == GRR_OK);
  CHECK(grr_probe(h.g, foreign.s, "commute", "8", 100, 1, -1, &bad.p) == GRR_ERR_ARGUMENT);
}

TEST_CASE("graph export over the c surface") {
  GroupHandle h;
  REQUIRE(grr_group_open("cyclic:4", &h.g) == GRR_OK);
  SetHandle s;
  REQUIRE(grr_genset_parse(h.g, "1\n3\n", &s.s) == GRR_OK);

  Text dot;
  REQUIRE(grr_export_graph(s.s, 0, -1, "dot", &dot.p) == GRR_OK);
  CHECK(dot.str().rfind("graph cayley {", 0) == 0);

  Text digraph;
  REQUIRE(grr_export_graph(s.s, 1, -1, "dot", &digraph.p) == GRR_OK);
  CHECK(digraph.str().rfind("digraph cayley {", 0) == 0);

  Text js;
  REQUIRE(grr_export_graph(s.s, 0, -1, "json", &js.p) == GRR_OK);
  json j = json::parse(js.str());
  CHECK(j["vertices"].size() == 4);

  GroupHandle f2;
  REQUIRE(grr_group_open("free:2", &f2.g) == GRR_OK);
  SetHandle fs;
  REQUIRE(grr_genset_default(f2.g, &fs.s) == GRR_OK);
  Text ball;
  REQUIRE(grr_export_graph(fs.s, 0, 2, "json", &ball.p) == GRR_OK);
  json b = json::parse(ball.str());
  CHECK(b["vertices"].size() == 17);

  Text bad;
  CHECK(grr_export_graph(fs.s, 0, -1, "json", &bad.p) == GRR_ERR_UNSUPPORTED);
  CHECK(grr_export_graph(s.s, 0, -1, "svg", &bad.p) == GRR_ERR_ARGUMENT);
  CHECK(grr_export_graph(nullptr, 0, -1, "dot", &bad.p) == GRR_ERR_ARGUMENT);
}
