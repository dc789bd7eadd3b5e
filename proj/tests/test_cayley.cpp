#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "grr/cayley.hpp"
#include "grr/families.hpp"

using namespace grr;

namespace {

// Graph-side oracle: common neighbours of the endpoints of the edge (1, s),
// counted on the concrete Cayley graph.
uint32_t triangles_via_graph(const GenSet& s, const Elem& e) {
  CayleyGraph cg = build_cayley_graph(s, std::nullopt);
  int u = cg.vert_index.at(s.group().identity());
  int v = cg.vert_index.at(e);
  uint32_t count = 0;
  for (auto [w, j] : cg.arcs[u])
    if (w != v && cg.adjacent(w, v)) ++count;
  return count;
}

GenSet default_set(const GroupPtr& g) {
  return GenSet::symmetrized(*g, g->generators());
}

}  // namespace

TEST_CASE("triangle counts match the graph oracle") {
  struct Case {
    const char* spec;
    std::vector<const char*> gens;
  };
  for (const Case& c : {Case{"q8", {"i", "j"}},
                        Case{"cyclic:5", {"1", "2"}},
                        Case{"sym:3", {"(1 2)", "(1 2 3)"}},
                        Case{"dihedral:12", {"t(1)", "f(0)"}},
                        Case{"sym:4", {"(1 2)", "(1 2 3 4)"}},
                        Case{"heisenberg:3", {"(1,0,0)", "(0,1,0)"}}}) {
    CAPTURE(c.spec);
    auto g = make_group(c.spec);
    std::vector<Elem> gens;
    for (const char* t : c.gens) gens.push_back(g->parse(t));
    GenSet s = GenSet::symmetrized(*g, gens);
    for (const Elem& e : s.elems()) {
      CAPTURE(g->print(e));
      CHECK(triangle_count(s, e) == triangles_via_graph(s, e));
    }
  }
}

TEST_CASE("census basics") {
  auto c5 = make_group("cyclic:5");
  // Pentagon: no triangles anywhere.
  GenSet pent = GenSet::symmetrized(*c5, {c5->parse("1")});
  for (uint32_t d : census(pent).delta) CHECK(d == 0);
  // K5: every edge lies on three triangles.
  GenSet k5 = GenSet::symmetrized(*c5, {c5->parse("1"), c5->parse("2")});
  for (uint32_t d : census(k5).delta) CHECK(d == 3);

  // K4,4: bipartite, triangle free.
  auto q8 = make_group("q8");
  GenSet s = GenSet::symmetrized(*q8, {q8->parse("i"), q8->parse("j")});
  for (uint32_t d : census(s).delta) CHECK(d == 0);

  // Census is inversion-invariant on symmetric sets.
  auto s4 = make_group("sym:4");
  GenSet t = default_set(s4);
  TriangleCensus c = census(t);
  for (size_t i = 0; i < t.size(); ++i) {
    int j = t.index_of(s4->inv(t[i]));
    REQUIRE(j >= 0);
    CHECK(c.delta[i] == c.delta[static_cast<size_t>(j)]);
  }

  // Non-members have no triangle count.
  CHECK(triangle_count(t, s4->identity()) == 0);
}

TEST_CASE("census json shape") {
  auto g = make_group("q8");
  GenSet s = default_set(g);
  auto j = census_json(s, census(s));
  CHECK(j["group"] == "q8");
  CHECK(j["size"] == s.size());
  REQUIRE(j["entries"].size() == s.size());
  CHECK(j["entries"][0].contains("s"));
  CHECK(j["entries"][0].contains("delta"));
}

TEST_CASE("finite cayley graph shape") {
  auto q8 = make_group("q8");
  GenSet s = GenSet::symmetrized(*q8, {q8->parse("i"), q8->parse("j")});
  CayleyGraph cg = build_cayley_graph(s, std::nullopt);
  CHECK(cg.n() == 8);
  CHECK_FALSE(cg.directed);
  CHECK_FALSE(cg.partial);
  CHECK(cg.colour_count == 2);
  for (int v = 0; v < cg.n(); ++v) CHECK(cg.arcs[v].size() == 4);

  // K4,4 structure: sides {1,-1,k,-k} and {i,-i,j,-j}; nothing inside a side
  // is adjacent.
  int v1 = cg.vert_index.at(q8->parse("1"));
  int vi = cg.vert_index.at(q8->parse("i"));
  int vm1 = cg.vert_index.at(q8->parse("-1"));
  int vj = cg.vert_index.at(q8->parse("j"));
  CHECK(cg.adjacent(v1, vi));
  CHECK(cg.adjacent(v1, vj));
  CHECK_FALSE(cg.adjacent(v1, vm1));
  CHECK_FALSE(cg.adjacent(vi, vj));
  CHECK(cg.adjacent(vi, vm1));

  // Adjacency is symmetric.
  for (int u = 0; u < cg.n(); ++u)
    for (auto [v, j] : cg.arcs[u]) CHECK(cg.adjacent(v, u));
}

TEST_CASE("directed cayley graph") {
  auto c5 = make_group("cyclic:5");
  GenSet s(c5.get(), {c5->parse("1")});
  CayleyGraph cg = build_cayley_digraph(s, std::nullopt);
  CHECK(cg.directed);
  CHECK(cg.colour_count == 1);
  for (int v = 0; v < cg.n(); ++v) {
    REQUIRE(cg.arcs[v].size() == 1);
    // arc target is v + 1 as an element
    Elem w = c5->mul(cg.verts[v], s[0]);
    CHECK(cg.arcs[v][0].first == cg.vert_index.at(w));
  }
  // Undirected build refuses asymmetric sets.
  CHECK_THROWS_AS(build_cayley_graph(s, std::nullopt), ArgumentError);
}

TEST_CASE("ball-truncated graph on an infinite group") {
  auto f2 = make_group("free:2");
  GenSet s = default_set(f2);
  CHECK_THROWS_AS(build_cayley_graph(s, std::nullopt), ArgumentError);

  CayleyGraph cg = build_cayley_graph(s, 2);
  CHECK(cg.partial);
  CHECK(cg.n() == 17);
  int root = cg.vert_index.at(f2->identity());
  CHECK(cg.arcs[root].size() == 4);
  CHECK_FALSE(cg.boundary[root]);
  size_t boundary = 0;
  for (int v = 0; v < cg.n(); ++v)
    if (cg.boundary[v]) {
      ++boundary;
      // Truncated neighbourhoods: depth-2 vertices of the tree only see
      // their parent inside the ball.
      CHECK(cg.arcs[v].size() == 1);
    }
  CHECK(boundary == 12);
}

TEST_CASE("dot and json exports") {
  auto c4 = make_group("cyclic:4");
  GenSet s = default_set(c4);
  CayleyGraph cg = build_cayley_graph(s, std::nullopt);

  std::string dot = to_dot(cg);
  CHECK(dot.rfind("graph cayley {", 0) == 0);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  auto j = to_json(cg);
  CHECK(j["group"] == "cyclic:4");
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 4);  // the 4-cycle
  CHECK_FALSE(j.contains("arcs"));
  CHECK(j["directed"] == false);

  CayleyGraph dg = build_cayley_digraph(s, std::nullopt);
  std::string ddot = to_dot(dg);
  CHECK(ddot.rfind("digraph cayley {", 0) == 0);
  CHECK(ddot.find("->") != std::string::npos);
  auto dj = to_json(dg);
  CHECK(dj["arcs"].size() == 8);  // both directions listed

  auto f2 = make_group("free:2");
  auto pj = to_json(build_cayley_graph(default_set(f2), 1));
  CHECK(pj["partial"] == true);
  CHECK(pj["radius"] == 1);
  CHECK(pj["boundary"].size() == 4);
}
