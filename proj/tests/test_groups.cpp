#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "grr/families.hpp"
#include "grr/genset.hpp"
#include "grr/group.hpp"

using namespace grr;

namespace {

// Full axiom sweep on a finite group: closure/associativity are already
// validated by the table constructor, so this checks the Group interface
// glue (identity, inverses, parse/print) on top of it.
void check_finite_axioms(const Group& g) {
  auto els = g.elements();
  REQUIRE(g.order().has_value());
  CHECK(els.size() == *g.order());
  Elem e = g.identity();
  for (const Elem& a : els) {
    CHECK(g.mul(e, a) == a);
    CHECK(g.mul(a, e) == a);
    CHECK(g.mul(a, g.inv(a)) == e);
    CHECK(g.mul(g.inv(a), a) == e);
    CHECK(g.parse(g.print(a)) == a);
  }
}

size_t ball_size(const Group& g, int radius) { return g.ball_elements(radius).size(); }

std::set<int> ball_depths(const Group& g, int count) {
  auto b = g.ball();
  std::set<int> seen;
  int prev = 0;
  for (int i = 0; i < count; ++i) {
    auto nx = b->next();
    if (!nx) break;
    CHECK(nx->second >= prev);  // non-decreasing word length
    prev = nx->second;
    seen.insert(nx->second);
  }
  return seen;
}

}  // namespace

TEST_CASE("family orders") {
  CHECK(make_group("cyclic:12")->order() == 12u);
  CHECK(make_group("abelian:4,2")->order() == 8u);
  CHECK(make_group("elementary2:4")->order() == 16u);
  CHECK(make_group("dihedral:12")->order() == 12u);
  CHECK(make_group("gendihedral:3,3")->order() == 18u);
  CHECK(make_group("gendicyclic:6")->order() == 12u);
  CHECK(make_group("gendicyclic:8")->order() == 16u);
  CHECK(make_group("q8")->order() == 8u);
  CHECK(make_group("a4")->order() == 12u);
  CHECK(make_group("sym:4")->order() == 24u);
  CHECK(make_group("sym:5")->order() == 120u);
  CHECK(make_group("pauli16")->order() == 16u);
  CHECK(make_group("modular16")->order() == 16u);
  CHECK(make_group("d4od4")->order() == 32u);
  CHECK(make_group("presented16a")->order() == 16u);
  CHECK(make_group("presented16b")->order() == 16u);
  CHECK(make_group("presented32")->order() == 32u);
  CHECK(make_group("q8xc3")->order() == 24u);
  CHECK(make_group("q8xc4")->order() == 32u);
  CHECK(make_group("heisenberg:3")->order() == 27u);
  CHECK_FALSE(make_group("heisenberg")->order().has_value());
  CHECK_FALSE(make_group("free:2")->order().has_value());
  CHECK_FALSE(make_group("zd:2")->order().has_value());
  CHECK_FALSE(make_group("dinf")->order().has_value());
  CHECK_FALSE(make_group("lamplighter")->order().has_value());
  CHECK_FALSE(make_group("grigorchuk")->order().has_value());
}

TEST_CASE("bad specs are rejected") {
  CHECK_THROWS_AS(make_group("cyclic:0"), ArgumentError);
  CHECK_THROWS_AS(make_group("sym:9"), ArgumentError);
  CHECK_THROWS_AS(make_group("zd:4"), ArgumentError);
  CHECK_THROWS_AS(make_group("gendicyclic:5"), ArgumentError);
  CHECK_THROWS_AS(make_group("nonsense"), ArgumentError);
}

TEST_CASE("finite axioms and parse/print round-trips") {
  for (const char* spec : {"cyclic:7", "abelian:4,2", "dihedral:10", "gendicyclic:6",
                           "q8", "a4", "sym:4", "pauli16", "modular16", "presented16a",
                           "presented16b", "d4od4", "heisenberg:3", "q8xc3"}) {
    CAPTURE(spec);
    check_finite_axioms(*make_group(spec));
  }
}

TEST_CASE("infinite families: basic algebra and round-trips") {
  for (const char* spec :
       {"heisenberg", "free:2", "zd:2", "dinf", "lamplighter", "grigorchuk"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    Elem e = g->identity();
    CHECK(g->parse(g->print(e)) == e);
    for (const Elem& a : g->generators()) {
      CHECK(g->mul(a, g->inv(a)) == e);
      CHECK(g->parse(g->print(a)) == a);
      for (const Elem& b : g->generators()) {
        Elem ab = g->mul(a, b);
        CHECK(g->parse(g->print(ab)) == ab);
        CHECK(g->mul(g->inv(b), g->inv(a)) == g->inv(ab));
      }
    }
  }
}

TEST_CASE("heisenberg is nilpotent of class 2") {
  auto g = make_group("heisenberg");
  Elem x = g->generators()[0], y = g->generators()[1];
  Elem z = g->commutator(x, y);
  CHECK_FALSE(g->is_identity(z));
  // z is central.
  CHECK(g->mul(x, z) == g->mul(z, x));
  CHECK(g->mul(y, z) == g->mul(z, y));
  CHECK(g->is_identity(g->commutator(x, z)));
  // x^a y^b commute iff the commutator exponent vanishes.
  CHECK_FALSE(g->mul(x, y) == g->mul(y, x));
  // normal form: (a,b,c) = x^a y^b z^(c-ab)
  CHECK(g->parse("(2,-1,5)") == g->mul(g->pow(x, 2), g->mul(g->inv(y), g->pow(z, 7))));
  CHECK(g->parse("(3,2,6)") == g->mul(g->pow(x, 3), g->mul(g->pow(y, 2), g->pow(z, 0))));
}

TEST_CASE("free group reduction") {
  auto g = make_group("free:2");
  Elem a = g->parse("a"), b = g->parse("b");
  CHECK(g->print(g->mul(a, g->inv(a))) == "1");
  CHECK(g->print(g->mul(g->mul(a, b), g->inv(b))) == "a");
  CHECK(g->print(g->inv(g->parse("abA"))) == "aBA");
  CHECK(g->parse("aA") == g->identity());
  CHECK_THROWS_AS(g->parse("c"), ArgumentError);
}

TEST_CASE("infinite dihedral relations") {
  auto g = make_group("dinf");
  auto gens = g->generators();
  REQUIRE(gens.size() == 2);
  // Two reflections whose product is the unit translation (infinite order).
  CHECK(g->is_identity(g->pow(gens[0], 2)));
  CHECK(g->is_identity(g->pow(gens[1], 2)));
  Elem t = g->mul(gens[0], gens[1]);
  CHECK(g->elem_order(t, 1000) == std::nullopt);
  CHECK(g->elem_order(gens[0], 16) == 2u);
}

TEST_CASE("lamplighter algebra") {
  auto g = make_group("lamplighter");
  auto gens = g->generators();  // shift, lamp
  Elem t = gens[0], a = gens[1];
  CHECK(g->is_identity(g->pow(a, 2)));
  CHECK(g->elem_order(t, 100) == std::nullopt);
  // Lamps at distinct positions commute.
  Elem a1 = g->conj(a, t);
  CHECK(g->mul(a, a1) == g->mul(a1, a));
  CHECK_FALSE(g->is_identity(g->mul(a, a1)));
  CHECK(g->print(g->mul(t, a)) == "(1;1)");
  CHECK(g->parse("(-2;0,3)") == g->parse("(-2;0,3)"));
  CHECK_THROWS_AS(g->parse("(0;3,1)"), ArgumentError);
}

TEST_CASE("grigorchuk relations and element orders") {
  auto g = make_group("grigorchuk");
  auto gens = g->generators();  // a, b, c, d
  REQUIRE(gens.size() == 4);
  Elem a = gens[0], b = gens[1], c = gens[2], d = gens[3];
  for (const Elem& s : gens) CHECK(g->is_identity(g->pow(s, 2)));
  CHECK(g->is_identity(g->mul(g->mul(b, c), d)));
  CHECK(g->mul(b, c) == d);
  CHECK(g->mul(c, d) == b);
  CHECK(g->elem_order(g->mul(a, d)) == 4u);
  CHECK(g->elem_order(g->mul(a, c)) == 8u);
  CHECK(g->elem_order(g->mul(a, b)) == 16u);
  // Torsion: a handful of longer words still have finite order.
  Elem w = g->parse("abacad");
  auto n = g->elem_order(w);
  REQUIRE(n.has_value());
  CHECK(g->is_identity(g->pow(w, static_cast<int64_t>(*n))));
  CHECK(g->parse("bcd") == g->identity());
  CHECK(g->parse("abab") == g->pow(g->parse("ab"), 2));
}

TEST_CASE("ball sizes on standard families") {
  CHECK(ball_size(*make_group("free:2"), 0) == 1);
  CHECK(ball_size(*make_group("free:2"), 1) == 5);
  CHECK(ball_size(*make_group("free:2"), 2) == 17);
  CHECK(ball_size(*make_group("zd:2"), 2) == 13);
  CHECK(ball_size(*make_group("zd:1"), 3) == 7);
  CHECK(ball_size(*make_group("dinf"), 5) == 11);
  CHECK(ball_size(*make_group("grigorchuk"), 1) == 5);
  CHECK(ball_size(*make_group("grigorchuk"), 2) == 11);
  CHECK(ball_size(*make_group("lamplighter"), 2) == 10);
  CHECK(ball_size(*make_group("heisenberg"), 1) == 5);
  // Finite group: the ball eventually exhausts the group.
  auto q8 = make_group("q8");
  CHECK(ball_size(*q8, 10) == 8);
}

TEST_CASE("ball enumeration is deterministic and depth-monotone") {
  auto g = make_group("free:2");
  auto first = g->ball_elements(3);
  auto second = g->ball_elements(3);
  CHECK(first == second);
  ball_depths(*g, 60);
  // Identity first.
  CHECK(first[0] == g->identity());
  // No duplicates.
  std::unordered_set<Elem, ElemHash, ElemEq> seen(first.begin(), first.end());
  CHECK(seen.size() == first.size());
}

TEST_CASE("finite enumerator exhausts the group") {
  auto g = make_group("sym:4");
  auto b = g->ball();
  size_t n = 0;
  while (b->next()) ++n;
  CHECK(n == 24);
}

TEST_CASE("walk buffer agrees with repeated multiplication") {
  for (const char* spec : {"q8", "heisenberg", "lamplighter", "grigorchuk", "free:2"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    auto buf = g->walk_buffer();
    Elem acc = g->identity();
    std::vector<Elem> gens = g->generators();
    for (size_t i = 0; i < 40; ++i) {
      const Elem& s = gens[(i * 7 + 3) % gens.size()];
      buf->step(s);
      acc = g->mul(acc, s);
    }
    CHECK(buf->current() == acc);
    buf->reset();
    CHECK(buf->current() == g->identity());
  }
}

TEST_CASE("declared traits") {
  auto q8 = make_group("q8");
  CHECK(q8->traits().finite);
  CHECK(q8->traits().abelian == Tri::no);
  CHECK(make_group("cyclic:6")->traits().abelian == Tri::yes);
  auto grig = make_group("grigorchuk");
  CHECK(grig->traits().torsion == Tri::yes);
  CHECK(grig->traits().virtually_abelian == Tri::no);
  auto f2 = make_group("free:2");
  CHECK(f2->traits().torsion == Tri::no);
  CHECK(f2->traits().virtually_abelian == Tri::no);
  CHECK(make_group("dinf")->traits().virtually_abelian == Tri::yes);
  CHECK(make_group("dinf")->traits().generalized_dihedral == Tri::yes);
  CHECK(make_group("lamplighter")->traits().virtually_abelian == Tri::no);
  CHECK(make_group("heisenberg")->traits().virtually_abelian == Tri::no);
}

TEST_CASE("canonical subgroups") {
  auto dinf = make_group("dinf");
  REQUIRE(dinf->has_canonical_subgroup());
  CHECK(dinf->canonical_subgroup_index() == 2u);
  CHECK(dinf->canonical_subgroup_name() == "rotations");
  Elem r = dinf->mul(dinf->generators()[0], dinf->generators()[1]);
  CHECK(dinf->canonical_subgroup_contains(r));
  CHECK_FALSE(dinf->canonical_subgroup_contains(dinf->generators()[0]));

  auto z2 = make_group("zd:2");
  CHECK(z2->canonical_subgroup_index() == 2u);
  CHECK(z2->canonical_subgroup_contains(z2->parse("(2,1)")));
  CHECK_FALSE(z2->canonical_subgroup_contains(z2->parse("(1,0)")));

  auto h = make_group("heisenberg");
  REQUIRE(h->has_canonical_subgroup());
  CHECK_FALSE(h->canonical_subgroup_index().has_value());  // infinite index
  CHECK(h->canonical_subgroup_contains(h->parse("(0,0,5)")));
  CHECK_FALSE(h->canonical_subgroup_contains(h->parse("(1,0,0)")));

  auto lamp = make_group("lamplighter");
  CHECK(lamp->canonical_subgroup_index() == 2u);
  CHECK(lamp->canonical_subgroup_contains(lamp->parse("(2;0)")));
  CHECK_FALSE(lamp->canonical_subgroup_contains(lamp->parse("(1;)")));

  auto grig = make_group("grigorchuk");
  CHECK(grig->canonical_subgroup_index() == 2u);
  CHECK(grig->canonical_subgroup_contains(grig->parse("aba")));  // two a's
  CHECK(grig->canonical_subgroup_contains(grig->parse("b")));
  CHECK_FALSE(grig->canonical_subgroup_contains(grig->parse("a")));
  CHECK_FALSE(grig->canonical_subgroup_contains(grig->parse("ab")));

  CHECK_FALSE(make_group("q8")->has_canonical_subgroup());
}

TEST_CASE("element order search") {
  auto g = make_group("cyclic:12");
  CHECK(g->elem_order(g->parse("1")) == 12u);
  CHECK(g->elem_order(g->parse("4")) == 3u);
  CHECK(g->elem_order(g->identity()) == 1u);
  auto f = make_group("free:2");
  CHECK(f->elem_order(f->parse("ab"), 64) == std::nullopt);
}

TEST_CASE("from_permutations builds the closure") {
  // <(1 2 3 4), (1 2)> = S4 given 0-based images.
  std::vector<std::vector<uint32_t>> gens{{1, 2, 3, 0}, {1, 0, 2, 3}};
  auto g = families::from_permutations(gens, "rs", 1000);
  CHECK(g->order() == 24u);
  check_finite_axioms(*g);
  // Names are words in the supplied letters.
  bool found = false;
  for (const Elem& e : g->elements())
    if (g->print(e) == "r") found = true;
  CHECK(found);
}

TEST_CASE("from_table validates group axioms") {
  // Z/3 as an explicit table.
  std::vector<std::vector<uint32_t>> t3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto g = families::from_table(t3, {"e", "g", "gg"}, {1});
  CHECK(g->order() == 3u);
  CHECK(g->print(g->mul(g->parse("g"), g->parse("g"))) == "gg");

  // Not a Latin square.
  std::vector<std::vector<uint32_t>> bad{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(families::from_table(bad, {}, {}), ArgumentError);

  // Latin square but not associative (order-5 loop).
  std::vector<std::vector<uint32_t>> loop{{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(families::from_table(loop, {}, {}), ArgumentError);
}

TEST_CASE("permutation text parser") {
  auto g = group_from_permutation_text("(1 2)\n(1 2 3)\n");
  CHECK(g->order() == 6u);
  auto h = group_from_permutation_text("# comment\n2 1 3\n\n2 3 1\n");
  CHECK(h->order() == 6u);
  CHECK_THROWS_AS(group_from_permutation_text("(1)"), IoError);
  CHECK_THROWS_AS(group_from_permutation_text("0 1"), IoError);
  CHECK_THROWS_AS(group_from_permutation_text("2 2"), IoError);
  CHECK_THROWS_AS(group_from_permutation_text(""), IoError);
}

TEST_CASE("gen set invariants") {
  auto g = make_group("q8");
  Elem i = g->parse("i"), j = g->parse("j");
  GenSet s = GenSet::symmetrized(*g, {i, j});
  CHECK(s.size() == 4);
  CHECK(s.symmetric());
  CHECK(s.contains(g->parse("-i")));
  CHECK_FALSE(s.contains(g->identity()));
  CHECK_FALSE(s.bigon_free());
  CHECK(generates(*g, s));

  GenSet oriented(g.get(), {i});
  CHECK_FALSE(oriented.symmetric());
  CHECK(oriented.bigon_free());

  // The identity is rejected; duplicates collapse silently (symmetrizing an
  // involution hands the constructor the same element twice).
  CHECK(GenSet(g.get(), {i, i}).size() == 1);
  CHECK_THROWS_AS(GenSet(g.get(), {g->identity()}), ArgumentError);
  CHECK_THROWS_AS(GenSet(g.get(), {}), ArgumentError);

  auto classes = s.inverse_pair_classes();
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].first == 0);
  CHECK(s[classes[0].second] == g->inv(s[classes[0].first]));

  // -1 is its own inverse: singleton class.
  GenSet t = GenSet::symmetrized(*g, {g->parse("-1"), i});
  auto tc = t.inverse_pair_classes();
  bool has_singleton = false;
  for (auto [p, q] : tc) has_singleton |= (p == q);
  CHECK(has_singleton);
}

TEST_CASE("gen set parse_lines round-trips printed sets") {
  auto g = make_group("dihedral:12");
  GenSet s = GenSet::symmetrized(*g, g->generators());
  std::string text = "# connection set\n";
  for (const std::string& line : s.printed()) text += line + "\n";
  GenSet back = GenSet::parse_lines(*g, text);
  CHECK(back.elems() == s.elems());
}

TEST_CASE("with() extends without duplicating") {
  auto g = make_group("cyclic:9");
  GenSet s = GenSet::symmetrized(*g, {g->parse("1")});
  GenSet t = s.with({g->parse("3"), g->parse("1")});
  CHECK(t.size() == 3);  // "1" already present
  CHECK(t.contains(g->parse("3")));
  CHECK_FALSE(t.symmetric());
}
