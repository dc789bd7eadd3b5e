#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "grr/families.hpp"
#include "grr/predicates.hpp"

using namespace grr;

namespace {

using ElemSet = std::unordered_set<Elem, ElemHash, ElemEq>;

ElemSet as_set(const std::vector<Elem>& v) { return ElemSet(v.begin(), v.end()); }

bool is_subgroup(const Group& g, const std::vector<Elem>& h) {
  ElemSet s = as_set(h);
  if (!s.count(g.identity())) return false;
  for (const Elem& a : h)
    for (const Elem& b : h)
      if (!s.count(g.mul(a, b))) return false;
  for (const Elem& a : h)
    if (!s.count(g.inv(a))) return false;
  return true;
}

}  // namespace

TEST_CASE("centralizer on q8") {
  auto g = make_group("q8");
  auto c = centralizer(*g, g->parse("i"), Scope::whole());
  CHECK(c.size() == 4);
  ElemSet s = as_set(c);
  CHECK(s.count(g->parse("1")));
  CHECK(s.count(g->parse("i")));
  CHECK(s.count(g->parse("-1")));
  CHECK(s.count(g->parse("-i")));
  // -1 is central.
  CHECK(centralizer(*g, g->parse("-1"), Scope::whole()).size() == 8);
}

TEST_CASE("centralizer filter semantics on a ball") {
  auto g = make_group("heisenberg");
  Elem x = g->generators()[0];
  auto scope = g->ball_elements(2);
  auto c = centralizer(*g, x, Scope::ball(2));
  ElemSet in = as_set(c);
  for (const Elem& e : scope) {
    bool commutes = g->mul(e, x) == g->mul(x, e);
    CHECK(commutes == (in.count(e) != 0));
  }
  // The commutator [x, y] is central, so its centralizer is the whole scope.
  Elem z = g->commutator(x, g->generators()[1]);
  CHECK(centralizer(*g, z, Scope::ball(2)).size() == scope.size());
}

TEST_CASE("square fibers") {
  auto c4 = make_group("cyclic:4");
  auto f = square_fiber(*c4, {c4->identity()}, Scope::whole());
  CHECK(f.size() == 2);  // 0 and 2

  auto q8 = make_group("q8");
  auto m = square_fiber(*q8, {q8->parse("-1")}, Scope::whole());
  CHECK(m.size() == 6);  // every non-central element squares to -1
  auto u = square_fiber(*q8, {q8->identity()}, Scope::whole());
  CHECK(u.size() == 2);  // 1 and -1

  // Union fiber = disjoint union of the two.
  auto both = square_fiber(*q8, {q8->identity(), q8->parse("-1")}, Scope::whole());
  CHECK(both.size() == 8);

  // Ball scope on an infinite group: solutions of w^2 = 1 in the radius-3
  // ball of the infinite dihedral group are the reflections plus 1.
  auto dinf = make_group("dinf");
  auto invs = square_fiber(*dinf, {dinf->identity()}, Scope::ball(3));
  for (const Elem& e : invs) CHECK(dinf->is_identity(dinf->pow(e, 2)));
  CHECK(invs.size() == 5);  // 1 and four reflections within radius 3
}

TEST_CASE("normal closure") {
  auto s3 = make_group("sym:3");
  auto rot = normal_closure(*s3, {s3->parse("(1 2 3)")}, 100);
  REQUIRE(rot.has_value());
  CHECK(rot->size() == 3);
  CHECK(is_subgroup(*s3, *rot));

  auto all = normal_closure(*s3, {s3->parse("(1 2)")}, 100);
  REQUIRE(all.has_value());
  CHECK(all->size() == 6);

  auto triv = normal_closure(*s3, {}, 100);
  REQUIRE(triv.has_value());
  CHECK(triv->size() == 1);

  // In a free group every nontrivial normal closure is infinite: the budget
  // must trip.
  auto f2 = make_group("free:2");
  CHECK_FALSE(normal_closure(*f2, {f2->parse("a")}, 200).has_value());
}

TEST_CASE("abelian detection") {
  CHECK(is_abelian(*make_group("cyclic:12")));
  CHECK(is_abelian(*make_group("abelian:4,2")));
  CHECK(is_abelian(*make_group("zd:2")));
  CHECK_FALSE(is_abelian(*make_group("q8")));
  CHECK_FALSE(is_abelian(*make_group("sym:3")));
  CHECK_FALSE(is_abelian(*make_group("heisenberg")));
  CHECK_FALSE(is_abelian(*make_group("grigorchuk")));
}

TEST_CASE("generalized dicyclic witnesses") {
  for (const char* spec : {"q8", "gendicyclic:6", "gendicyclic:8", "gendicyclic:4,2",
                           "gendicyclic:2,4"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    auto w = generalized_dicyclic_witness(*g);
    REQUIRE(w.has_value());
    CHECK(is_generalized_dicyclic(*g));
    // A is an abelian index-2 subgroup, x inverts it and x^2 is a nontrivial
    // involution inside A.
    CHECK(w->abelian_part.size() * 2 == *g->order());
    CHECK(is_subgroup(*g, w->abelian_part));
    ElemSet a = as_set(w->abelian_part);
    CHECK_FALSE(a.count(w->x));
    Elem x2 = g->pow(w->x, 2);
    CHECK_FALSE(g->is_identity(x2));
    CHECK(g->is_identity(g->pow(w->x, 4)));
    CHECK(a.count(x2));
    for (const Elem& p : w->abelian_part) {
      for (const Elem& q : w->abelian_part) CHECK(g->mul(p, q) == g->mul(q, p));
      CHECK(g->conj(p, w->x) == g->inv(p));
    }
  }
  CHECK_FALSE(generalized_dicyclic_witness(*make_group("sym:4")).has_value());
  CHECK_FALSE(generalized_dicyclic_witness(*make_group("cyclic:8")).has_value());
  CHECK_FALSE(generalized_dicyclic_witness(*make_group("dihedral:8")).has_value());
  // Declared trait answers for infinite families.
  CHECK_FALSE(is_generalized_dicyclic(*make_group("free:2")));
}

TEST_CASE("generalized dihedral witnesses") {
  for (const char* spec : {"dihedral:6", "dihedral:12", "gendihedral:3,3"}) {
    CAPTURE(spec);
    auto g = make_group(spec);
    auto w = generalized_dihedral_witness(*g);
    REQUIRE(w.has_value());
    CHECK(is_generalized_dihedral(*g));
    CHECK(w->abelian_part.size() * 2 == *g->order());
    CHECK(g->is_identity(g->pow(w->x, 2)));
    for (const Elem& p : w->abelian_part) CHECK(g->conj(p, w->x) == g->inv(p));
  }
  CHECK_FALSE(generalized_dihedral_witness(*make_group("q8")).has_value());
  CHECK_FALSE(generalized_dihedral_witness(*make_group("cyclic:2")).has_value());
  CHECK(is_generalized_dihedral(*make_group("dinf")));
  CHECK_FALSE(is_generalized_dihedral(*make_group("heisenberg")));
}

TEST_CASE("index-2 subgroups") {
  auto c4 = make_group("cyclic:4");
  auto subs = index2_subgroups(*c4);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].size() == 2);
  CHECK(is_subgroup(*c4, subs[0]));

  auto q8 = make_group("q8");
  auto qs = index2_subgroups(*q8);
  CHECK(qs.size() == 3);
  for (const auto& h : qs) {
    CHECK(h.size() == 4);
    CHECK(is_subgroup(*q8, h));
  }

  CHECK(index2_subgroups(*make_group("sym:3")).size() == 1);
  CHECK(index2_subgroups(*make_group("a4")).empty());
  CHECK(index2_subgroups(*make_group("cyclic:3")).empty());
  CHECK(index2_subgroups(*make_group("elementary2:2")).size() == 3);
  CHECK(index2_subgroups(*make_group("elementary2:3")).size() == 7);
  // Distinct subgroups.
  auto e3 = make_group("elementary2:3");
  auto hs = index2_subgroups(*e3);
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j) CHECK(hs[i] != hs[j]);
}
