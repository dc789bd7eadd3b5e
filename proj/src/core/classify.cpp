#include "grr/classify.hpp"

#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "grr/core.hpp"
#include "grr/families.hpp"
#include "grr/predicates.hpp"

namespace grr {

std::string to_string(RegRepr r) {
  switch (r) {
    case RegRepr::grr: return "grr";
    case RegRepr::drr: return "drr";
    case RegRepr::orr: return "orr";
  }
  return "?";
}

namespace {

bool exponent_two(const Group& g) {
  const Elem id = g.identity();
  for (const Elem& x : g.elements())
    if (g.mul(x, x) != id) return false;
  return true;
}

std::optional<uint32_t> power_of_two_log(uint64_t n) {
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  uint32_t r = 0;
  while (n > 1) {
    n >>= 1;
    ++r;
  }
  return r;
}

std::map<uint64_t, size_t> order_histogram(const Group& g) {
  std::map<uint64_t, size_t> h;
  for (const Elem& x : g.elements()) {
    auto o = g.elem_order(x);
    if (!o) throw Error(Status::internal, "unbounded element order in a finite group");
    ++h[*o];
  }
  return h;
}

// Short generating sequence by greedy closure over the canonical element order.
std::vector<Elem> spanning_sequence(const Group& g) {
  const std::vector<Elem>& all = g.elements();
  std::unordered_set<Elem, ElemHash, ElemEq> closed{g.identity()};
  std::vector<Elem> members{g.identity()};
  std::vector<Elem> gens;
  for (const Elem& e : all) {
    if (closed.count(e)) continue;
    gens.push_back(e);
    if (closed.insert(e).second) members.push_back(e);
    for (size_t head = 0; head < members.size(); ++head)
      for (const Elem& s : gens) {
        Elem w = g.mul(members[head], s);
        if (closed.insert(w).second) members.push_back(w);
      }
    if (members.size() == all.size()) break;
  }
  return gens;
}

// Extends gens -> images to an isomorphism of the generated subgroups; exact
// pair-BFS, rejecting on the first inconsistent product or collision.
bool extend_iso(const Group& a, const Group& b, const std::vector<Elem>& gens,
                const std::vector<Elem>& images, size_t full_order) {
  std::unordered_map<Elem, Elem, ElemHash, ElemEq> phi;
  std::unordered_set<Elem, ElemHash, ElemEq> used;
  std::vector<std::pair<Elem, Elem>> queue{{a.identity(), b.identity()}};
  phi.emplace(a.identity(), b.identity());
  used.insert(b.identity());
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (size_t j = 0; j < images.size(); ++j) {
      Elem xg = a.mul(x, gens[j]);
      Elem yh = b.mul(y, images[j]);
      auto it = phi.find(xg);
      if (it != phi.end()) {
        if (it->second != yh) return false;
        continue;
      }
      if (!used.insert(yh).second) return false;
      phi.emplace(xg, yh);
      queue.emplace_back(std::move(xg), std::move(yh));
    }
  }
  return phi.size() == full_order || full_order == 0;
}

}  // namespace

bool isomorphic(const Group& a, const Group& b) {
  if (!a.finite() || !b.finite())
    throw UnsupportedError("isomorphism testing needs finite groups");
  if (*a.order() != *b.order()) return false;
  const uint64_t n = *a.order();
  if (n == 1) return true;
  if (order_histogram(a) != order_histogram(b)) return false;

  std::vector<Elem> gens = spanning_sequence(a);
  std::vector<uint64_t> gen_order;
  for (const Elem& e : gens) gen_order.push_back(*a.elem_order(e));

  // b's elements bucketed by order, for the candidate filter.
  std::unordered_map<uint64_t, std::vector<Elem>> buckets;
  for (const Elem& y : b.elements()) buckets[*b.elem_order(y)].push_back(y);

  std::vector<Elem> images;
  std::function<bool(size_t)> place = [&](size_t i) -> bool {
    if (i == gens.size()) return extend_iso(a, b, gens, images, n);
    auto it = buckets.find(gen_order[i]);
    if (it == buckets.end()) return false;
    for (const Elem& cand : it->second) {
      images.push_back(cand);
      // partial consistency on the subgroup generated so far
      if (extend_iso(a, b, gens, images, 0) && place(i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  return place(0);
}

std::vector<std::pair<std::string, GroupPtr>> exception_groups(RegRepr kind) {
  using namespace families;
  switch (kind) {
    case RegRepr::grr:
      return {
          {"[6,1]", dihedral(6)},
          {"[8,3]", dihedral(8)},
          {"[10,1]", dihedral(10)},
          {"[12,3]", alternating4()},
          {"[24,11]", make_group("q8xc3")},
          {"[32,26]", make_group("q8xc4")},
          {"[16,13]", pauli16()},
          {"[16,6]", modular16()},
          {"[18,4]", generalized_dihedral({3, 3})},
          {"[27,3]", heisenberg_mod(3)},
      };
    case RegRepr::drr:
      return {
          {"q8", quaternion8()},
          {"elementary2:2", elementary2(2)},
          {"elementary2:3", elementary2(3)},
          {"elementary2:4", elementary2(4)},
          {"abelian:3,3", abelian({3, 3})},
      };
    case RegRepr::orr:
      return {
          {"q8", quaternion8()},
          {"abelian:4,2", abelian({4, 2})},
          {"abelian:4,2,2", abelian({4, 2, 2})},
          {"abelian:4,2,2,2", abelian({4, 2, 2, 2})},
          {"abelian:4,2,2,2,2", abelian({4, 2, 2, 2, 2})},
          {"abelian:3,3", abelian({3, 3})},
          {"abelian:3,2,2,2", abelian({3, 2, 2, 2})},
          {"d4od4", d4_central_product()},
          {"presented16a", presented16a()},
          {"presented16b", presented16b()},
          {"presented32", presented32()},
      };
  }
  return {};
}

namespace {

nlohmann::json part_json(const Group& g, const std::vector<Elem>& part, const Elem& x) {
  nlohmann::json a = nlohmann::json::array();
  for (const Elem& e : part) a.push_back(g.print(e));
  return {{"abelian_part", a}, {"x", g.print(x)}};
}

std::optional<Classification> match_finite_list(const Group& g, RegRepr kind) {
  if (!g.finite()) return std::nullopt;
  for (auto& [label, stored] : exception_groups(kind)) {
    if (*stored->order() != *g.order()) continue;
    if (isomorphic(g, *stored)) {
      Classification c;
      c.kind = kind;
      c.verdict = "exception";
      c.exception_class = "finite_list";
      c.exception_id = label;
      c.witness = {{"matched_family", stored->spec()}};
      return c;
    }
  }
  return std::nullopt;
}

Classification admits(RegRepr kind) {
  Classification c;
  c.kind = kind;
  c.verdict = "admits";
  return c;
}

Classification unknown(RegRepr kind) {
  Classification c;
  c.kind = kind;
  c.verdict = "unknown";
  return c;
}

}  // namespace

Classification classify_grr(const Group& g) {
  const RegRepr kind = RegRepr::grr;
  if (!g.finite()) {
    GroupTraits t = g.traits();
    if (t.abelian == Tri::yes) {
      Classification c;
      c.kind = kind;
      c.verdict = "exception";
      c.exception_class = "abelian";
      c.witness = {{"family", g.spec()}};
      return c;
    }
    if (t.abelian != Tri::no) return unknown(kind);
    if (t.generalized_dicyclic == Tri::yes) {
      Classification c;
      c.kind = kind;
      c.verdict = "exception";
      c.exception_class = "generalized_dicyclic";
      c.witness = {{"family", g.spec()}};
      return c;
    }
    if (t.generalized_dicyclic != Tri::no) return unknown(kind);
    return admits(kind);
  }

  const uint64_t n = *g.order();
  if (is_abelian(g)) {
    if (n <= 2) return admits(kind);
    if (exponent_two(g)) {
      auto r = power_of_two_log(n);
      if (!r) throw Error(Status::internal, "exponent-2 group of non-2-power order");
      if (*r >= 5) return admits(kind);
      Classification c;
      c.kind = kind;
      c.verdict = "exception";
      c.exception_class = "abelian";
      c.witness = {{"elementary_rank", *r}};
      return c;
    }
    Classification c;
    c.kind = kind;
    c.verdict = "exception";
    c.exception_class = "abelian";
    for (const Elem& x : g.elements())
      if (*g.elem_order(x) > 2) {
        c.witness = {{"element_of_order_gt_2", g.print(x)}};
        break;
      }
    return c;
  }
  if (auto w = generalized_dicyclic_witness(g)) {
    Classification c;
    c.kind = kind;
    c.verdict = "exception";
    c.exception_class = "generalized_dicyclic";
    c.witness = part_json(g, w->abelian_part, w->x);
    return c;
  }
  if (auto hit = match_finite_list(g, kind)) return *hit;
  return admits(kind);
}

Classification classify_drr(const Group& g) {
  const RegRepr kind = RegRepr::drr;
  if (!g.finite()) return admits(kind);  // the exceptional groups are all finite
  if (auto hit = match_finite_list(g, kind)) return *hit;
  return admits(kind);
}

Classification classify_orr(const Group& g) {
  const RegRepr kind = RegRepr::orr;
  if (!g.finite()) {
    GroupTraits t = g.traits();
    if (t.generalized_dihedral == Tri::yes) {
      Classification c;
      c.kind = kind;
      c.verdict = "exception";
      c.exception_class = "generalized_dihedral";
      c.witness = {{"family", g.spec()}};
      return c;
    }
    if (t.generalized_dihedral != Tri::no) return unknown(kind);
    return admits(kind);
  }
  const uint64_t n = *g.order();
  if (n == 1) return admits(kind);
  if (n == 2) {
    // Dih(1): the order-2 group is the degenerate generalized dihedral case.
    Classification c;
    c.kind = kind;
    c.verdict = "exception";
    c.exception_class = "generalized_dihedral";
    c.witness = part_json(g, {g.identity()}, g.elements()[0] == g.identity()
                                                 ? g.elements()[1]
                                                 : g.elements()[0]);
    return c;
  }
  if (auto w = generalized_dihedral_witness(g)) {
    Classification c;
    c.kind = kind;
    c.verdict = "exception";
    c.exception_class = "generalized_dihedral";
    c.witness = part_json(g, w->abelian_part, w->x);
    return c;
  }
  if (auto hit = match_finite_list(g, kind)) return *hit;
  return admits(kind);
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j{{"kind", to_string(c.kind)}, {"verdict", c.verdict}};
  if (!c.exception_class.empty()) j["exception_class"] = c.exception_class;
  if (!c.exception_id.empty()) j["exception_id"] = c.exception_id;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  return j;
}

}  // namespace grr
