#include "grr/predicates.hpp"

#include <unordered_map>
#include <unordered_set>

#include "grr/core.hpp"

namespace grr {

namespace {

using ElemSet = std::unordered_set<Elem, ElemHash, ElemEq>;

// Subgroup closure of `gens` (assumed inverse-closed) by right multiplication.
// Returns nullopt if more than `budget` elements accumulate.
std::optional<std::vector<Elem>> subgroup_closure(const Group& g,
                                                  const std::vector<Elem>& gens,
                                                  size_t budget) {
  std::vector<Elem> out{g.identity()};
  ElemSet seen{g.identity()};
  for (size_t next = 0; next < out.size(); ++next) {
    Elem v = out[next];
    for (const Elem& s : gens) {
      Elem w = g.mul(v, s);
      if (seen.insert(w).second) {
        out.push_back(std::move(w));
        if (out.size() > budget) return std::nullopt;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Elem> centralizer(const Group& g, const Elem& s, const Scope& scope) {
  std::vector<Elem> out;
  for (const Elem& x : g.scope_elements(scope))
    if (g.mul(x, s) == g.mul(s, x)) out.push_back(x);
  return out;
}

std::vector<Elem> square_fiber(const Group& g, const std::vector<Elem>& fiber,
                               const Scope& scope) {
  ElemSet target(fiber.begin(), fiber.end());
  std::vector<Elem> out;
  for (const Elem& x : g.scope_elements(scope))
    if (target.count(g.mul(x, x))) out.push_back(x);
  return out;
}

std::optional<std::vector<Elem>> normal_closure(const Group& g,
                                                const std::vector<Elem>& seed,
                                                size_t budget) {
  // Conjugates of the seed under the generators span a conjugation-closed set;
  // the subgroup that set generates is normal.
  std::vector<Elem> conjugators;
  for (const Elem& x : g.generators()) {
    conjugators.push_back(x);
    conjugators.push_back(g.inv(x));
  }
  std::vector<Elem> closed;
  ElemSet seen;
  for (const Elem& s : seed) {
    for (const Elem& t : {s, g.inv(s)})
      if (seen.insert(t).second) closed.push_back(t);
  }
  for (size_t next = 0; next < closed.size(); ++next) {
    Elem v = closed[next];
    for (const Elem& c : conjugators) {
      Elem w = g.conj(v, c);
      if (seen.insert(w).second) {
        closed.push_back(std::move(w));
        if (closed.size() > budget) return std::nullopt;
      }
    }
  }
  return subgroup_closure(g, closed, budget);
}

bool is_abelian(const Group& g) {
  GroupTraits t = g.traits();
  if (t.abelian != Tri::unknown) return t.abelian == Tri::yes;
  std::vector<Elem> gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

std::optional<DicyclicWitness> generalized_dicyclic_witness(const Group& g) {
  if (!g.finite()) return std::nullopt;
  if (is_abelian(g)) return std::nullopt;
  if (*g.order() % 4 != 0) return std::nullopt;
  const Elem id = g.identity();
  for (std::vector<Elem>& part : index2_subgroups(g)) {
    bool abelian = true;
    for (size_t i = 0; i < part.size() && abelian; ++i)
      for (size_t j = i + 1; j < part.size(); ++j)
        if (g.mul(part[i], part[j]) != g.mul(part[j], part[i])) {
          abelian = false;
          break;
        }
    if (!abelian) continue;
    ElemSet inside(part.begin(), part.end());
    for (const Elem& x : g.elements()) {
      if (inside.count(x)) continue;
      Elem x2 = g.mul(x, x);
      if (x2 == id || g.mul(x2, x2) != id) continue;
      bool inverts = true;
      for (const Elem& a : part)
        if (g.conj(a, g.inv(x)) != g.inv(a)) {  // x a x^-1
          inverts = false;
          break;
        }
      if (inverts) return DicyclicWitness{std::move(part), x};
    }
  }
  return std::nullopt;
}

bool is_generalized_dicyclic(const Group& g) {
  GroupTraits t = g.traits();
  if (t.generalized_dicyclic != Tri::unknown) return t.generalized_dicyclic == Tri::yes;
  if (!g.finite()) return false;
  return generalized_dicyclic_witness(g).has_value();
}

std::optional<DihedralWitness> generalized_dihedral_witness(const Group& g) {
  if (!g.finite()) return std::nullopt;
  if (*g.order() < 4 || *g.order() % 2 != 0) return std::nullopt;
  const Elem id = g.identity();
  for (std::vector<Elem>& part : index2_subgroups(g)) {
    bool abelian = true;
    for (size_t i = 0; i < part.size() && abelian; ++i)
      for (size_t j = i + 1; j < part.size(); ++j)
        if (g.mul(part[i], part[j]) != g.mul(part[j], part[i])) {
          abelian = false;
          break;
        }
    if (!abelian) continue;
    ElemSet inside(part.begin(), part.end());
    for (const Elem& x : g.elements()) {
      if (inside.count(x)) continue;
      if (g.mul(x, x) != id) continue;
      bool inverts = true;
      for (const Elem& a : part)
        if (g.conj(a, g.inv(x)) != g.inv(a)) {
          inverts = false;
          break;
        }
      if (inverts) return DihedralWitness{std::move(part), x};
    }
  }
  return std::nullopt;
}

bool is_generalized_dihedral(const Group& g) {
  GroupTraits t = g.traits();
  if (t.generalized_dihedral != Tri::unknown) return t.generalized_dihedral == Tri::yes;
  if (!g.finite()) return false;
  return generalized_dihedral_witness(g).has_value();
}

std::vector<std::vector<Elem>> index2_subgroups(const Group& g) {
  auto n = g.order();
  if (!n) throw UnsupportedError("index-2 enumeration needs a finite group");
  const std::vector<Elem>& all = g.elements();

  std::vector<Elem> squares;
  {
    ElemSet seen;
    for (const Elem& x : all) {
      Elem s = g.mul(x, x);
      if (seen.insert(s).second) squares.push_back(std::move(s));
    }
  }
  auto kernel = subgroup_closure(g, squares, *n);
  if (!kernel) throw Error(Status::internal, "square-subgroup closure escaped the group");
  ElemSet in_kernel(kernel->begin(), kernel->end());

  // Label cosets of the square subgroup in canonical element order.
  std::unordered_map<Elem, uint32_t, ElemHash, ElemEq> coset_of;
  std::vector<Elem> reps;
  for (const Elem& x : all) {
    if (coset_of.count(x)) continue;
    uint32_t id = static_cast<uint32_t>(reps.size());
    reps.push_back(x);
    for (const Elem& k : *kernel) coset_of.emplace(g.mul(x, k), id);
  }
  const size_t m = reps.size();  // 2^r

  // Coordinates of each coset in the exponent-2 quotient.
  std::vector<uint32_t> coord(m, 0);
  std::vector<bool> assigned(m, false);
  assigned[coset_of.at(g.identity())] = true;
  uint32_t rank = 0;
  for (size_t b = 0; b < m; ++b) {
    if (assigned[b]) continue;
    uint32_t bit = 1u << rank++;
    std::vector<size_t> had;
    for (size_t c = 0; c < m; ++c)
      if (assigned[c]) had.push_back(c);
    for (size_t c : had) {
      uint32_t cb = coset_of.at(g.mul(reps[c], reps[b]));
      coord[cb] = coord[c] | bit;
      assigned[cb] = true;
    }
  }

  std::vector<std::vector<Elem>> out;
  for (uint32_t phi = 1; phi < (1u << rank); ++phi) {
    std::vector<Elem> sub;
    sub.reserve(*n / 2);
    for (const Elem& x : all)
      if (__builtin_parity(phi & coord[coset_of.at(x)]) == 0) sub.push_back(x);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace grr
