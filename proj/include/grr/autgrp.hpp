#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grr/bignum.hpp"
#include "grr/cayley.hpp"
#include "grr/classify.hpp"

#include "json.hpp"

namespace grr {

// Automorphism group of a (di)graph: generators as vertex permutations plus
// the exact order from a stabilizer chain. If `rooted` was requested the
// result is the stabilizer of that vertex instead of the full group.
struct AutGroup {
  int n = 0;
  std::vector<std::vector<int>> generators;
  BigUint order;
};

AutGroup graph_automorphisms(const CayleyGraph& g, std::optional<int> root = std::nullopt);

// Regularity verdict for a concrete connection set: the graph's automorphism
// group has order exactly |G| iff the vertex stabilizer of the identity is
// trivial (right translations always embed).
struct RegularityReport {
  RegRepr kind;
  bool holds = false;
  BigUint aut_order;
  BigUint stabilizer_order;
  // A nontrivial identity-fixing automorphism, as printed cycles, when !holds.
  std::optional<std::string> witness;
  std::string reason;  // set when the hypothesis fails (e.g. bigons for orr)
};

RegularityReport verify_grr(const GenSet& s);
RegularityReport verify_drr(const GenSet& s);
RegularityReport verify_orr(const GenSet& s);

// Checks that every automorphism phi of Cay(G, s2) satisfies the colour
// condition phi(g s) in {phi(g) s, phi(g) s^-1} for all g and all s in s1
// (s1 a subset of s2, both symmetric). The maps satisfying the condition form
// a subgroup, so checking the computed generators suffices.
struct ColourPreservationReport {
  bool all_preserve = true;
  // On failure: the generator index and the violated edge (u, v).
  std::optional<std::tuple<int, int, int>> violation;
  size_t generators_checked = 0;
};

ColourPreservationReport colour_preserving_automorphisms(const GenSet& s1,
                                                         const GenSet& s2);

// Counts bijections phi of the (finite) group with phi(1) = v0 fixed, subject
// to phi(gs) in {phi(g)s, phi(g)s^-1} for all g and all s in S. The set is
// orientation-rigid when for every v0 exactly one solution exists (the right
// translation), i.e. the total count over all v0 equals |G|.
struct RigidityReport {
  bool rigid = false;
  uint64_t solutions = 0;   // total over all images of the identity
  // A non-translation solution as element-image pairs, when !rigid.
  std::optional<std::vector<std::pair<std::string, std::string>>> witness;
};

RigidityReport orientation_rigidity_check(const GenSet& s);

nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const RigidityReport& r);

}  // namespace grr
