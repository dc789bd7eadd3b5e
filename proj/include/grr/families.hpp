#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grr/group.hpp"

namespace grr {
namespace families {

// Finite families (multiplication-table backed).
GroupPtr cyclic(uint32_t n);
GroupPtr abelian(const std::vector<uint32_t>& mods);
GroupPtr elementary2(uint32_t rank);
GroupPtr dihedral(uint32_t order);  // order = 2n, n >= 1
GroupPtr generalized_dihedral(const std::vector<uint32_t>& mods);
GroupPtr generalized_dicyclic(const std::vector<uint32_t>& mods);  // mods[0] even
GroupPtr quaternion8();
GroupPtr alternating4();
GroupPtr symmetric(uint32_t n);  // n <= 6
GroupPtr pauli16();              // central product: order-16 Pauli matrix group
GroupPtr modular16();            // semidirect Z/8 x Z/2 with 5-action
GroupPtr d4_central_product();   // D4 o D4, order 32
GroupPtr presented16a();         // order-16 group <a,b | a^4, b^4, (ab)^2, (ab^-1)^2>
GroupPtr presented16b();         // order-16 group <a,b,c | a^4, b^4, c^4, ...>
GroupPtr presented32();          // order-32 group <a,b,c | ...>
GroupPtr heisenberg_mod(uint32_t p);
GroupPtr direct_product(GroupPtr a, GroupPtr b, std::string spec = "");

// Permutation-backed finite group: closure of the given generator images
// (0-based points). Elements are named by shortest words over `letters`.
GroupPtr from_permutations(const std::vector<std::vector<uint32_t>>& gens,
                           const std::string& letters, uint32_t max_order = 200000);

// Multiplication table given explicitly; validates the group axioms.
// names may be empty (elements become g0, g1, ...). gens are indices.
GroupPtr from_table(const std::vector<std::vector<uint32_t>>& table,
                    std::vector<std::string> names, std::vector<uint32_t> gens);

// Infinite families.
GroupPtr heisenberg();             // discrete Heisenberg group H3(Z)
GroupPtr lamplighter();            // Z/2 wr Z
GroupPtr free_group(uint32_t rank);  // rank <= 26
GroupPtr infinite_dihedral();
GroupPtr zd(uint32_t d);  // Z^d, d <= 3
GroupPtr grigorchuk();

}  // namespace families

// Group spec strings, e.g. "cyclic:12", "sym:4", "free:2", "grigorchuk".
GroupPtr make_group(const std::string& spec);
// JSON with fields: table (n x n, 0-based), optional names, optional gens.
GroupPtr group_from_table_json(const std::string& json_text);
// One permutation per line, 1-based points: images "2 1 4 3" or cycles
// "(1 2)(3 4)"; "e" is the identity.
GroupPtr group_from_permutation_text(const std::string& text);

}  // namespace grr
