#pragma once

#include <optional>
#include <vector>

#include "grr/genset.hpp"
#include "grr/group.hpp"

namespace grr {

// Elements of the scope commuting with s.
std::vector<Elem> centralizer(const Group& g, const Elem& s, const Scope& scope);

// Elements x of the scope with x^2 in fiber.
std::vector<Elem> square_fiber(const Group& g, const std::vector<Elem>& fiber,
                               const Scope& scope);

// Smallest normal subgroup containing seed, by closure under products and
// conjugation by the declared generators. Fails (nullopt) once more than
// `budget` elements have been accumulated.
std::optional<std::vector<Elem>> normal_closure(const Group& g,
                                                const std::vector<Elem>& seed,
                                                size_t budget);

bool is_abelian(const Group& g);

struct DicyclicWitness {
  std::vector<Elem> abelian_part;  // the index-2 abelian subgroup A
  Elem x;                          // x outside A with x^2 != 1, x^4 = 1, x a x^-1 = a^-1
};

struct DihedralWitness {
  std::vector<Elem> abelian_part;
  Elem x;  // involution inverting A
};

// Generalized dicyclic: non-abelian, abelian A of index 2, and some x not in A
// of order exactly 4 with x a x^-1 = a^-1 for all a in A. Finite groups only;
// infinite families answer from their declared traits.
std::optional<DicyclicWitness> generalized_dicyclic_witness(const Group& g);
bool is_generalized_dicyclic(const Group& g);

// Generalized dihedral: abelian A of index 2 inverted by an involution
// outside A (the trivial group and Z/2 count as degenerate cases and are
// excluded; "non-trivial" means A != 1).
std::optional<DihedralWitness> generalized_dihedral_witness(const Group& g);
bool is_generalized_dihedral(const Group& g);

// Index-2 subgroups of a finite group, each as an element list in canonical
// order. Derived from the quotient by the subgroup generated by all squares
// (the quotient is then an elementary abelian 2-group whose index-2 subgroups
// are kernels of nonzero functionals).
std::vector<std::vector<Elem>> index2_subgroups(const Group& g);

}  // namespace grr
