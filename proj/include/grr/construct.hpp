#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grr/cayley.hpp"
#include "grr/genset.hpp"
#include "grr/group.hpp"

#include "json.hpp"

namespace grr {

// Base set for the pipeline: (S0 u S0^2 u S0^3) \ {1}. Refuses groups that
// are abelian or generalized dicyclic (the orientation-rigidity hypothesis).
GenSet orientation_rigid_base(const GenSet& s0);

// The four-element candidate difference set {g, g^-1, s0^-1 g, g^-1 s0}.
std::vector<Elem> delta_of(const Group& g, const Elem& cand, const Elem& s0);

// Predicted subset of Delta_g meet s*Delta_g: evaluates the twelve collision
// conditions (s = s0, s = s0^-1, two conjugate variants, and the eight
// square equations on g and s0^-1 g) and returns the implied elements.
std::vector<Elem> collision_set(const Group& g, const Elem& cand, const Elem& s0,
                                const Elem& s);

// One accepted augmentation: S' = S u Delta_g raising the triangle count of
// s0 (and s0^-1) only.
struct AugmentationStep {
  std::string s0;                  // printed form of the targeted element
  std::string g;                   // printed witness
  std::vector<std::string> delta;  // printed Delta_g \ S (the added elements)
  std::vector<Elem> delta_elems;   // same elements, in-memory only
  TriangleCensus before;           // census of S
  TriangleCensus after;            // census of S' restricted to S's positions
  std::vector<uint32_t> delta_counts;  // counts of the added elements in S'
  uint32_t increment = 0;          // after(s0) - before(s0), in {1,2,4}
  std::string branch;              // inferred: "locally_finite" | "not_locally_finite"
  uint64_t candidates_tested = 0;
};

struct ConstructionTrace {
  std::string group;
  std::vector<std::string> initial;  // printed S
  std::vector<std::string> final_set;
  std::vector<AugmentationStep> steps;
  std::vector<std::string> adjustments;  // scheduler retargeting notes
  bool complete = false;
};

// Hypothesis gate shared by the augmentation entry points: the group must be
// declared not virtually abelian (undecidable metadata refuses). `force`
// skips the gate (used to demonstrate search failure on e.g. Z^2).
void require_augmentable(const Group& g, bool force);

// Scans ball candidates in enumeration order, filtering |g|_S >= 3 and
// |s0^-1 g|_S >= 3, and returns the first candidate whose augmented set
// passes direct verification of all step invariants. Throws SearchError with
// the number of candidates tested once the budget is exhausted.
AugmentationStep augment_once(const GenSet& s, const Elem& s0, uint64_t budget,
                              bool force = false);

// S u delta_elems of the step.
GenSet apply_step(const GenSet& s, const AugmentationStep& step);

// Iterates augment_once to push each inverse-pair class of S to a distinct
// triangle count >= 7 (smallest unused target, retarget on overshoot), while
// every added element stays at count <= 6.
ConstructionTrace distinguishing_extension(const GenSet& s, uint64_t budget,
                                           bool force = false);

struct PipelineResult {
  GenSet set;  // the final S2
  ConstructionTrace trace;
};

// Full pipeline: distinguishing_extension over orientation_rigid_base(S0).
PipelineResult grr_generating_set(const GenSet& s0, uint64_t budget,
                                  bool force = false);

constexpr uint64_t default_augment_budget = 100000;

// Independent replay: recomputes censuses for every step of the trace from
// scratch and rechecks all invariants. Returns a list of violations (empty =
// verified).
std::vector<std::string> verify_trace(const Group& g, const ConstructionTrace& t);

nlohmann::json to_json(const ConstructionTrace& t);
ConstructionTrace trace_from_json(const nlohmann::json& j);

}  // namespace grr
