#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grr/group.hpp"

#include "json.hpp"

namespace grr {

enum class RegRepr { grr, drr, orr };

std::string to_string(RegRepr r);

// Outcome of the exception-list check for one of the three regularity kinds.
//   verdict: "admits" | "exception" | "unknown"
//   exception_class (when verdict == "exception"):
//     "abelian" | "generalized_dicyclic" | "generalized_dihedral" | "finite_list"
//   exception_id: matched stored group, e.g. "[16,13]" (finite_list only)
// "unknown" is reserved for groups whose declared metadata cannot settle the
// question (never a guess).
struct Classification {
  RegRepr kind = RegRepr::grr;
  std::string verdict;
  std::string exception_class;
  std::string exception_id;
  nlohmann::json witness;  // e.g. the abelian part and x for dicyclic matches
};

Classification classify_grr(const Group& g);
Classification classify_drr(const Group& g);
Classification classify_orr(const Group& g);

// The stored exceptional groups for one regularity kind, as (label, group).
// Labels are order/id pairs like "[16,13]" or family names like "q8".
std::vector<std::pair<std::string, GroupPtr>> exception_groups(RegRepr kind);

// Isomorphism test for finite groups (backtrack over generator images with
// incremental partial-closure consistency).
bool isomorphic(const Group& a, const Group& b);

nlohmann::json to_json(const Classification& c);

}  // namespace grr
