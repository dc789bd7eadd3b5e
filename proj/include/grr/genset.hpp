#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "grr/group.hpp"

namespace grr {

// An ordered duplicate-free connection set. The identity is never a member.
// Most operations require the set to be symmetric (closed under inverses);
// directed constructions may use asymmetric sets.
class GenSet {
public:
  GenSet(const Group* g, std::vector<Elem> elems);

  static GenSet symmetrized(const Group& g, const std::vector<Elem>& elems);
  // Parses one element per line; blank lines and '#' comments are skipped.
  static GenSet parse_lines(const Group& g, const std::string& text);

  const Group& group() const { return *group_; }
  const std::vector<Elem>& elems() const { return elems_; }
  size_t size() const { return elems_.size(); }
  const Elem& operator[](size_t i) const { return elems_[i]; }

  bool contains(const Elem& e) const { return index_.count(e) != 0; }
  int index_of(const Elem& e) const;

  bool symmetric() const { return symmetric_; }
  // True when no element's inverse is also a member (oriented connection set).
  bool bigon_free() const;

  // Positions grouped into {s, s^-1} classes, each class (i, j) with i <= j
  // (i == j for involutions), ordered by first occurrence. Symmetric sets only.
  std::vector<std::pair<int, int>> inverse_pair_classes() const;

  GenSet with(const std::vector<Elem>& extra) const;

  std::vector<std::string> printed() const;

private:
  const Group* group_;
  std::vector<Elem> elems_;
  std::unordered_map<Elem, int, ElemHash, ElemEq> index_;
  bool symmetric_;
};

// True if the set generates the whole finite group / the ball closure check
// for infinite groups is not offered here (callers use graph connectivity).
bool generates(const Group& g, const GenSet& s);

}  // namespace grr
