#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace grr {

class Group;

// Element payloads. A group element never outlives its owning Group.
//
// SmallRep covers every family whose elements fit in three machine integers
// (finite table groups use v[0] as the element index; the discrete Heisenberg
// group uses all three coordinates; Z^d with d <= 3 likewise). The remaining
// families carry immutable heap payloads behind shared_ptr so copies are
// cheap during long enumerations.

struct SmallRep {
  std::array<int64_t, 3> v{0, 0, 0};
  friend bool operator==(const SmallRep&, const SmallRep&) = default;
};

// Reduced word over the family alphabet (free groups). Lowercase letters are
// generators, uppercase their inverses.
struct WordData {
  std::string word;
  size_t hash;
};

struct WordRep {
  std::shared_ptr<const WordData> d;
  friend bool operator==(const WordRep& a, const WordRep& b) {
    return a.d == b.d || a.d->word == b.d->word;
  }
};

// Wreath-product element (lamplighter): lit positions sorted ascending plus
// the lamplighter position.
struct LampData {
  int64_t pos;
  std::vector<int64_t> lit;
  size_t hash;
};

struct LampRep {
  std::shared_ptr<const LampData> d;
  friend bool operator==(const LampRep& a, const LampRep& b) {
    return a.d == b.d || (a.d->pos == b.d->pos && a.d->lit == b.d->lit);
  }
};

// Canonical id of an interned portrait node (Grigorchuk group). The id alone
// determines equality; the optional word is kept for printing.
struct GrigRep {
  uint32_t node;
  std::shared_ptr<const std::string> word;
  friend bool operator==(const GrigRep& a, const GrigRep& b) { return a.node == b.node; }
};

using ElemRep = std::variant<SmallRep, WordRep, LampRep, GrigRep>;

class Elem {
public:
  Elem() : owner_(nullptr) {}
  Elem(const Group* owner, ElemRep rep) : owner_(owner), rep_(std::move(rep)) {}

  const Group* owner() const { return owner_; }
  const ElemRep& rep() const { return rep_; }

  bool valid() const { return owner_ != nullptr; }

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.owner_ == b.owner_ && a.rep_ == b.rep_;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
  const Group* owner_;
  ElemRep rep_;
};

size_t hash_rep(const ElemRep& rep);

struct ElemHash {
  size_t operator()(const Elem& e) const { return hash_rep(e.rep()); }
};

struct ElemEq {
  bool operator()(const Elem& a, const Elem& b) const { return a == b; }
};

}  // namespace grr
