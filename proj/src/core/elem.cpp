#include "grr/elem.hpp"

namespace grr {

namespace {

inline uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

size_t hash_rep(const ElemRep& rep) {
  struct Visitor {
    size_t operator()(const SmallRep& r) const {
      uint64_t h = 0x5bf03635;
      for (int64_t v : r.v) h = mix(h ^ static_cast<uint64_t>(v));
      return static_cast<size_t>(h);
    }
    size_t operator()(const WordRep& r) const { return r.d->hash; }
    size_t operator()(const LampRep& r) const { return r.d->hash; }
    size_t operator()(const GrigRep& r) const {
      return static_cast<size_t>(mix(0x47524947ull ^ r.node));
    }
  };
  return std::visit(Visitor{}, rep);
}

}  // namespace grr
