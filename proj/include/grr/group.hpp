#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grr/core.hpp"
#include "grr/elem.hpp"

namespace grr {

struct GroupTraits {
  bool finite = false;
  Tri abelian = Tri::unknown;
  Tri virtually_abelian = Tri::unknown;
  Tri torsion = Tri::unknown;
  Tri generalized_dicyclic = Tri::unknown;
  Tri generalized_dihedral = Tri::unknown;
};

// Streams group elements in non-decreasing word length with respect to the
// declared generators (and their inverses). Deterministic order.
class BallEnumerator {
public:
  virtual ~BallEnumerator() = default;
  // Returns (element, word length); nullopt once a finite group is exhausted.
  virtual std::optional<std::pair<Elem, int>> next() = 0;
};

// Accumulator for long products (random walk endpoints). Families can plug in
// a representation that avoids re-normalizing after every step.
class WalkBuffer {
public:
  virtual ~WalkBuffer() = default;
  virtual void reset() = 0;
  virtual void step(const Elem& s) = 0;  // right-multiply by s
  virtual Elem current() const = 0;
};

class Group {
public:
  virtual ~Group() = default;

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  // The spec string this group was built from, e.g. "q8" or "heisenberg".
  const std::string& spec() const { return spec_; }

  virtual std::optional<uint64_t> order() const = 0;
  bool finite() const { return order().has_value(); }

  virtual Elem identity() const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem inv(const Elem& a) const = 0;

  virtual std::string print(const Elem& e) const = 0;
  virtual Elem parse(std::string_view text) const = 0;

  // Declared generating set; not necessarily symmetric.
  virtual std::vector<Elem> generators() const = 0;

  virtual GroupTraits traits() const = 0;

  // All elements in canonical order. Finite groups only.
  virtual const std::vector<Elem>& elements() const;

  virtual std::unique_ptr<BallEnumerator> ball() const;
  virtual std::unique_ptr<WalkBuffer> walk_buffer() const;

  bool is_identity(const Elem& e) const { return e == identity(); }
  Elem conj(const Elem& g, const Elem& x) const;        // x^-1 g x
  Elem commutator(const Elem& a, const Elem& b) const;  // a^-1 b^-1 a b
  Elem pow(const Elem& a, int64_t k) const;

  // Order of an element, searching up to `cap` (exact multiplication count);
  // nullopt if not found within the cap.
  std::optional<uint64_t> elem_order(const Elem& e, uint64_t cap = 1u << 20) const;

  // Distinguished subgroup used by coset probes on infinite families (e.g.
  // the rotation subgroup of the infinite dihedral group). Finite-index
  // families report the index; others report nullopt.
  virtual bool has_canonical_subgroup() const { return false; }
  virtual bool canonical_subgroup_contains(const Elem&) const;
  virtual std::optional<uint64_t> canonical_subgroup_index() const { return std::nullopt; }
  virtual std::string canonical_subgroup_name() const { return ""; }

  // Elements of the ball of the given radius, in enumeration order.
  std::vector<Elem> ball_elements(int radius) const;
  // Materializes a scope: whole group (finite) or a ball.
  std::vector<Elem> scope_elements(const Scope& s) const;

protected:
  explicit Group(std::string spec) : spec_(std::move(spec)) {}
  std::string spec_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace grr
