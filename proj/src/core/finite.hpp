#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "grr/group.hpp"

namespace grr {

// Multiplication-table group. Elements are SmallRep with v[0] = index.
class FiniteTableGroup final : public Group {
public:
  // Validates the group axioms (associativity fully checked for n <= 160).
  FiniteTableGroup(std::string spec, std::vector<uint32_t> table, uint32_t n,
                   std::vector<std::string> names, std::vector<uint32_t> gens);

  std::optional<uint64_t> order() const override { return n_; }
  Elem identity() const override { return at(id_); }
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  std::string print(const Elem& e) const override;
  Elem parse(std::string_view text) const override;
  std::vector<Elem> generators() const override;
  GroupTraits traits() const override { return traits_; }
  const std::vector<Elem>& elements() const override { return elems_; }

  uint32_t size() const { return n_; }
  uint32_t idx_mul(uint32_t a, uint32_t b) const { return table_[a * n_ + b]; }
  uint32_t idx_inv(uint32_t a) const { return inv_[a]; }
  uint32_t idx_identity() const { return id_; }
  uint32_t idx_of(const Elem& e) const;
  Elem at(uint32_t i) const { return Elem(this, SmallRep{{i, 0, 0}}); }
  const std::vector<uint32_t>& gen_indices() const { return gens_; }

  static const FiniteTableGroup* cast(const Group& g);

private:
  uint32_t n_;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> inv_;
  uint32_t id_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, uint32_t> byname_;
  std::vector<uint32_t> gens_;
  std::vector<Elem> elems_;
  GroupTraits traits_;
};

// Greedily extends a generating sequence until it spans the whole table group
// (used when no generators are declared).
std::vector<uint32_t> spanning_generators(const std::vector<uint32_t>& table, uint32_t n,
                                          uint32_t id);

}  // namespace grr
