#include "grr/group.hpp"

#include <unordered_set>

namespace grr {

namespace {

class BfsBallEnumerator final : public BallEnumerator {
public:
  explicit BfsBallEnumerator(const Group& g) : g_(g) {
    auto push_step = [this](const Elem& s) {
      if (g_.is_identity(s)) return;
      for (const Elem& t : steps_)
        if (t == s) return;
      steps_.push_back(s);
    };
    for (const Elem& s : g.generators()) {
      push_step(s);
      push_step(g.inv(s));
    }
    Elem id = g.identity();
    frontier_.push_back(id);
    seen_.insert(id);
  }

  std::optional<std::pair<Elem, int>> next() override {
    while (true) {
      if (emit_pos_ < frontier_.size()) {
        return std::make_pair(frontier_[emit_pos_++], depth_);
      }
      std::vector<Elem> layer;
      for (const Elem& e : frontier_) {
        for (const Elem& s : steps_) {
          Elem p = g_.mul(e, s);
          if (seen_.insert(p).second) layer.push_back(p);
        }
      }
      if (layer.empty()) return std::nullopt;
      frontier_ = std::move(layer);
      emit_pos_ = 0;
      ++depth_;
    }
  }

private:
  const Group& g_;
  std::vector<Elem> steps_;
  std::vector<Elem> frontier_;
  size_t emit_pos_ = 0;
  int depth_ = 0;
  std::unordered_set<Elem, ElemHash, ElemEq> seen_;
};

class DefaultWalkBuffer final : public WalkBuffer {
public:
  explicit DefaultWalkBuffer(const Group& g) : g_(g), acc_(g.identity()) {}
  void reset() override { acc_ = g_.identity(); }
  void step(const Elem& s) override { acc_ = g_.mul(acc_, s); }
  Elem current() const override { return acc_; }

private:
  const Group& g_;
  Elem acc_;
};

}  // namespace

const std::vector<Elem>& Group::elements() const {
  throw UnsupportedError("element enumeration requires a finite group: " + spec_);
}

std::unique_ptr<BallEnumerator> Group::ball() const {
  return std::make_unique<BfsBallEnumerator>(*this);
}

std::unique_ptr<WalkBuffer> Group::walk_buffer() const {
  return std::make_unique<DefaultWalkBuffer>(*this);
}

Elem Group::conj(const Elem& g, const Elem& x) const { return mul(mul(inv(x), g), x); }

Elem Group::commutator(const Elem& a, const Elem& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Elem Group::pow(const Elem& a, int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem acc = identity();
  Elem base = a;
  uint64_t e = static_cast<uint64_t>(k);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

std::optional<uint64_t> Group::elem_order(const Elem& e, uint64_t cap) const {
  Elem cur = e;
  for (uint64_t k = 1; k <= cap; ++k) {
    if (is_identity(cur)) return k;
    cur = mul(cur, e);
  }
  return std::nullopt;
}

bool Group::canonical_subgroup_contains(const Elem&) const {
  throw UnsupportedError("no canonical subgroup declared for " + spec_);
}

std::vector<Elem> Group::ball_elements(int radius) const {
  if (radius < 0) throw ArgumentError("ball radius must be non-negative");
  std::vector<Elem> out;
  auto en = ball();
  while (auto nx = en->next()) {
    if (nx->second > radius) break;
    out.push_back(nx->first);
  }
  return out;
}

std::vector<Elem> Group::scope_elements(const Scope& s) const {
  if (s.radius) return ball_elements(*s.radius);
  if (!finite())
    throw ArgumentError("whole-group scope needs a finite group; give a ball radius for " +
                        spec_);
  return elements();
}

}  // namespace grr
