#include <unordered_map>

#include "grr/core.hpp"
#include "grr/families.hpp"

namespace grr {
namespace families {

namespace {

// First Grigorchuk group, elements as portraits on the binary rooted tree,
// hash-consed and contracted to the nucleus {1, a, b, c, d}:
//   a swaps the two subtrees; b = (a, c), c = (a, d), d = (1, b).
// Node ids 0..4 are the nucleus in that order; composite nodes store
// (eps, left, right) where eps is the root swap and left/right the sections.
// Contraction at every intern() makes ids canonical: two elements are equal
// iff their node ids coincide.
class GrigorchukGroup final : public Group {
public:
  GrigorchukGroup() : Group("grigorchuk") {}

  std::optional<uint64_t> order() const override { return std::nullopt; }

  Elem identity() const override { return make(0, "1"); }

  Elem mul(const Elem& a, const Elem& b) const override {
    uint32_t x = node_of(a), y = node_of(b);
    uint32_t id = mul_nodes(x, y);
    return make(id, reduce_concat(word_of(a), word_of(b)));
  }

  Elem inv(const Elem& a) const override {
    uint32_t id = inv_node(node_of(a));
    const std::string& w = word_of(a);
    // All four letters are involutions, so reversing the word inverts it.
    std::string rw(w == "1" ? "1" : std::string(w.rbegin(), w.rend()));
    return make(id, std::move(rw));
  }

  std::string print(const Elem& e) const override { return word_of(e); }

  Elem parse(std::string_view text) const override {
    if (text == "1") return identity();
    uint32_t id = 0;
    std::string red;
    for (char c : text) {
      if (c < 'a' || c > 'd')
        throw ArgumentError("grigorchuk words use letters a,b,c,d: \"" +
                            std::string(text) + "\"");
      id = mul_nodes(id, static_cast<uint32_t>(c - 'a' + 1));
      push_reduced(red, c);
    }
    return make(id, red.empty() ? "1" : red);
  }

  std::vector<Elem> generators() const override {
    return {make(1, "a"), make(2, "b"), make(3, "c"), make(4, "d")};
  }

  GroupTraits traits() const override {
    GroupTraits t;
    t.finite = false;
    t.abelian = Tri::no;
    t.virtually_abelian = Tri::no;
    t.torsion = Tri::yes;
    t.generalized_dicyclic = Tri::no;
    t.generalized_dihedral = Tri::no;
    return t;
  }

  bool has_canonical_subgroup() const override { return true; }
  bool canonical_subgroup_contains(const Elem& e) const override {
    const std::string& w = word_of(e);
    size_t k = 0;
    for (char c : w)
      if (c == 'a') ++k;
    return (k & 1) == 0;
  }
  std::optional<uint64_t> canonical_subgroup_index() const override { return 2; }
  std::string canonical_subgroup_name() const override { return "even_a_count"; }

private:
  struct Node {
    uint32_t eps, l, r;
  };

  static constexpr uint32_t kComposite = 5;  // ids below are nucleus leaves

  uint32_t eps_of(uint32_t x) const {
    if (x < kComposite) return x == 1 ? 1u : 0u;
    return nodes_[x - kComposite].eps;
  }

  uint32_t section(uint32_t x, uint32_t side) const {
    static constexpr uint32_t leaf_sec[5][2] = {
        {0, 0},  // 1
        {0, 0},  // a
        {1, 3},  // b = (a, c)
        {1, 4},  // c = (a, d)
        {0, 2},  // d = (1, b)
    };
    if (x < kComposite) return leaf_sec[x][side];
    const Node& n = nodes_[x - kComposite];
    return side ? n.r : n.l;
  }

  uint32_t intern(uint32_t eps, uint32_t l, uint32_t r) const {
    // Contract to the nucleus where possible.
    if (eps == 0) {
      if (l == 0 && r == 0) return 0;
      if (l == 1 && r == 3) return 2;
      if (l == 1 && r == 4) return 3;
      if (l == 0 && r == 2) return 4;
    } else if (l == 0 && r == 0) {
      return 1;
    }
    uint64_t key = (static_cast<uint64_t>(eps) << 62) |
                   (static_cast<uint64_t>(l) << 31) | r;
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    uint32_t id = kComposite + static_cast<uint32_t>(nodes_.size());
    nodes_.push_back({eps, l, r});
    intern_.emplace(key, id);
    return id;
  }

  uint32_t mul_nodes(uint32_t x, uint32_t y) const {
    if (x == 0) return y;
    if (y == 0) return x;
    if (x < kComposite && y < kComposite) {
      // {1, b, c, d} is a Klein four-group; a is an involution. Mixed
      // products with a fall through to the recursive case (terminating,
      // since the sections of a are trivial).
      if (x == 1 && y == 1) return 0;
      if (x >= 2 && y >= 2) {
        if (x == y) return 0;
        return 2 + 3 + 4 - x - y;  // the third letter
      }
    }
    uint64_t key = (static_cast<uint64_t>(x) << 32) | y;
    auto it = prod_memo_.find(key);
    if (it != prod_memo_.end()) return it->second;
    // (gh)_i = g_{i xor eps(h)} h_i; the swaps compose as eps(g) xor eps(h).
    uint32_t ey = eps_of(y);
    uint32_t l = mul_nodes(section(x, ey), section(y, 0));
    uint32_t r = mul_nodes(section(x, 1 ^ ey), section(y, 1));
    uint32_t id = intern(eps_of(x) ^ ey, l, r);
    if (prod_memo_.size() >= (1u << 23)) prod_memo_.clear();
    prod_memo_.emplace(key, id);
    return id;
  }

  uint32_t inv_node(uint32_t x) const {
    if (x < kComposite) return x;  // nucleus elements are involutions
    auto it = inv_memo_.find(x);
    if (it != inv_memo_.end()) return it->second;
    uint32_t e = eps_of(x);
    uint32_t id = intern(e, inv_node(section(x, e)), inv_node(section(x, 1 ^ e)));
    inv_memo_.emplace(x, id);
    return id;
  }

  // Word reduction in the free product {1,a} * {1,b,c,d}: cancel squares and
  // fold {b,c,d} pairs into the third letter.
  static void push_reduced(std::string& w, char c) {
    if (!w.empty()) {
      char t = w.back();
      if (t == c) {
        w.pop_back();
        return;
      }
      if (t != 'a' && c != 'a') {
        w.pop_back();
        push_reduced(w, static_cast<char>('b' + 'c' + 'd' - t - c));
        return;
      }
    }
    w += c;
  }

  static std::string reduce_concat(const std::string& u, const std::string& v) {
    std::string w = u == "1" ? "" : u;
    if (v != "1")
      for (char c : v) push_reduced(w, c);
    return w.empty() ? "1" : w;
  }

  Elem make(uint32_t id, std::string word) const {
    return Elem(this, GrigRep{id, std::make_shared<const std::string>(std::move(word))});
  }

  uint32_t node_of(const Elem& e) const {
    if (e.owner() != this) throw ArgumentError("element belongs to a different group");
    const auto* g = std::get_if<GrigRep>(&e.rep());
    if (!g) throw ArgumentError("malformed element");
    return g->node;
  }

  const std::string& word_of(const Elem& e) const {
    if (e.owner() != this) throw ArgumentError("element belongs to a different group");
    const auto* g = std::get_if<GrigRep>(&e.rep());
    if (!g || !g->word) throw ArgumentError("malformed element");
    return *g->word;
  }

  mutable std::vector<Node> nodes_;
  mutable std::unordered_map<uint64_t, uint32_t> intern_;
  mutable std::unordered_map<uint64_t, uint32_t> prod_memo_;
  mutable std::unordered_map<uint32_t, uint32_t> inv_memo_;
};

}  // namespace

GroupPtr grigorchuk() { return std::make_shared<GrigorchukGroup>(); }

}  // namespace families
}  // namespace grr
