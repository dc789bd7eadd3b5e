#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>

#include "grr/core.hpp"
#include "grr/families.hpp"

namespace grr {
namespace families {

namespace {

int64_t parse_int(std::string_view s) {
  int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ArgumentError("bad integer \"" + std::string(s) + "\"");
  return v;
}

// "(a,b,...)" with exactly k signed integers.
std::array<int64_t, 3> parse_tuple(std::string_view text, size_t k,
                                   const std::string& who) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ArgumentError("bad " + who + " element \"" + std::string(text) + "\"");
  std::array<int64_t, 3> out{0, 0, 0};
  std::string_view body = text.substr(1, text.size() - 2);
  size_t pos = 0;
  for (size_t i = 0; i < k; ++i) {
    size_t comma = body.find(',', pos);
    std::string_view tok = comma == std::string_view::npos ? body.substr(pos)
                                                           : body.substr(pos, comma - pos);
    if (i + 1 < k) {
      if (comma == std::string_view::npos)
        throw ArgumentError("bad " + who + " element \"" + std::string(text) + "\"");
      pos = comma + 1;
    } else if (comma != std::string_view::npos) {
      throw ArgumentError("bad " + who + " element \"" + std::string(text) + "\"");
    }
    out[i] = parse_int(tok);
  }
  return out;
}

std::string small_tuple_name(const std::array<int64_t, 3>& v, size_t k) {
  std::string s = "(";
  for (size_t i = 0; i < k; ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

const SmallRep& small(const Group& g, const Elem& e) {
  if (e.owner() != &g) throw ArgumentError("element belongs to a different group");
  const auto* s = std::get_if<SmallRep>(&e.rep());
  if (!s) throw ArgumentError("malformed element");
  return *s;
}

class HeisenbergGroup final : public Group {
public:
  HeisenbergGroup() : Group("heisenberg") {}

  std::optional<uint64_t> order() const override { return std::nullopt; }
  Elem identity() const override { return make(0, 0, 0); }

  Elem mul(const Elem& a, const Elem& b) const override {
    const auto& u = small(*this, a).v;
    const auto& v = small(*this, b).v;
    return make(u[0] + v[0], u[1] + v[1], u[2] + v[2] + u[0] * v[1]);
  }

  Elem inv(const Elem& a) const override {
    const auto& u = small(*this, a).v;
    return make(-u[0], -u[1], u[0] * u[1] - u[2]);
  }

  std::string print(const Elem& e) const override {
    return small_tuple_name(small(*this, e).v, 3);
  }

  Elem parse(std::string_view text) const override {
    auto t = parse_tuple(text, 3, "heisenberg");
    return make(t[0], t[1], t[2]);
  }

  std::vector<Elem> generators() const override { return {make(1, 0, 0), make(0, 1, 0)}; }

  GroupTraits traits() const override {
    GroupTraits t;
    t.finite = false;
    t.abelian = Tri::no;
    t.virtually_abelian = Tri::no;
    t.torsion = Tri::no;
    t.generalized_dicyclic = Tri::no;
    t.generalized_dihedral = Tri::no;
    return t;
  }

  bool has_canonical_subgroup() const override { return true; }
  bool canonical_subgroup_contains(const Elem& e) const override {
    const auto& u = small(*this, e).v;
    return u[0] == 0 && u[1] == 0;
  }
  std::optional<uint64_t> canonical_subgroup_index() const override {
    return std::nullopt;  // the center has infinite index
  }
  std::string canonical_subgroup_name() const override { return "center"; }

private:
  Elem make(int64_t x, int64_t y, int64_t z) const {
    return Elem(this, SmallRep{{x, y, z}});
  }
};

class ZdGroup final : public Group {
public:
  explicit ZdGroup(uint32_t d) : Group("zd:" + std::to_string(d)), d_(d) {
    if (d < 1 || d > 3) throw ArgumentError("zd supports dimension 1..3");
  }

  std::optional<uint64_t> order() const override { return std::nullopt; }
  Elem identity() const override { return Elem(this, SmallRep{}); }

  Elem mul(const Elem& a, const Elem& b) const override {
    const auto& u = small(*this, a).v;
    const auto& v = small(*this, b).v;
    return Elem(this, SmallRep{{u[0] + v[0], u[1] + v[1], u[2] + v[2]}});
  }

  Elem inv(const Elem& a) const override {
    const auto& u = small(*this, a).v;
    return Elem(this, SmallRep{{-u[0], -u[1], -u[2]}});
  }

  std::string print(const Elem& e) const override {
    return small_tuple_name(small(*this, e).v, d_);
  }

  Elem parse(std::string_view text) const override {
    auto t = parse_tuple(text, d_, spec_);
    return Elem(this, SmallRep{t});
  }

  std::vector<Elem> generators() const override {
    std::vector<Elem> out;
    for (uint32_t i = 0; i < d_; ++i) {
      SmallRep r;
      r.v[i] = 1;
      out.push_back(Elem(this, r));
    }
    return out;
  }

  GroupTraits traits() const override {
    GroupTraits t;
    t.finite = false;
    t.abelian = Tri::yes;
    t.virtually_abelian = Tri::yes;
    t.torsion = Tri::no;
    t.generalized_dicyclic = Tri::no;
    t.generalized_dihedral = Tri::no;
    return t;
  }

  bool has_canonical_subgroup() const override { return true; }
  bool canonical_subgroup_contains(const Elem& e) const override {
    return (small(*this, e).v[0] & 1) == 0;
  }
  std::optional<uint64_t> canonical_subgroup_index() const override { return 2; }
  std::string canonical_subgroup_name() const override {
    return "even_first_coordinate";
  }

private:
  uint32_t d_;
};

class InfiniteDihedralGroup final : public Group {
public:
  InfiniteDihedralGroup() : Group("dinf") {}

  std::optional<uint64_t> order() const override { return std::nullopt; }
  Elem identity() const override { return make(0, 0); }

  Elem mul(const Elem& a, const Elem& b) const override {
    const auto& u = small(*this, a).v;
    const auto& v = small(*this, b).v;
    return make(u[0] + (u[1] ? -v[0] : v[0]), u[1] ^ v[1]);
  }

  Elem inv(const Elem& a) const override {
    const auto& u = small(*this, a).v;
    return u[1] ? make(u[0], 1) : make(-u[0], 0);
  }

  std::string print(const Elem& e) const override {
    const auto& u = small(*this, e).v;
    return small_tuple_name({u[0], u[1], 0}, 2);
  }

  Elem parse(std::string_view text) const override {
    auto t = parse_tuple(text, 2, "dinf");
    if (t[1] != 0 && t[1] != 1)
      throw ArgumentError("dinf flip coordinate must be 0 or 1");
    return make(t[0], t[1]);
  }

  // Two adjacent reflections; their product is the unit translation.
  std::vector<Elem> generators() const override { return {make(0, 1), make(1, 1)}; }

  GroupTraits traits() const override {
    GroupTraits t;
    t.finite = false;
    t.abelian = Tri::no;
    t.virtually_abelian = Tri::yes;
    t.torsion = Tri::no;
    t.generalized_dicyclic = Tri::no;
    t.generalized_dihedral = Tri::yes;
    return t;
  }

  bool has_canonical_subgroup() const override { return true; }
  bool canonical_subgroup_contains(const Elem& e) const override {
    return small(*this, e).v[1] == 0;
  }
  std::optional<uint64_t> canonical_subgroup_index() const override { return 2; }
  std::string canonical_subgroup_name() const override { return "rotations"; }

private:
  Elem make(int64_t k, int64_t eps) const { return Elem(this, SmallRep{{k, eps, 0}}); }
};

class FreeGroup final : public Group {
public:
  explicit FreeGroup(uint32_t rank) : Group("free:" + std::to_string(rank)), rank_(rank) {
    if (rank < 1 || rank > 26) throw ArgumentError("free group rank must be 1..26");
  }

  std::optional<uint64_t> order() const override { return std::nullopt; }
  Elem identity() const override { return make(""); }

  Elem mul(const Elem& a, const Elem& b) const override {
    const std::string& u = word(a);
    const std::string& v = word(b);
    size_t i = u.size(), j = 0;
    while (i > 0 && j < v.size() && cancels(u[i - 1], v[j])) {
      --i;
      ++j;
    }
    std::string w;
    w.reserve(i + v.size() - j);
    w.append(u, 0, i);
    w.append(v, j, std::string::npos);
    return make(std::move(w));
  }

  Elem inv(const Elem& a) const override {
    const std::string& u = word(a);
    std::string w;
    w.reserve(u.size());
    for (auto it = u.rbegin(); it != u.rend(); ++it) w += flip(*it);
    return make(std::move(w));
  }

  std::string print(const Elem& e) const override {
    const std::string& u = word(e);
    return u.empty() ? "1" : u;
  }

  Elem parse(std::string_view text) const override {
    if (text == "1") return identity();
    std::string w;
    w.reserve(text.size());
    for (char c : text) {
      char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (low < 'a' || low >= static_cast<char>('a' + rank_))
        throw ArgumentError("letter out of range for " + spec_ + ": \"" +
                            std::string(text) + "\"");
      if (!w.empty() && cancels(w.back(), c))
        w.pop_back();
      else
        w += c;
    }
    return make(std::move(w));
  }

  std::vector<Elem> generators() const override {
    std::vector<Elem> out;
    for (uint32_t i = 0; i < rank_; ++i)
      out.push_back(make(std::string(1, static_cast<char>('a' + i))));
    return out;
  }

  GroupTraits traits() const override {
    GroupTraits t;
    t.finite = false;
    t.abelian = rank_ == 1 ? Tri::yes : Tri::no;
    t.virtually_abelian = rank_ == 1 ? Tri::yes : Tri::no;
    t.torsion = Tri::no;
    t.generalized_dicyclic = Tri::no;
    t.generalized_dihedral = Tri::no;
    return t;
  }

  bool has_canonical_subgroup() const override { return true; }
  bool canonical_subgroup_contains(const Elem& e) const override {
    const std::string& u = word(e);
    for (char c : u)
      if (c != 'a' && c != 'A') return false;
    return true;
  }
  std::optional<uint64_t> canonical_subgroup_index() const override {
    if (rank_ == 1) return 1;
    return std::nullopt;  // infinite index
  }
  std::string canonical_subgroup_name() const override {
    return "first_generator_powers";
  }

private:
  static bool cancels(char x, char y) {
    return x != y && std::tolower(static_cast<unsigned char>(x)) ==
                         std::tolower(static_cast<unsigned char>(y));
  }
  static char flip(char c) {
    return static_cast<char>(std::isupper(static_cast<unsigned char>(c))
                                 ? std::tolower(static_cast<unsigned char>(c))
                                 : std::toupper(static_cast<unsigned char>(c)));
  }

  Elem make(std::string w) const {
    auto d = std::make_shared<WordData>();
    d->hash = std::hash<std::string>{}(w);
    d->word = std::move(w);
    return Elem(this, WordRep{std::move(d)});
  }

  const std::string& word(const Elem& e) const {
    if (e.owner() != this) throw ArgumentError("element belongs to a different group");
    const auto* w = std::get_if<WordRep>(&e.rep());
    if (!w) throw ArgumentError("malformed element");
    return w->d->word;
  }

  uint32_t rank_;
};

class LamplighterGroup final : public Group {
public:
  LamplighterGroup() : Group("lamplighter") {}

  std::optional<uint64_t> order() const override { return std::nullopt; }
  Elem identity() const override { return make(0, {}); }

  Elem mul(const Elem& a, const Elem& b) const override {
    const LampData& u = data(a);
    const LampData& v = data(b);
    // Symmetric difference of u.lit and (v.lit shifted by u.pos).
    std::vector<int64_t> lit;
    lit.reserve(u.lit.size() + v.lit.size());
    size_t i = 0, j = 0;
    while (i < u.lit.size() || j < v.lit.size()) {
      int64_t x = i < u.lit.size() ? u.lit[i] : INT64_MAX;
      int64_t y = j < v.lit.size() ? v.lit[j] + u.pos : INT64_MAX;
      if (x < y) {
        lit.push_back(x);
        ++i;
      } else if (y < x) {
        lit.push_back(y);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    return make(u.pos + v.pos, std::move(lit));
  }

  Elem inv(const Elem& a) const override {
    const LampData& u = data(a);
    std::vector<int64_t> lit;
    lit.reserve(u.lit.size());
    for (int64_t p : u.lit) lit.push_back(p - u.pos);
    return make(-u.pos, std::move(lit));
  }

  std::string print(const Elem& e) const override {
    const LampData& u = data(e);
    std::string s = "(" + std::to_string(u.pos) + ";";
    for (size_t i = 0; i < u.lit.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(u.lit[i]);
    }
    return s + ")";
  }

  Elem parse(std::string_view text) const override {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw ArgumentError("bad lamplighter element \"" + std::string(text) + "\"");
    std::string_view body = text.substr(1, text.size() - 2);
    size_t semi = body.find(';');
    if (semi == std::string_view::npos)
      throw ArgumentError("bad lamplighter element \"" + std::string(text) + "\"");
    int64_t pos = parse_int(body.substr(0, semi));
    std::vector<int64_t> lit;
    std::string_view rest = body.substr(semi + 1);
    size_t at = 0;
    while (at < rest.size()) {
      size_t comma = rest.find(',', at);
      std::string_view tok = comma == std::string_view::npos
                                 ? rest.substr(at)
                                 : rest.substr(at, comma - at);
      lit.push_back(parse_int(tok));
      at = comma == std::string_view::npos ? rest.size() : comma + 1;
    }
    for (size_t i = 1; i < lit.size(); ++i)
      if (lit[i - 1] >= lit[i])
        throw ArgumentError("lamp positions must be strictly increasing");
    return make(pos, std::move(lit));
  }

  std::vector<Elem> generators() const override {
    return {make(1, {}), make(0, {0})};  // shift, lamp at the origin
  }

  GroupTraits traits() const override {
    GroupTraits t;
    t.finite = false;
    t.abelian = Tri::no;
    t.virtually_abelian = Tri::no;
    t.torsion = Tri::no;
    t.generalized_dicyclic = Tri::no;
    t.generalized_dihedral = Tri::no;
    return t;
  }

  bool has_canonical_subgroup() const override { return true; }
  bool canonical_subgroup_contains(const Elem& e) const override {
    return (data(e).pos & 1) == 0;
  }
  std::optional<uint64_t> canonical_subgroup_index() const override { return 2; }
  std::string canonical_subgroup_name() const override { return "even_shift"; }

private:
  Elem make(int64_t pos, std::vector<int64_t> lit) const {
    auto d = std::make_shared<LampData>();
    d->pos = pos;
    d->lit = std::move(lit);
    size_t h = std::hash<int64_t>{}(pos);
    for (int64_t p : d->lit)
      h = h * 0x100000001b3ull + std::hash<int64_t>{}(p);
    d->hash = h;
    return Elem(this, LampRep{std::move(d)});
  }

  const LampData& data(const Elem& e) const {
    if (e.owner() != this) throw ArgumentError("element belongs to a different group");
    const auto* l = std::get_if<LampRep>(&e.rep());
    if (!l) throw ArgumentError("malformed element");
    return *l->d;
  }
};

}  // namespace

GroupPtr heisenberg() { return std::make_shared<HeisenbergGroup>(); }
GroupPtr zd(uint32_t d) { return std::make_shared<ZdGroup>(d); }
GroupPtr infinite_dihedral() { return std::make_shared<InfiniteDihedralGroup>(); }
GroupPtr free_group(uint32_t rank) { return std::make_shared<FreeGroup>(rank); }
GroupPtr lamplighter() { return std::make_shared<LamplighterGroup>(); }

}  // namespace families
}  // namespace grr
