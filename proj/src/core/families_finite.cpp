#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "finite.hpp"
#include "grr/core.hpp"
#include "grr/families.hpp"

namespace grr {
namespace families {

namespace {

constexpr uint32_t max_table_order = 2200;

template <class T, class MulFn, class NameFn>
GroupPtr build_family(std::string spec, const std::vector<T>& domain, MulFn mulfn,
                      NameFn namefn, const std::vector<T>& gens) {
  const uint32_t n = static_cast<uint32_t>(domain.size());
  if (n == 0 || n > max_table_order)
    throw ArgumentError("family size out of range for " + spec);
  std::vector<std::string> names(n);
  std::unordered_map<std::string, uint32_t> idx;
  idx.reserve(n * 2);
  for (uint32_t i = 0; i < n; ++i) {
    names[i] = namefn(domain[i]);
    if (!idx.emplace(names[i], i).second)
      throw ArgumentError("duplicate element in family domain: " + names[i]);
  }
  std::vector<uint32_t> table(static_cast<size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      auto it = idx.find(namefn(mulfn(domain[i], domain[j])));
      if (it == idx.end()) throw ArgumentError("family domain is not closed");
      table[static_cast<size_t>(i) * n + j] = it->second;
    }
  std::vector<uint32_t> gidx;
  gidx.reserve(gens.size());
  for (const T& g : gens) gidx.push_back(idx.at(namefn(g)));
  return std::make_shared<FiniteTableGroup>(std::move(spec), std::move(table), n,
                                            std::move(names), std::move(gidx));
}

std::string tuple_name(const std::vector<uint32_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

using Vec = std::vector<uint32_t>;

Vec vec_add(const Vec& a, const Vec& b, const Vec& mods) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % mods[i];
  return c;
}

Vec vec_neg(const Vec& a, const Vec& mods) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (mods[i] - a[i]) % mods[i];
  return c;
}

std::vector<Vec> vec_domain(const Vec& mods) {
  std::vector<Vec> out;
  Vec cur(mods.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = mods.size();
    while (i > 0) {
      --i;
      if (++cur[i] < mods[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (mods.empty()) return out;
  }
}

void check_mods(const Vec& mods, const std::string& spec) {
  if (mods.empty()) throw ArgumentError("at least one modulus required for " + spec);
  uint64_t n = 1;
  for (uint32_t m : mods) {
    if (m == 0) throw ArgumentError("zero modulus in " + spec);
    n *= m;
    if (n > max_table_order) throw ArgumentError("order too large for " + spec);
  }
}

// Element a*x^e of a group A + Ax; the family supplies the twisted product.
struct Ext {
  Vec a;
  uint32_t e;
};

// Permutations stored as image vectors. Composition acts left-to-right:
// (p * q)(x) = q[p[x]], matching word evaluation g_{l1} ... g_{lk} where each
// letter acts on the right.
using Perm = std::vector<uint32_t>;

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (uint32_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    uint32_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

GroupPtr perm_closure(std::string spec, const std::vector<Perm>& gens, bool word_names,
                      const std::string& letters, uint32_t max_order) {
  if (gens.empty()) throw ArgumentError("no permutation generators for " + spec);
  const size_t pts = gens[0].size();
  for (const Perm& p : gens) {
    if (p.size() != pts) throw ArgumentError("permutation degree mismatch in " + spec);
    std::vector<char> seen(pts, 0);
    for (uint32_t v : p) {
      if (v >= pts || seen[v]) throw ArgumentError("not a permutation in " + spec);
      seen[v] = 1;
    }
  }
  if (word_names && letters.size() < gens.size())
    throw ArgumentError("not enough letters to name generators of " + spec);

  Perm id(pts);
  std::iota(id.begin(), id.end(), 0);

  auto key = [](const Perm& p) {
    std::string k;
    k.reserve(p.size() * 2);
    for (uint32_t v : p) {
      k += static_cast<char>(v & 0xff);
      k += static_cast<char>(v >> 8);
    }
    return k;
  };

  std::vector<Perm> elems{id};
  std::vector<std::string> words{"1"};
  std::unordered_map<std::string, uint32_t> index{{key(id), 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm nxt = perm_mul(elems[head], gens[gi]);
      std::string k = key(nxt);
      if (index.emplace(k, static_cast<uint32_t>(elems.size())).second) {
        if (elems.size() >= max_order)
          throw ArgumentError("permutation closure exceeds order budget in " + spec);
        std::string w = words[head] == "1" ? "" : words[head];
        w += letters[gi];
        elems.push_back(std::move(nxt));
        words.push_back(std::move(w));
      }
    }
  }

  const uint32_t n = static_cast<uint32_t>(elems.size());
  if (n > max_table_order) throw ArgumentError("group too large for a table: " + spec);
  std::vector<std::string> names(n);
  for (uint32_t i = 0; i < n; ++i) names[i] = word_names ? words[i] : cycle_name(elems[i]);
  std::vector<uint32_t> table(static_cast<size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = index.at(key(perm_mul(elems[i], elems[j])));
  std::vector<uint32_t> gidx;
  for (const Perm& g : gens) gidx.push_back(index.at(key(g)));
  return std::make_shared<FiniteTableGroup>(std::move(spec), std::move(table), n,
                                            std::move(names), std::move(gidx));
}

// Evaluates a relator word over the declared generators; lowercase letter k
// means generator k, uppercase its inverse.
Elem eval_word(const Group& g, const std::string& word) {
  std::vector<Elem> gens = g.generators();
  Elem acc = g.identity();
  for (char c : word) {
    bool lower = c >= 'a' && c <= 'z';
    size_t i = lower ? static_cast<size_t>(c - 'a') : static_cast<size_t>(c - 'A');
    if (i >= gens.size()) throw ArgumentError("relator letter out of range");
    acc = g.mul(acc, lower ? gens[i] : g.inv(gens[i]));
  }
  return acc;
}

void check_relations(const GroupPtr& g, const std::vector<std::string>& relators,
                     uint64_t expected_order) {
  if (g->order() != expected_order)
    throw Error(Status::internal, g->spec() + ": unexpected order");
  for (const std::string& r : relators)
    if (!g->is_identity(eval_word(*g, r)))
      throw Error(Status::internal, g->spec() + ": relator " + r + " is not satisfied");
}

}  // namespace

GroupPtr cyclic(uint32_t n) {
  if (n == 0) throw ArgumentError("cyclic group needs n >= 1");
  check_mods({n}, "cyclic");
  std::vector<uint32_t> dom(n);
  std::iota(dom.begin(), dom.end(), 0);
  std::vector<uint32_t> gens;
  if (n > 1) gens.push_back(1);
  return build_family(
      "cyclic:" + std::to_string(n), dom,
      [n](uint32_t a, uint32_t b) { return (a + b) % n; },
      [](uint32_t a) { return std::to_string(a); }, gens);
}

GroupPtr abelian(const std::vector<uint32_t>& mods) {
  check_mods(mods, "abelian");
  std::string spec = "abelian:";
  for (size_t i = 0; i < mods.size(); ++i)
    spec += (i ? "," : "") + std::to_string(mods[i]);
  std::vector<Vec> gens;
  for (size_t i = 0; i < mods.size(); ++i) {
    if (mods[i] == 1) continue;
    Vec u(mods.size(), 0);
    u[i] = 1;
    gens.push_back(u);
  }
  return build_family(
      std::move(spec), vec_domain(mods),
      [&mods](const Vec& a, const Vec& b) { return vec_add(a, b, mods); }, tuple_name,
      gens);
}

GroupPtr elementary2(uint32_t rank) {
  if (rank == 0 || rank > 11) throw ArgumentError("elementary2 rank must be 1..11");
  auto g = abelian(Vec(rank, 2));
  // Same table, family-specific spec string.
  const auto* t = FiniteTableGroup::cast(*g);
  std::vector<uint32_t> table;
  table.reserve(static_cast<size_t>(t->size()) * t->size());
  for (uint32_t i = 0; i < t->size(); ++i)
    for (uint32_t j = 0; j < t->size(); ++j) table.push_back(t->idx_mul(i, j));
  std::vector<std::string> names;
  for (uint32_t i = 0; i < t->size(); ++i) names.push_back(t->print(t->at(i)));
  return std::make_shared<FiniteTableGroup>("elementary2:" + std::to_string(rank),
                                            std::move(table), t->size(), std::move(names),
                                            t->gen_indices());
}

GroupPtr generalized_dihedral(const std::vector<uint32_t>& mods) {
  check_mods(mods, "gendihedral");
  std::string spec = "gendihedral:";
  for (size_t i = 0; i < mods.size(); ++i)
    spec += (i ? "," : "") + std::to_string(mods[i]);
  std::vector<Ext> dom;
  for (uint32_t e = 0; e < 2; ++e)
    for (const Vec& v : vec_domain(mods)) dom.push_back({v, e});
  auto mul = [&mods](const Ext& p, const Ext& q) {
    // (a x^e)(b x^f) = a sigma_e(b) x^(e+f); x acts by inversion.
    Vec b = p.e ? vec_neg(q.a, mods) : q.a;
    return Ext{vec_add(p.a, b, mods), (p.e + q.e) & 1u};
  };
  auto name = [](const Ext& p) {
    return (p.e ? std::string("f") : std::string("t")) + tuple_name(p.a);
  };
  std::vector<Ext> gens;
  for (size_t i = 0; i < mods.size(); ++i) {
    if (mods[i] == 1) continue;
    Vec u(mods.size(), 0);
    u[i] = 1;
    gens.push_back({u, 0});
  }
  gens.push_back({Vec(mods.size(), 0), 1});
  return build_family(std::move(spec), dom, mul, name, gens);
}

GroupPtr dihedral(uint32_t order) {
  if (order < 2 || order % 2) throw ArgumentError("dihedral order must be even");
  auto g = generalized_dihedral({order / 2});
  const auto* t = FiniteTableGroup::cast(*g);
  std::vector<uint32_t> table;
  table.reserve(static_cast<size_t>(t->size()) * t->size());
  for (uint32_t i = 0; i < t->size(); ++i)
    for (uint32_t j = 0; j < t->size(); ++j) table.push_back(t->idx_mul(i, j));
  std::vector<std::string> names;
  for (uint32_t i = 0; i < t->size(); ++i) names.push_back(t->print(t->at(i)));
  return std::make_shared<FiniteTableGroup>("dihedral:" + std::to_string(order),
                                            std::move(table), t->size(), std::move(names),
                                            t->gen_indices());
}

namespace {

// Shared twisted product for generalized dicyclic families over A = prod mods
// with x^2 = y (the involution with first coordinate mods[0]/2):
// (a x^e)(b x^f) = a sigma_f... see mul below; convention x b x^-1 = b^-1.
struct DicMul {
  const Vec& mods;
  Vec y;
  explicit DicMul(const Vec& m) : mods(m), y(m.size(), 0) { y[0] = m[0] / 2; }
  Ext operator()(const Ext& p, const Ext& q) const {
    // (a x^e)(b x^f) = (a sigma_e(b) + [e&f] y) x^(e xor f)
    Vec b = p.e ? vec_neg(q.a, mods) : q.a;
    Vec sum = vec_add(p.a, b, mods);
    if (p.e & q.e) sum = vec_add(sum, y, mods);
    return Ext{sum, (p.e + q.e) & 1u};
  }
};

}  // namespace

GroupPtr generalized_dicyclic(const std::vector<uint32_t>& mods) {
  check_mods(mods, "gendicyclic");
  if (mods[0] % 2) throw ArgumentError("gendicyclic needs an even first modulus");
  std::string spec = "gendicyclic:";
  for (size_t i = 0; i < mods.size(); ++i)
    spec += (i ? "," : "") + std::to_string(mods[i]);
  std::vector<Ext> dom;
  for (uint32_t e = 0; e < 2; ++e)
    for (const Vec& v : vec_domain(mods)) dom.push_back({v, e});
  auto name = [](const Ext& p) {
    return (p.e ? std::string("x") : std::string("t")) + tuple_name(p.a);
  };
  std::vector<Ext> gens;
  for (size_t i = 0; i < mods.size(); ++i) {
    if (mods[i] == 1) continue;
    Vec u(mods.size(), 0);
    u[i] = 1;
    gens.push_back({u, 0});
  }
  gens.push_back({Vec(mods.size(), 0), 1});
  return build_family(std::move(spec), dom, DicMul(mods), name, gens);
}

GroupPtr quaternion8() {
  Vec mods{4};
  std::vector<Ext> dom;
  for (uint32_t e = 0; e < 2; ++e)
    for (const Vec& v : vec_domain(mods)) dom.push_back({v, e});
  // i = t(1), j = x(0); k = ij = x(3).
  auto name = [](const Ext& p) -> std::string {
    static const char* plain[4] = {"1", "i", "-1", "-i"};
    static const char* twisted[4] = {"j", "-k", "-j", "k"};
    return p.e ? twisted[p.a[0]] : plain[p.a[0]];
  };
  std::vector<Ext> gens{{Vec{1}, 0}, {Vec{0}, 1}};
  auto g = build_family("q8", dom, DicMul(mods), name, gens);
  // i^4 = 1, i^2 j^2 = 1, j^-1 i j i = 1.
  check_relations(g, {"aaaa", "aabb", "Baba"}, 8);
  return g;
}

GroupPtr alternating4() {
  // Generated by (1 2)(3 4) and (1 2 3).
  std::vector<Perm> gens{{1, 0, 3, 2}, {1, 2, 0, 3}};
  auto g = perm_closure("a4", gens, false, "", 64);
  check_relations(g, {"aa", "bbb", "ababab"}, 12);
  return g;
}

GroupPtr symmetric(uint32_t n) {
  if (n < 2 || n > 6) throw ArgumentError("sym supports n = 2..6");
  std::vector<Perm> gens;
  Perm t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (n > 2) {
    Perm c(n);
    for (uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  uint32_t fact = 1;
  for (uint32_t i = 2; i <= n; ++i) fact *= i;
  auto g = perm_closure("sym:" + std::to_string(n), gens, false, "", fact + 1);
  if (g->order() != fact) throw Error(Status::internal, "sym closure has wrong order");
  return g;
}

namespace {

struct Pauli {
  uint32_t k;  // phase i^k
  uint32_t x, z;
};

struct PauliTwo {
  uint32_t s;  // sign (-1)^s
  uint32_t x1, z1, x2, z2;
};

std::string pauli_base(uint32_t x, uint32_t z) {
  if (!x && !z) return "I";
  if (x && !z) return "X";
  if (!x && z) return "Z";
  return "XZ";
}

}  // namespace

GroupPtr pauli16() {
  std::vector<Pauli> dom;
  for (uint32_t k = 0; k < 4; ++k)
    for (uint32_t x = 0; x < 2; ++x)
      for (uint32_t z = 0; z < 2; ++z) dom.push_back({k, x, z});
  auto mul = [](const Pauli& p, const Pauli& q) {
    // (i^k X^x Z^z)(i^k' X^x' Z^z') picks up (-1)^(z x') moving Z past X.
    return Pauli{(p.k + q.k + 2 * (p.z & q.x)) % 4, p.x ^ q.x, p.z ^ q.z};
  };
  auto name = [](const Pauli& p) {
    static const char* phase[4] = {"", "i", "-", "-i"};
    return std::string(phase[p.k]) + pauli_base(p.x, p.z);
  };
  // a = X, b = Y = iXZ, c = Z.
  std::vector<Pauli> gens{{0, 1, 0}, {1, 1, 1}, {0, 0, 1}};
  auto g = build_family("pauli16", dom, mul, name, gens);
  // a^2 = b^2 = c^2 = 1, abc = bca, abc = cab.
  check_relations(g, {"aa", "bb", "cc", "abcACB", "abcBAC"}, 16);
  return g;
}

GroupPtr modular16() {
  struct M {
    uint32_t i, j;
  };
  std::vector<M> dom;
  for (uint32_t j = 0; j < 2; ++j)
    for (uint32_t i = 0; i < 8; ++i) dom.push_back({i, j});
  auto mul = [](const M& p, const M& q) {
    return M{(p.i + q.i * (p.j ? 5u : 1u)) % 8, p.j ^ q.j};
  };
  auto name = [](const M& p) {
    std::string s = p.i ? "a" + std::to_string(p.i) : (p.j ? "" : "1");
    if (p.j) s += "b";
    return s;
  };
  std::vector<M> gens{{1, 0}, {0, 1}};
  auto g = build_family("modular16", dom, mul, name, gens);
  check_relations(g, {"aaaaaaaa", "bb", "BabAAAAA"}, 16);  // b^-1 a b = a^5
  return g;
}

GroupPtr d4_central_product() {
  std::vector<PauliTwo> dom;
  for (uint32_t s = 0; s < 2; ++s)
    for (uint32_t x1 = 0; x1 < 2; ++x1)
      for (uint32_t z1 = 0; z1 < 2; ++z1)
        for (uint32_t x2 = 0; x2 < 2; ++x2)
          for (uint32_t z2 = 0; z2 < 2; ++z2) dom.push_back({s, x1, z1, x2, z2});
  auto mul = [](const PauliTwo& p, const PauliTwo& q) {
    return PauliTwo{p.s ^ q.s ^ (p.z1 & q.x1) ^ (p.z2 & q.x2), p.x1 ^ q.x1, p.z1 ^ q.z1,
                    p.x2 ^ q.x2, p.z2 ^ q.z2};
  };
  auto name = [](const PauliTwo& p) {
    return (p.s ? std::string("-") : std::string()) + pauli_base(p.x1, p.z1) + "." +
           pauli_base(p.x2, p.z2);
  };
  std::vector<PauliTwo> gens{{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                             {0, 0, 0, 0, 1}};
  auto g = build_family("d4od4", dom, mul, name, gens);
  // Each factor <X, Z> is dihedral of order 8; the two factors commute and
  // share the central sign: (XZ)^2 = -I in both.
  check_relations(g,
                  {"aa", "bb", "cc", "dd", "abababab", "cdcdcdcd", "acAC", "adAD", "bcBC",
                   "bdBD", "ababcdcd"},
                  32);
  return g;
}

GroupPtr presented16a() {
  // <a,b | a^4 = b^4 = (ab)^2 = (ab^-1)^2 = 1>, realized by its regular
  // representation (derived offline by coset enumeration, frozen here).
  std::vector<Perm> gens{
      {1, 2, 3, 0, 14, 9, 13, 6, 4, 12, 8, 7, 15, 11, 10, 5},
      {4, 7, 10, 13, 5, 6, 0, 9, 1, 8, 12, 2, 11, 15, 3, 14},
  };
  auto g = perm_closure("presented16a", gens, true, "ab", 32);
  check_relations(g, {"aaaa", "bbbb", "abab", "aBaB"}, 16);
  return g;
}

GroupPtr presented16b() {
  // <a,b,c | a^4 = b^4 = c^4 = (ba)^2 = (ba^-1)^2 = (bc)^2 = (bc^-1)^2 = 1,
  //          a^2 c^-2 = a^2 b^-2 = c a c^-1 a^-1 = 1>.
  std::vector<Perm> gens{
      {1, 2, 3, 0, 8, 9, 12, 13, 5, 4, 14, 15, 7, 6, 11, 10},
      {4, 8, 5, 9, 2, 0, 10, 11, 3, 1, 7, 6, 14, 15, 13, 12},
      {6, 12, 7, 13, 10, 11, 2, 0, 14, 15, 5, 4, 3, 1, 9, 8},
  };
  auto g = perm_closure("presented16b", gens, true, "abc", 32);
  check_relations(g,
                  {"aaaa", "bbbb", "cccc", "baba", "bAbA", "bcbc", "bCbC", "aaCC", "aaBB",
                   "caCA"},
                  16);
  return g;
}

GroupPtr presented32() {
  // <a,b,c | a^4 = b^4 = c^4 = (ab)^2 = (ab^-1)^2 = (ac)^2 = (ac^-1)^2 = 1,
  //          (bc)^2 = (bc^-1)^2 = a^2 b^2 c^2 = 1>.
  std::vector<Perm> gens{
      {1,  2,  3,  0,  25, 17, 24, 27, 18, 26, 6,  4,  9,  7,  30, 31,
       11, 8,  5,  10, 13, 12, 14, 15, 19, 16, 21, 20, 22, 23, 28, 29},
      {4,  10, 16, 24, 5,  6,  0,  28, 19, 29, 17, 1,  30, 31, 9,  7,
       8,  11, 25, 2,  14, 15, 13, 12, 18, 3,  22, 23, 21, 20, 27, 26},
      {7,  12, 20, 26, 14, 21, 29, 8,  9,  0,  22, 31, 18, 1,  19, 4,
       28, 27, 13, 15, 5,  2,  25, 10, 30, 23, 17, 3,  6,  16, 11, 24},
  };
  auto g = perm_closure("presented32", gens, true, "abc", 64);
  check_relations(g,
                  {"aaaa", "bbbb", "cccc", "abab", "aBaB", "acac", "aCaC", "bcbc", "bCbC",
                   "aabbcc"},
                  32);
  return g;
}

GroupPtr heisenberg_mod(uint32_t p) {
  if (p < 2 || p > 13) throw ArgumentError("heisenberg:p supports p = 2..13");
  struct H {
    uint32_t x, y, z;
  };
  std::vector<H> dom;
  for (uint32_t x = 0; x < p; ++x)
    for (uint32_t y = 0; y < p; ++y)
      for (uint32_t z = 0; z < p; ++z) dom.push_back({x, y, z});
  auto mul = [p](const H& a, const H& b) {
    return H{(a.x + b.x) % p, (a.y + b.y) % p, (a.z + b.z + a.x * b.y) % p};
  };
  auto name = [](const H& a) { return tuple_name({a.x, a.y, a.z}); };
  std::vector<H> gens{{1, 0, 0}, {0, 1, 0}};
  return build_family("heisenberg:" + std::to_string(p), dom, mul, name, gens);
}

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::string spec) {
  const auto* ta = FiniteTableGroup::cast(*a);
  const auto* tb = FiniteTableGroup::cast(*b);
  if (!ta || !tb)
    throw UnsupportedError("direct products require finite table groups");
  const uint32_t na = ta->size(), nb = tb->size();
  if (static_cast<uint64_t>(na) * nb > max_table_order)
    throw ArgumentError("direct product too large");
  const uint32_t n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (uint32_t i = 0; i < na; ++i)
    for (uint32_t j = 0; j < nb; ++j)
      names.push_back("(" + ta->print(ta->at(i)) + "," + tb->print(tb->at(j)) + ")");
  std::vector<uint32_t> table(static_cast<size_t>(n) * n);
  for (uint32_t i1 = 0; i1 < na; ++i1)
    for (uint32_t j1 = 0; j1 < nb; ++j1)
      for (uint32_t i2 = 0; i2 < na; ++i2)
        for (uint32_t j2 = 0; j2 < nb; ++j2) {
          uint32_t u = i1 * nb + j1, v = i2 * nb + j2;
          table[static_cast<size_t>(u) * n + v] =
              ta->idx_mul(i1, i2) * nb + tb->idx_mul(j1, j2);
        }
  std::vector<uint32_t> gens;
  for (uint32_t g : ta->gen_indices()) gens.push_back(g * nb + tb->idx_identity());
  for (uint32_t g : tb->gen_indices()) gens.push_back(ta->idx_identity() * nb + g);
  if (spec.empty()) spec = a->spec() + "x" + b->spec();
  return std::make_shared<FiniteTableGroup>(std::move(spec), std::move(table), n,
                                            std::move(names), std::move(gens));
}

GroupPtr from_permutations(const std::vector<std::vector<uint32_t>>& gens,
                           const std::string& letters, uint32_t max_order) {
  bool words = !letters.empty() && letters.size() >= gens.size();
  return perm_closure("permgroup", gens, words, words ? letters : "", max_order);
}

GroupPtr from_table(const std::vector<std::vector<uint32_t>>& table,
                    std::vector<std::string> names, std::vector<uint32_t> gens) {
  const uint32_t n = static_cast<uint32_t>(table.size());
  std::vector<uint32_t> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (row.size() != n) throw ArgumentError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<FiniteTableGroup>("table", std::move(flat), n, std::move(names),
                                            std::move(gens));
}

}  // namespace families
}  // namespace grr
