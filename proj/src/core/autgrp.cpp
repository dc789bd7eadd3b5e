#include "grr/autgrp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

#include "grr/core.hpp"

namespace grr {

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

// Left-to-right composition: apply a, then b.
Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

// Stabilizer chain over the full vertex sequence `base` (deterministic
// incremental Schreier-Sims). gen_level_[i] is the first base index moved by
// gens_[i]; the stabilizer of base[0..k-1] is generated by the gens with
// gen_level >= k.
class StabChain {
 public:
  StabChain(int n, std::vector<int> base) : n_(n), base_(std::move(base)) {
    levels_.resize(base_.size());
  }

  bool add(const Perm& g) { return update(0, g); }

  const std::vector<Perm>& gens() const { return gens_; }
  const std::vector<int>& gen_levels() const { return gen_level_; }

  BigUint order_from(size_t level) const {
    BigUint out(1);
    for (size_t j = level; j < levels_.size(); ++j)
      if (!levels_[j].orb.empty() && levels_[j].orb.size() > 1)
        out.mul_u64(levels_[j].orb.size());
    return out;
  }

  // Marks the orbit of `start` under the stabilizer of base[0..k-1].
  void mark_orbit(std::vector<char>& covered, int start, int k) const {
    std::vector<int> queue{start};
    if (covered[start]) return;
    covered[start] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < gens_.size(); ++i) {
        if (gen_level_[i] < k) continue;
        int w = gens_[i][v];
        if (!covered[w]) {
          covered[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

 private:
  struct Level {
    std::vector<int> orb;  // orb[0] = base point
    std::vector<int> idx;  // n entries, -1 off orbit
    std::vector<int> parent_pt;
    std::vector<int> parent_gen;
  };

  std::pair<Perm, int> strip(Perm g, int from) const {
    for (int i = from; i < static_cast<int>(base_.size()); ++i) {
      int b = base_[i];
      int w = g[b];
      if (w == b) continue;
      const Level& L = levels_[i];
      if (L.orb.empty() || L.idx[w] < 0) return {std::move(g), i};
      int x = w;
      while (x != b) {
        int a = L.idx[x];
        const Perm& giv = gens_inv_[L.parent_gen[a]];
        for (int v = 0; v < n_; ++v) g[v] = giv[g[v]];
        x = L.parent_pt[a];
      }
    }
    return {std::move(g), static_cast<int>(base_.size())};
  }

  Perm rep_of(const Level& L, int w) const {
    std::vector<int> path;  // gen indices, leaf to root
    int x = w;
    while (x != L.orb[0]) {
      int a = L.idx[x];
      path.push_back(L.parent_gen[a]);
      x = L.parent_pt[a];
    }
    Perm r = identity_perm(n_);
    for (size_t i = path.size(); i-- > 0;) r = compose(r, gens_[path[i]]);
    return r;
  }

  void rebuild_level(int j) {
    Level& L = levels_[j];
    L.orb.assign(1, base_[j]);
    L.idx.assign(n_, -1);
    L.idx[base_[j]] = 0;
    L.parent_pt.assign(1, -1);
    L.parent_gen.assign(1, -1);
    for (size_t head = 0; head < L.orb.size(); ++head) {
      int v = L.orb[head];
      for (size_t i = 0; i < gens_.size(); ++i) {
        if (gen_level_[i] < j) continue;
        int w = gens_[i][v];
        if (L.idx[w] < 0) {
          L.idx[w] = static_cast<int>(L.orb.size());
          L.orb.push_back(w);
          L.parent_pt.push_back(v);
          L.parent_gen.push_back(static_cast<int>(i));
        }
      }
    }
  }

  void closure(int j) {
    rebuild_level(j);
    size_t done = 0;
    while (done < gens_.size()) {
      size_t upto = gens_.size();
      const Level& L = levels_[j];
      for (size_t gi = done; gi < upto; ++gi) {
        if (gen_level_[gi] < j) continue;
        for (size_t a = 0; a < L.orb.size(); ++a) {
          int w = L.orb[a];
          Perm rw = rep_of(L, w);
          int ws = gens_[gi][w];
          Perm sg = compose(compose(rw, gens_[gi]), inverse(rep_of(L, ws)));
          if (!is_identity(sg)) update(j + 1, sg);
        }
      }
      done = upto;
    }
  }

  bool update(int i, Perm g) {
    auto [res, l] = strip(std::move(g), i);
    if (l == static_cast<int>(base_.size())) return false;
    gens_.push_back(res);
    gens_inv_.push_back(inverse(res));
    gen_level_.push_back(l);
    for (int j = l; j >= i; --j) closure(j);
    return true;
  }

  int n_;
  std::vector<int> base_;
  std::vector<Perm> gens_;
  std::vector<Perm> gens_inv_;
  std::vector<int> gen_level_;
  std::vector<Level> levels_;
};

// Structural (automorphism-invariant) vertex colours: iterated refinement on
// degrees, neighbour colours and common-neighbour counts. The connection-set
// colours of the graph are deliberately not used here: automorphisms of the
// underlying (di)graph need not preserve them.
struct AutSearch {
  const CayleyGraph& cg;
  int n;
  bool directed;
  std::vector<std::vector<int>> out, in;
  std::vector<std::vector<int64_t>> out_inv, in_inv;  // aligned edge invariants
  std::vector<int> colour;
  std::vector<int> T;  // target order, T[0] = root
  StabChain chain;
  std::vector<Perm> found;
  std::vector<int> to, from;
  std::vector<int> a_out, a_in;  // per-level assigned-neighbour counts (scratch)

  explicit AutSearch(const CayleyGraph& g, int root)
      : cg(g), n(g.n()), directed(g.directed), chain(0, {}) {
    build_adjacency();
    refine();
    build_order(root);
    chain = StabChain(n, T);
    to.assign(n, -1);
    from.assign(n, -1);
    dfs(0, true);
  }

  void build_adjacency() {
    out.assign(n, {});
    in.assign(n, {});
    for (int v = 0; v < n; ++v)
      for (auto [w, j] : cg.arcs[v]) {
        (void)j;
        out[v].push_back(w);
        if (directed) in[w].push_back(v);
      }
    for (int v = 0; v < n; ++v) {
      std::sort(out[v].begin(), out[v].end());
      std::sort(in[v].begin(), in[v].end());
    }
    if (!directed) in = out;

    auto common = [](const std::vector<int>& a, const std::vector<int>& b) {
      size_t i = 0, j = 0;
      int64_t c = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
          ++i;
        else if (a[i] > b[j])
          ++j;
        else
          ++c, ++i, ++j;
      }
      return c;
    };
    out_inv.assign(n, {});
    in_inv.assign(n, {});
    for (int v = 0; v < n; ++v) {
      out_inv[v].resize(out[v].size());
      for (size_t a = 0; a < out[v].size(); ++a) {
        int u = out[v][a];
        if (!directed) {
          out_inv[v][a] = common(out[v], out[u]);
        } else {
          int64_t c1 = common(out[v], out[u]);
          int64_t c2 = common(in[v], in[u]);
          bool rev = std::binary_search(out[u].begin(), out[u].end(), v);
          out_inv[v][a] = (c1 << 22) | (c2 << 1) | (rev ? 1 : 0);
        }
      }
    }
    if (!directed) {
      in_inv = out_inv;
    } else {
      for (int v = 0; v < n; ++v) in_inv[v].resize(in[v].size());
      for (int v = 0; v < n; ++v)
        for (size_t a = 0; a < out[v].size(); ++a) {
          int u = out[v][a];
          size_t b = std::lower_bound(in[u].begin(), in[u].end(), v) - in[u].begin();
          in_inv[u][b] = out_inv[v][a];
        }
    }
  }

  void refine() {
    colour.assign(n, 0);
    {
      std::map<std::pair<size_t, size_t>, int> key;
      for (int v = 0; v < n; ++v) {
        auto k = std::make_pair(out[v].size(), directed ? in[v].size() : 0);
        auto [it, fresh] = key.emplace(k, static_cast<int>(key.size()));
        (void)fresh;
        colour[v] = it->second;
      }
    }
    size_t classes = 0;
    for (int round = 0; round < n; ++round) {
      std::map<std::vector<int64_t>, int> key;
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int64_t, int64_t>> sig_out, sig_in;
        for (size_t a = 0; a < out[v].size(); ++a)
          sig_out.emplace_back(colour[out[v][a]], out_inv[v][a]);
        std::sort(sig_out.begin(), sig_out.end());
        std::vector<int64_t> sig{colour[v]};
        for (auto& p : sig_out) {
          sig.push_back(p.first);
          sig.push_back(p.second);
        }
        if (directed) {
          for (size_t a = 0; a < in[v].size(); ++a)
            sig_in.emplace_back(colour[in[v][a]], in_inv[v][a]);
          std::sort(sig_in.begin(), sig_in.end());
          sig.push_back(-1);
          for (auto& p : sig_in) {
            sig.push_back(p.first);
            sig.push_back(p.second);
          }
        }
        auto [it, fresh] = key.emplace(std::move(sig), static_cast<int>(key.size()));
        (void)fresh;
        next[v] = it->second;
      }
      colour = std::move(next);
      if (key.size() == classes) break;
      classes = key.size();
    }
  }

  void build_order(int root) {
    T.clear();
    T.reserve(n);
    std::vector<char> placed(n, 0);
    std::vector<int> link(n, 0);  // assigned-neighbour counts
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v) ++class_size[colour[v]];
    auto push = [&](int v) {
      T.push_back(v);
      placed[v] = 1;
      for (int u : out[v]) ++link[u];
      if (directed)
        for (int u : in[v]) ++link[u];
    };
    push(root);
    while (static_cast<int>(T.size()) < n) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || link[v] > link[best] ||
            (link[v] == link[best] &&
             (class_size[colour[v]] < class_size[colour[best]] ||
              (class_size[colour[v]] == class_size[colour[best]] && v < best))))
          best = v;
      }
      push(best);
    }
  }

  bool consistent(int v, int w) const {
    if (colour[w] != colour[v]) return false;
    if (from[w] != -1) return false;
    // Forward requirement: assigned neighbours of v map to neighbours of w.
    int need_out = 0;
    for (int u : out[v])
      if (to[u] != -1) {
        ++need_out;
        if (!std::binary_search(out[w].begin(), out[w].end(), to[u])) return false;
      }
    int have_out = 0;
    for (int t : out[w])
      if (from[t] != -1) ++have_out;
    if (have_out != need_out) return false;
    if (directed) {
      int need_in = 0;
      for (int u : in[v])
        if (to[u] != -1) {
          ++need_in;
          if (!std::binary_search(in[w].begin(), in[w].end(), to[u])) return false;
        }
      int have_in = 0;
      for (int t : in[w])
        if (from[t] != -1) ++have_in;
      if (have_in != need_in) return false;
    }
    return true;
  }

  std::vector<int> candidates(int v) const {
    // Narrowest source list: a mapped neighbour's adjacency, else the colour class.
    const std::vector<int>* src = nullptr;
    std::vector<int> cls;
    for (int u : out[v])
      if (to[u] != -1) {
        const std::vector<int>& l = directed ? in[to[u]] : out[to[u]];
        if (!src || l.size() < src->size()) src = &l;
      }
    if (directed)
      for (int u : in[v])
        if (to[u] != -1) {
          const std::vector<int>& l = out[to[u]];
          if (!src || l.size() < src->size()) src = &l;
        }
    if (!src) {
      for (int w = 0; w < n; ++w)
        if (colour[w] == colour[v]) cls.push_back(w);
      src = &cls;
    }
    std::vector<int> cand;
    for (int w : *src)
      if (consistent(v, w)) cand.push_back(w);
    return cand;
  }

  bool dfs(int k, bool spine) {
    if (k == n) {
      if (!is_identity(to)) {
        Perm phi = to;
        if (chain.add(phi)) found.push_back(std::move(phi));
      }
      return true;
    }
    int v = T[k];
    if (spine) {
      // Identity continuation first, then one representative per orbit of the
      // current known stabilizer of T[0..k-1].
      to[v] = v;
      from[v] = v;
      dfs(k + 1, true);
      to[v] = -1;
      from[v] = -1;

      std::vector<int> cand = candidates(v);
      std::vector<char> covered(n, 0);
      std::vector<int> processed{v};
      size_t marked_at = SIZE_MAX;
      for (int w : cand) {
        if (w == v) continue;
        if (marked_at != chain.gens().size()) {
          std::fill(covered.begin(), covered.end(), 0);
          for (int p : processed) chain.mark_orbit(covered, p, k);
          marked_at = chain.gens().size();
        }
        if (covered[w]) continue;
        to[v] = w;
        from[w] = v;
        dfs(k + 1, false);
        to[v] = -1;
        from[w] = -1;
        processed.push_back(w);
        marked_at = SIZE_MAX;
      }
      return true;
    }
    std::vector<int> cand = candidates(v);
    for (int w : cand) {
      to[v] = w;
      from[w] = v;
      bool ok = dfs(k + 1, false);
      to[v] = -1;
      from[w] = -1;
      if (ok) return true;
    }
    return false;
  }
};

int identity_vertex(const CayleyGraph& g) {
  auto it = g.vert_index.find(g.group->identity());
  if (it == g.vert_index.end())
    throw Error(Status::internal, "graph lacks the identity vertex");
  return it->second;
}

std::string perm_cycles(const CayleyGraph& g, const Perm& p) {
  std::ostringstream out;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out << '(';
    size_t x = i;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << g.group->print(g.verts[x]);
      first = false;
      x = p[x];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

struct EngineResult {
  BigUint aut_order;
  BigUint stab_order;
  std::vector<Perm> gens;        // generators found (full group)
  std::vector<Perm> stab_gens;   // strong generators fixing the root
};

EngineResult run_engine(const CayleyGraph& g, int root) {
  if (g.n() > 2048) throw ArgumentError("vertex budget exceeded (at most ~2000)");
  if (g.n() == 0) throw ArgumentError("empty graph");
  AutSearch s(g, root);
  EngineResult r;
  r.aut_order = s.chain.order_from(0);
  r.stab_order = s.chain.order_from(1);
  r.gens = std::move(s.found);
  for (size_t i = 0; i < s.chain.gens().size(); ++i)
    if (s.chain.gen_levels()[i] >= 1) r.stab_gens.push_back(s.chain.gens()[i]);
  return r;
}

}  // namespace

AutGroup graph_automorphisms(const CayleyGraph& g, std::optional<int> root) {
  int base0 = root ? *root : identity_vertex(g);
  if (base0 < 0 || base0 >= g.n()) throw ArgumentError("root vertex out of range");
  EngineResult r = run_engine(g, base0);
  AutGroup out;
  out.n = g.n();
  if (root) {
    out.generators = std::move(r.stab_gens);
    out.order = r.stab_order;
  } else {
    out.generators = std::move(r.gens);
    out.order = r.aut_order;
  }
  return out;
}

namespace {

RegularityReport verify_regular(const GenSet& s, RegRepr kind) {
  const Group& g = s.group();
  if (!g.finite())
    throw UnsupportedError("regularity verification needs a finite group");
  if (kind == RegRepr::grr && !s.symmetric())
    throw ArgumentError("grr verification needs a symmetric connection set");
  if (!generates(g, s))
    throw ArgumentError("the connection set does not generate the group");

  RegularityReport r;
  r.kind = kind;
  if (kind == RegRepr::orr && !s.bigon_free())
    r.reason = "connection set meets its inverse set (bigons present)";

  CayleyGraph graph =
      kind == RegRepr::grr ? build_cayley_graph(s) : build_cayley_digraph(s);
  EngineResult e = run_engine(graph, identity_vertex(graph));
  r.aut_order = e.aut_order;
  r.stabilizer_order = e.stab_order;
  bool regular = e.stab_order.equals_u64(1);
  r.holds = regular && r.reason.empty();
  if (!regular && !e.stab_gens.empty()) r.witness = perm_cycles(graph, e.stab_gens[0]);
  return r;
}

}  // namespace

RegularityReport verify_grr(const GenSet& s) { return verify_regular(s, RegRepr::grr); }
RegularityReport verify_drr(const GenSet& s) { return verify_regular(s, RegRepr::drr); }
RegularityReport verify_orr(const GenSet& s) { return verify_regular(s, RegRepr::orr); }

ColourPreservationReport colour_preserving_automorphisms(const GenSet& s1,
                                                         const GenSet& s2) {
  const Group& g = s1.group();
  if (&g != &s2.group()) throw ArgumentError("sets belong to different groups");
  if (!g.finite()) throw UnsupportedError("colour checks need a finite group");
  if (!s1.symmetric() || !s2.symmetric())
    throw ArgumentError("colour checks need symmetric sets");
  for (const Elem& e : s1.elems())
    if (!s2.contains(e)) throw ArgumentError("first set must be a subset of the second");
  if (!generates(g, s2)) throw ArgumentError("the connection set does not generate the group");

  CayleyGraph graph = build_cayley_graph(s2);
  EngineResult e = run_engine(graph, identity_vertex(graph));

  ColourPreservationReport rep;
  rep.generators_checked = e.gens.size();
  for (size_t gi = 0; gi < e.gens.size(); ++gi) {
    const Perm& p = e.gens[gi];
    for (int u = 0; u < graph.n(); ++u) {
      const Elem& gu = graph.verts[u];
      const Elem& pu = graph.verts[p[u]];
      for (const Elem& sElem : s1.elems()) {
        int v = graph.vert_index.at(g.mul(gu, sElem));
        int allowed1 = graph.vert_index.at(g.mul(pu, sElem));
        int allowed2 = graph.vert_index.at(g.mul(pu, g.inv(sElem)));
        if (p[v] != allowed1 && p[v] != allowed2) {
          rep.all_preserve = false;
          rep.violation = std::make_tuple(static_cast<int>(gi), u, v);
          return rep;
        }
      }
    }
  }
  return rep;
}

RigidityReport orientation_rigidity_check(const GenSet& s) {
  const Group& g = s.group();
  if (!g.finite()) throw UnsupportedError("rigidity check needs a finite group");
  if (!s.symmetric()) throw ArgumentError("rigidity check needs a symmetric set");
  if (!generates(g, s)) throw ArgumentError("the connection set does not generate the group");

  const std::vector<Elem>& all = g.elements();
  const int n = static_cast<int>(all.size());
  std::unordered_map<Elem, int, ElemHash, ElemEq> idx;
  for (int i = 0; i < n; ++i) idx.emplace(all[i], i);
  const int id = idx.at(g.identity());
  const int m = static_cast<int>(s.size());

  // mul_s[v][j] = index of all[v] * s_j; jinv[j] = position of s_j^-1.
  std::vector<std::vector<int>> mul_s(n, std::vector<int>(m));
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < m; ++j) mul_s[v][j] = idx.at(g.mul(all[v], s[j]));
  std::vector<int> jinv(m);
  for (int j = 0; j < m; ++j) jinv[j] = s.index_of(g.inv(s[j]));

  // Breadth-first vertex order from the identity; each later vertex keeps one
  // parent edge, and all edges among earlier vertices become constraints.
  std::vector<int> order{id}, parent_vertex(n, -1), parent_edge(n, -1), rank(n, -1);
  rank[id] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int j = 0; j < m; ++j) {
      int w = mul_s[v][j];
      if (rank[w] < 0) {
        rank[w] = static_cast<int>(order.size());
        parent_vertex[w] = v;
        parent_edge[w] = j;
        order.push_back(w);
      }
    }
  }

  // check_edges[v] = (u, j) with u earlier than v and u * s_j = v.
  std::vector<std::vector<std::pair<int, int>>> check_edges(n);
  for (int u = 0; u < n; ++u)
    for (int j = 0; j < m; ++j) {
      int v = mul_s[u][j];
      if (rank[u] < rank[v] && !(parent_vertex[v] == u && parent_edge[v] == j))
        check_edges[v].emplace_back(u, j);
    }

  RigidityReport rep;
  uint64_t nodes = 0;
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);

  auto is_translation = [&](int v0) {
    for (int x = 0; x < n; ++x)
      if (phi[x] != idx.at(g.mul(all[v0], all[x]))) return false;
    return true;
  };

  std::function<void(int, int)> walk = [&](int k, int v0) {
    if (++nodes > 20000000)
      throw SearchError("rigidity propagation budget exceeded");
    if (k == n) {
      ++rep.solutions;
      if (!rep.witness && !is_translation(v0)) {
        std::vector<std::pair<std::string, std::string>> w;
        for (int x = 0; x < n; ++x)
          w.emplace_back(g.print(all[x]), g.print(all[phi[x]]));
        rep.witness = std::move(w);
      }
      return;
    }
    int v = order[k];
    int pv = parent_vertex[v], pj = parent_edge[v];
    int base = phi[pv];
    int cands[2] = {mul_s[base][pj], mul_s[base][jinv[pj]]};
    int count = cands[1] == cands[0] ? 1 : 2;
    for (int t = 0; t < count; ++t) {
      int w = cands[t];
      if (used[w]) continue;
      bool ok = true;
      for (auto [u, j] : check_edges[v]) {
        int a = mul_s[phi[u]][j];
        int b = mul_s[phi[u]][jinv[j]];
        if (w != a && w != b) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi[v] = w;
      used[w] = 1;
      walk(k + 1, v0);
      phi[v] = -1;
      used[w] = 0;
    }
  };

  for (int v0 = 0; v0 < n; ++v0) {
    phi[id] = v0;
    used[v0] = 1;
    walk(1, v0);
    phi[id] = -1;
    used[v0] = 0;
  }
  rep.rigid = rep.solutions == static_cast<uint64_t>(n) && !rep.witness;
  return rep;
}

nlohmann::json to_json(const RegularityReport& r) {
  nlohmann::json j{{"mode", to_string(r.kind)},
                   {"holds", r.holds},
                   {"aut_order", r.aut_order.to_string()},
                   {"stabilizer_order", r.stabilizer_order.to_string()}};
  j[std::string("is_") + to_string(r.kind)] = r.holds;
  if (r.witness) j["witness"] = *r.witness;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

nlohmann::json to_json(const RigidityReport& r) {
  nlohmann::json j{{"rigid", r.rigid}, {"solutions", r.solutions}};
  if (r.witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& p : *r.witness) w.push_back({p.first, p.second});
    j["witness"] = w;
  }
  return j;
}

}  // namespace grr
