#include "grr/cayley.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <sstream>

#include "grr/core.hpp"

namespace grr {

namespace {
constexpr size_t max_vertices = 500000;
}

uint32_t triangle_count(const GenSet& s, const Elem& e) {
  if (!s.contains(e)) return 0;
  const Group& g = s.group();
  Elem einv = g.inv(e);
  uint32_t count = 0;
  for (const Elem& u : s.elems())
    if (s.contains(g.mul(einv, u))) ++count;
  return count;
}

TriangleCensus census(const GenSet& s) {
  TriangleCensus c;
  c.delta.reserve(s.size());
  for (const Elem& e : s.elems()) c.delta.push_back(triangle_count(s, e));
  return c;
}

nlohmann::json census_json(const GenSet& s, const TriangleCensus& c) {
  nlohmann::json entries = nlohmann::json::array();
  auto names = s.printed();
  for (size_t i = 0; i < s.size(); ++i)
    entries.push_back({{"s", names[i]}, {"delta", c.delta[i]}});
  return {{"group", s.group().spec()}, {"size", s.size()}, {"entries", entries}};
}

namespace {

CayleyGraph build(const GenSet& s, std::optional<int> radius, bool directed) {
  const Group& g = s.group();
  if (!directed && !s.symmetric())
    throw ArgumentError("undirected Cayley graphs need a symmetric connection set");
  if (!g.finite() && !radius)
    throw ArgumentError("infinite groups need --radius for graph construction");

  CayleyGraph cg;
  cg.group = &g;
  cg.directed = directed;
  cg.partial = radius.has_value();
  cg.radius = radius.value_or(0);

  // Steps for the vertex scope: S and its inverses (weak connectivity).
  std::vector<Elem> steps = s.elems();
  if (!s.symmetric())
    for (const Elem& e : s.elems()) steps.push_back(g.inv(e));

  std::vector<int> dist;
  if (radius) {
    if (*radius < 0) throw ArgumentError("radius must be non-negative");
    cg.verts.push_back(g.identity());
    cg.vert_index.emplace(g.identity(), 0);
    dist.push_back(0);
    for (size_t head = 0; head < cg.verts.size(); ++head) {
      if (dist[head] == *radius) continue;
      Elem v = cg.verts[head];
      for (const Elem& e : steps) {
        Elem w = g.mul(v, e);
        if (cg.vert_index.emplace(w, static_cast<int>(cg.verts.size())).second) {
          cg.verts.push_back(std::move(w));
          dist.push_back(dist[head] + 1);
          if (cg.verts.size() > max_vertices)
            throw ArgumentError("ball too large; lower the radius");
        }
      }
    }
    cg.boundary.resize(cg.verts.size(), 0);
    for (size_t i = 0; i < cg.verts.size(); ++i)
      if (dist[i] == *radius) cg.boundary[i] = 1;
  } else {
    const std::vector<Elem>& all = g.elements();
    if (all.size() > max_vertices) throw ArgumentError("group too large to materialize");
    cg.verts = all;
    for (size_t i = 0; i < all.size(); ++i)
      cg.vert_index.emplace(all[i], static_cast<int>(i));
    cg.boundary.assign(all.size(), 0);
  }

  if (directed) {
    cg.colour_class.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) cg.colour_class[i] = static_cast<int>(i);
    cg.colour_count = static_cast<int>(s.size());
  } else {
    cg.colour_class.assign(s.size(), -1);
    auto classes = s.inverse_pair_classes();
    for (size_t c = 0; c < classes.size(); ++c) {
      cg.colour_class[classes[c].first] = static_cast<int>(c);
      cg.colour_class[classes[c].second] = static_cast<int>(c);
    }
    cg.colour_count = static_cast<int>(classes.size());
  }

  cg.arcs.resize(cg.verts.size());
  for (size_t i = 0; i < cg.verts.size(); ++i) {
    for (size_t j = 0; j < s.size(); ++j) {
      Elem w = g.mul(cg.verts[i], s[j]);
      auto it = cg.vert_index.find(w);
      if (it != cg.vert_index.end())
        cg.arcs[i].emplace_back(it->second, static_cast<int>(j));
    }
    std::sort(cg.arcs[i].begin(), cg.arcs[i].end());
  }
  return cg;
}

}  // namespace

bool CayleyGraph::adjacent(int u, int v) const {
  const auto& a = arcs[u];
  auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, INT_MIN));
  return it != a.end() && it->first == v;
}

CayleyGraph build_cayley_graph(const GenSet& s, std::optional<int> radius) {
  return build(s, radius, false);
}

CayleyGraph build_cayley_digraph(const GenSet& s, std::optional<int> radius) {
  return build(s, radius, true);
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream out;
  out << (g.directed ? "digraph" : "graph") << " cayley {\n";
  for (int i = 0; i < g.n(); ++i) {
    out << "  v" << i << " [label=\"" << dot_escape(g.group->print(g.verts[i])) << '"';
    if (g.partial && g.boundary[i]) out << " style=dashed";
    out << "]\n";
  }
  const char* arrow = g.directed ? " -> " : " -- ";
  for (int u = 0; u < g.n(); ++u)
    for (auto [v, j] : g.arcs[u]) {
      if (!g.directed && v < u) continue;
      out << "  v" << u << arrow << 'v' << v << " [colorscheme=paired12 color="
          << (g.colour_class[j] % 12) + 1 << "]\n";
    }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const CayleyGraph& g) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Elem& v : g.verts) verts.push_back(g.group->print(v));
  nlohmann::json edges = nlohmann::json::array();
  for (int u = 0; u < g.n(); ++u)
    for (auto [v, j] : g.arcs[u]) {
      if (!g.directed && v < u) continue;
      edges.push_back({u, v, g.colour_class[j]});
    }
  nlohmann::json out{{"group", g.group->spec()},
                     {"directed", g.directed},
                     {"partial", g.partial},
                     {"colour_count", g.colour_count},
                     {"vertices", verts},
                     {g.directed ? "arcs" : "edges", edges}};
  if (g.partial) {
    out["radius"] = g.radius;
    nlohmann::json b = nlohmann::json::array();
    for (int i = 0; i < g.n(); ++i)
      if (g.boundary[i]) b.push_back(i);
    out["boundary"] = b;
  }
  return out;
}

}  // namespace grr
