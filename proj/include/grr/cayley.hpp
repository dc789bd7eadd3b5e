#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grr/genset.hpp"
#include "grr/group.hpp"

#include "json.hpp"

namespace grr {

// Triangle count through the connection-set element s: the number of common
// neighbours of the endpoints of any edge with colour {s, s^-1}, computed
// algebraically as |S meet sS| (s in S required).
uint32_t triangle_count(const GenSet& s, const Elem& e);

// Counts for every member of the set, aligned with its order.
struct TriangleCensus {
  std::vector<uint32_t> delta;

  bool operator==(const TriangleCensus&) const = default;
};

TriangleCensus census(const GenSet& s);

nlohmann::json census_json(const GenSet& s, const TriangleCensus& c);

// Concrete (di)graph on group elements. Finite groups default to the whole
// group; infinite groups require a radius and get the induced graph on the
// ball, with boundary vertices flagged (their neighbourhoods are truncated).
struct CayleyGraph {
  const Group* group = nullptr;
  std::vector<Elem> verts;
  std::unordered_map<Elem, int, ElemHash, ElemEq> vert_index;
  bool directed = false;
  bool partial = false;
  int radius = 0;
  std::vector<char> boundary;  // per-vertex flag, only meaningful when partial

  // arcs[v] = (target vertex, connection-set position), sorted by target.
  // Undirected graphs list each edge from both endpoints.
  std::vector<std::vector<std::pair<int, int>>> arcs;

  // colour_class[i] = inverse-pair class of set position i (undirected) or i
  // itself (directed).
  std::vector<int> colour_class;
  int colour_count = 0;

  int n() const { return static_cast<int>(verts.size()); }
  bool adjacent(int u, int v) const;
};

CayleyGraph build_cayley_graph(const GenSet& s, std::optional<int> radius = std::nullopt);
CayleyGraph build_cayley_digraph(const GenSet& s, std::optional<int> radius = std::nullopt);

std::string to_dot(const CayleyGraph& g);
nlohmann::json to_json(const CayleyGraph& g);

}  // namespace grr
