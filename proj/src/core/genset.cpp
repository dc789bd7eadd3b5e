#include "grr/genset.hpp"

#include <sstream>
#include <unordered_set>

#include "grr/core.hpp"

namespace grr {

GenSet::GenSet(const Group* g, std::vector<Elem> elems) : group_(g) {
  const Elem id = g->identity();
  for (Elem& e : elems) {
    if (e.owner() != g) throw ArgumentError("connection set element from another group");
    if (e == id) throw ArgumentError("the identity cannot join a connection set");
    if (index_.count(e)) continue;
    index_.emplace(e, static_cast<int>(elems_.size()));
    elems_.push_back(std::move(e));
  }
  if (elems_.empty()) throw ArgumentError("empty connection set");
  symmetric_ = true;
  for (const Elem& e : elems_)
    if (!index_.count(group_->inv(e))) {
      symmetric_ = false;
      break;
    }
}

GenSet GenSet::symmetrized(const Group& g, const std::vector<Elem>& elems) {
  std::vector<Elem> closed;
  closed.reserve(elems.size() * 2);
  for (const Elem& e : elems) {
    closed.push_back(e);
    closed.push_back(g.inv(e));
  }
  return GenSet(&g, std::move(closed));
}

GenSet GenSet::parse_lines(const Group& g, const std::string& text) {
  std::vector<Elem> elems;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    elems.push_back(g.parse(line.substr(a, b - a + 1)));
  }
  if (elems.empty()) throw IoError("no connection-set elements given");
  return GenSet(&g, std::move(elems));
}

int GenSet::index_of(const Elem& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

bool GenSet::bigon_free() const {
  for (const Elem& e : elems_) {
    Elem inv = group_->inv(e);
    if (index_.count(inv)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> GenSet::inverse_pair_classes() const {
  if (!symmetric_) throw ArgumentError("inverse pairing needs a symmetric set");
  std::vector<std::pair<int, int>> classes;
  std::vector<bool> seen(elems_.size(), false);
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (seen[i]) continue;
    int j = index_of(group_->inv(elems_[i]));
    seen[i] = seen[j] = true;
    classes.emplace_back(std::min<int>(i, j), std::max<int>(i, j));
  }
  return classes;
}

GenSet GenSet::with(const std::vector<Elem>& extra) const {
  std::vector<Elem> all = elems_;
  all.insert(all.end(), extra.begin(), extra.end());
  return GenSet(group_, std::move(all));
}

std::vector<std::string> GenSet::printed() const {
  std::vector<std::string> out;
  out.reserve(elems_.size());
  for (const Elem& e : elems_) out.push_back(group_->print(e));
  return out;
}

bool generates(const Group& g, const GenSet& s) {
  auto n = g.order();
  if (!n) return true;  // infinite: deferred to graph-side connectivity checks
  if (*n > 2000000) throw UnsupportedError("group too large for a generation check");
  std::unordered_set<Elem, ElemHash, ElemEq> seen;
  std::vector<Elem> frontier{g.identity()};
  seen.insert(g.identity());
  std::vector<Elem> steps = s.elems();
  if (!s.symmetric())
    for (const Elem& e : s.elems()) steps.push_back(g.inv(e));
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const Elem& v : frontier)
      for (const Elem& e : steps) {
        Elem w = g.mul(v, e);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return seen.size() == *n;
}

}  // namespace grr
